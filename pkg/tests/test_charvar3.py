import pytest

from conftest import close
from sl2traces.charvar import kappa_value, slice_pair, zeta_root
from sl2traces.charvar3 import (lift_char3, lift_char3_diagnostic, particular_solution,
                                product_rhs, solve_underdetermined, sum_rhs, t123_roots,
                                trace_condition_rows, verify_fricke)
from sl2traces.checks import random_complex, random_six_tuple
from sl2traces.sl2 import I, Mat2, char8, commutator_bracket, companion, det_pencil, random_sl2

from test_tracecalc import QUATERNION


def scale(c):
    return 1 + max(abs(v) for v in c) ** 4


def test_verify_fricke_examples(rng):
    assert verify_fricke((0,) * 6 + (-2, 2)) == (0, 0)
    assert verify_fricke((2,) * 8) == (0, 0)
    assert verify_fricke(char8(*QUATERNION)) == (0, 0)
    for _ in range(300):
        c = char8(random_sl2(rng), random_sl2(rng), random_sl2(rng))
        r1, r2 = verify_fricke(c)
        assert abs(r1) <= 1e-8 * scale(c) and abs(r2) <= 1e-8 * scale(c)
    with pytest.raises(ValueError):
        verify_fricke((1, 2, 3))


def test_roots_examples():
    assert t123_roots((0,) * 6) == (2, -2)
    r = t123_roots((2,) * 6)
    assert abs(r[0] - 2) <= 1e-7 and abs(r[1] - 2) <= 1e-7


def test_roots_order_and_vieta(rng):
    for _ in range(300):
        s = [random_complex(rng) for _ in range(6)]
        r1, r2 = t123_roots(s)
        assert (r1.real, r1.imag) >= (r2.real, r2.imag)
        assert abs(r1 + r2 - sum_rhs(s)) <= 1e-9 * scale(s)
        assert abs(r1 * r2 - product_rhs(s)) <= 1e-9 * scale(s)
        for r in (r1, r2):
            c = list(s) + [r, sum_rhs(s) - r]
            assert abs(verify_fricke(c)[1]) <= 1e-9 * scale(s)


def six_traces_ok(triple, s, tol):
    c = char8(*triple)
    return max(abs(a - b) for a, b in zip(c[:6], s)) <= tol and \
        max(abs(m.det() - 1) for m in triple) <= 1e-9


def test_lift3_trivial_tuple():
    lift = lift_char3_diagnostic((2,) * 6)
    assert lift.branch == "bothplus"
    assert lift.A1 == I and lift.A2 == I and lift.A3 == companion(2)
    assert char8(*lift.triple)[:6] == (2,) * 6


def test_lift3_zero_tuple():
    lift = lift_char3_diagnostic((0,) * 6)
    assert lift.branch == "irreducible"
    assert six_traces_ok(lift.triple, (0,) * 6, 1e-8)
    t123 = char8(*lift.triple)[6]
    assert min(abs(t123 - 2), abs(t123 + 2)) <= 1e-8


@pytest.mark.parametrize("kind", ["generic", "t12_pm2", "reducible"])
def test_lift3_round_trip(rng, kind):
    for _ in range(200):
        s = random_six_tuple(rng, kind)
        triple = lift_char3(s)
        assert six_traces_ok(triple, s, 1e-7), s
        c = char8(*triple)
        roots = t123_roots(s)
        assert min(abs(c[6] - r) for r in roots) <= 1e-7 * scale(s)
        r1, r2 = verify_fricke(c)
        assert abs(r1) <= 1e-8 * scale(c) and abs(r2) <= 1e-8 * scale(c)


def test_reducible_branches():
    a1, a2 = 2.0, 3.0
    t1, t2 = a1 + 1 / a1, a2 + 1 / a2
    both = lift_char3_diagnostic((t1, t2, 1.5, a1 * a2 + 1 / (a1 * a2), 0.5, -1))
    mixed = lift_char3_diagnostic((t1, t2, 1.5, a1 / a2 + a2 / a1, 0.5, -1))
    assert both.branch == "bothplus" and mixed.branch == "plusminus"
    assert both.A3 == companion(1.5) == mixed.A3
    for lift in (both, mixed):
        assert lift.A1.c == 0 and lift.A2.c == 0
        assert six_traces_ok(lift.triple, char8(*lift.triple)[:6], 0)


def test_irr_tol_selects_branch():
    s = (2, 2, 1, 2 + 1e-3, 0.5, 0.25)  # kappa - 2 = 1e-6
    assert lift_char3_diagnostic(s).branch == "irreducible"
    assert lift_char3_diagnostic(s, irr_tol=1e-5).branch != "irreducible"
    assert six_traces_ok(lift_char3(s), s, 1e-6)
    # the triangular form can only realize a reducible t12, here 2
    c = char8(*lift_char3(s, irr_tol=1e-5))
    assert c[3] == 2 and max(abs(a - b) for a, b in zip(c[:6], s)) <= 1.001e-3


def branch_a_pieces(s):
    t1, t2, t3, t12, t23, t13 = s
    A1, A2 = slice_pair(t1, t2, t12)
    W0 = particular_solution(A1, A2, t3, t23, t13)
    return A1, A2, W0, commutator_bracket(A1, A2)


def test_pencil_leading_coefficient(rng):
    for _ in range(200):
        s = random_six_tuple(rng, ("generic", "t12_pm2")[int(rng.integers(0, 2))])
        A1, A2, W0, K = branch_a_pieces(s)
        c2 = det_pencil(W0, K)[2]
        assert abs(c2 - (2 - kappa_value(s[0], s[1], s[3]))) <= 1e-8 * scale(s)


def parallel(U, V, tol):
    u = [U.a, U.b, U.c, U.d]
    v = [V.a, V.b, V.c, V.d]
    # all 2x2 minors of the 2x4 matrix [u; v] vanish
    m = max(abs(u[i] * v[j] - u[j] * v[i]) for i in range(4) for j in range(i + 1, 4))
    return m <= tol * (1 + U.norm()) * (1 + V.norm())


def test_kernel_direction_and_closed_form(rng):
    checked = 0
    for _ in range(300):
        s = [random_complex(rng) for _ in range(6)]
        t1, t2, t3, t12, t23, t13 = s
        A1, A2, W0, K = branch_a_pieces(s)
        xi = zeta_root(t12)
        if abs(xi * xi - 1) <= 1e-3:
            continue
        a = t13 - t1 * t3
        W1 = Mat2(t3, (a * xi + t23) * xi / (xi * xi - 1), (a + t23 * xi) / (xi * xi - 1), 0)
        for A, t in ((I, t3), (A2, t23), (A1, t13)):
            assert abs((A @ W1).trace() - t) <= 1e-9 * scale(s)
        assert parallel(W1 - W0, K, 1e-8)
        checked += 1
    assert checked > 250


def test_root_choice_is_smaller_magnitude(rng):
    for _ in range(100):
        s = [random_complex(rng) for _ in range(6)]
        A1, A2, W0, K = branch_a_pieces(s)
        A3 = lift_char3(s)[2]
        c0, c1, c2 = det_pencil(W0, K)
        disc = (c1 * c1 - 4 * c2 * (c0 - 1)) ** 0.5
        roots = [(-c1 + disc) / (2 * c2), (-c1 - disc) / (2 * c2)]
        small = min(roots, key=abs)
        assert close(A3, W0 + K * small, 1e-7 * (1 + abs(small)) * (1 + K.norm()))


def test_solve_underdetermined():
    rows = [[1, 0, 0, 1], [0, 1, 1, 0], [1, 1, 0, 0]]
    sol = solve_underdetermined(rows, [2, 3, 4])
    for r, b in zip(rows, [2, 3, 4]):
        assert abs(sum(x * y for x, y in zip(r, sol)) - b) <= 1e-14
    # a zero column is left free
    sol = solve_underdetermined([[0, 1, 0], [0, 0, 2]], [1, 4])
    assert sol == [0, 1, 2]
    with pytest.raises(ValueError):
        solve_underdetermined([[1, 1], [2, 2]], [1, 3])


def test_trace_condition_rows_match_traces(rng):
    A1, A2 = random_sl2(rng), random_sl2(rng)
    W = random_sl2(rng)
    w = [W.a, W.b, W.c, W.d]
    vals = [sum(x * y for x, y in zip(r, w)) for r in trace_condition_rows(A1, A2)]
    expected = [W.trace(), (A2 @ W).trace(), (A1 @ W).trace()]
    assert max(abs(a - b) for a, b in zip(vals, expected)) <= 1e-12
