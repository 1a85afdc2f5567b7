import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import close
from sl2traces.charvar import kappa_value
from sl2traces.freegroup import parse_word
from sl2traces.sl2 import (ZERO, CentralElement, I, Mat2, SingularMatrix, char8, commutator_bracket,
                           companion, conjugate_to_companion, det_pencil, dist, evaluate_word,
                           mat_from_json, mat_to_json, random_sl2, solve_quadratic, tau)

XI = Mat2(1, 1, 0, 1)
ETA = Mat2(1, 0, 1, 1)

finite = st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False)
mats = st.builds(Mat2, finite, finite, finite, finite)


def test_identity():
    assert I.trace() == 2 and I.det() == 1


def test_bracket_of_unipotent_pair():
    assert commutator_bracket(XI, ETA) == Mat2(1, 0, 0, -1)


def test_inverse(rng):
    for _ in range(200):
        g = random_sl2(rng)
        assert close(g @ g.inverse(), I, 1e-12)
        assert abs(g.trace() - g.inverse().trace()) <= 1e-12
    assert Mat2(2, 0, 0, 3).inverse() == Mat2(0.5, 0, 0, 1 / 3)


def test_singular_inverse():
    with pytest.raises(SingularMatrix):
        Mat2(1, 2, 2, 4).inverse()


def test_rejects_non_finite():
    with pytest.raises(ValueError):
        Mat2(float("nan"), 0, 0, 1)
    with pytest.raises(ValueError):
        Mat2(1, complex(0, float("inf")), 0, 1)


def test_evaluate_word_examples():
    g = Mat2(2, 1, 3, 2)
    assert close(evaluate_word(parse_word("XY^-1"), (g, g)), I, 1e-12)
    assert evaluate_word(parse_word("XYX^-1Y^-1"), (XI, ETA)).trace() == 3
    assert evaluate_word(parse_word("X^2"), (companion(3), I)).trace() == 7
    assert evaluate_word(parse_word(""), (XI, ETA)) == I
    assert evaluate_word(parse_word("XYZ", rank=3), {1: XI, 2: ETA, 3: XI}) == XI @ ETA @ XI


def test_tau_examples():
    assert tau(I, I) == (2, 2, 2)
    assert tau(XI, ETA) == (2, 2, 3)
    assert kappa_value(2, 2, 3) == 3


def test_char8_is_ordered_as_documented(rng):
    A, B, C = (random_sl2(rng) for _ in range(3))
    c = char8(A, B, C)
    assert c[3] == (A @ B).trace() and c[4] == (B @ C).trace() and c[5] == (A @ C).trace()
    assert c[6] == (A @ B @ C).trace() and c[7] == (A @ C @ B).trace()


def test_random_sl2_determinism_and_det():
    a = random_sl2(np.random.default_rng(7))
    assert a == random_sl2(np.random.default_rng(7))
    assert a != random_sl2(np.random.default_rng(8))
    rng = np.random.default_rng(1)
    worst = max(abs(random_sl2(rng).det() - 1) for _ in range(10_000))
    assert worst <= 1e-12


def test_companion():
    assert companion(0) == Mat2(0, -1, 1, 0)
    assert companion(2.5 - 1j).trace() == 2.5 - 1j
    assert companion(2.5 - 1j).det() == 1
    # companion(2) - I is nilpotent and nonzero: a single Jordan block at 1
    n = companion(2) - I
    assert n != ZERO and n @ n == ZERO


def test_conjugate_to_companion_examples():
    for g in (companion(5), Mat2(2, 0, 0, 0.5), Mat2(1, 1, 0, 1), Mat2(-1, 3, 0, -1)):
        h = conjugate_to_companion(g)
        assert h.is_sl2()
        assert close(h @ g @ h.inverse(), companion(g.trace()), 1e-8)
    for g in (I, -I):
        with pytest.raises(CentralElement):
            conjugate_to_companion(g)


def test_conjugate_to_companion_random(rng):
    for _ in range(300):
        g = random_sl2(rng)
        h = conjugate_to_companion(g)
        scale = 1 + max(abs(e) for e in (g.a, g.b, g.c, g.d)) ** 2
        assert dist(h @ g @ h.inverse(), companion(g.trace())) <= 1e-8 * scale


def test_det_pencil_examples(rng):
    W = Mat2(1, 2, 3, 4)
    assert det_pencil(W, ZERO) == (W.det(), 0, 0)
    assert det_pencil(I, I) == (1, 2, 1)
    for _ in range(200):
        W0, K = (Mat2(*(complex(*rng.normal(size=2)) for _ in range(4))) for _ in range(2))
        c0, c1, c2 = det_pencil(W0, K)
        for s in (-1, 0.5, 2):
            assert abs((W0 + K * s).det() - (c0 + c1 * s + c2 * s * s)) <= 1e-10 * (1 + abs(c0) + abs(c1) + abs(c2)) * 4


def test_solve_quadratic():
    r = sorted(solve_quadratic(1, -3, 2), key=lambda v: v.real)
    assert r == [1, 2]
    # the small root of x^2 - 1e8 x + 1 survives the cancellation
    small = min(solve_quadratic(1, -1e8, 1), key=abs)
    assert abs(small - 1e-8) <= 1e-20
    assert solve_quadratic(1, 0, 0) == (0, 0)
    r = solve_quadratic(1, 0, 1)
    assert {complex(round(v.real, 12), round(v.imag, 12)) for v in r} == {1j, -1j}


@given(mats)
def test_cayley_hamilton(m):
    res = m @ m - m * m.trace() + I * m.det()
    assert res.norm() <= 1e-12 * (1 + m.norm() ** 2)


def test_trace_identities(rng):
    for _ in range(500):
        xi, eta = random_sl2(rng), random_sl2(rng)
        assert close(xi + xi.inverse(), I * xi.trace(), 1e-10)
        assert abs((xi @ eta).trace() + (xi @ eta.inverse()).trace() - xi.trace() * eta.trace()) <= 1e-10
        k = kappa_value(*tau(xi, eta))
        assert abs(commutator_bracket(xi, eta).det() - (2 - k)) <= 1e-8
        comm = xi @ eta @ xi.inverse() @ eta.inverse()
        assert abs(comm.trace() - k) <= 1e-8


@given(mats)
def test_json_round_trip_is_exact(m):
    import json
    from sl2traces.cli import json_text, mat_json
    assert mat_from_json(json.loads(json_text(mat_json(m)))) == m
    assert mat_from_json(mat_to_json(m)) == m


def test_mat_from_json_errors():
    for bad in ([[1, 2], [3]], [[[1, 0], [0, 0]], [[0, 0], "x"]], "nope"):
        with pytest.raises((ValueError, TypeError)):
            mat_from_json(bad)
