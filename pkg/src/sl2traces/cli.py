"""Command line front end.

Exit status: 0 on success, 1 for domain failures (reducible pair, not
conjugate, failed verification), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import re
import sys
from typing import Sequence

from . import charvar, charvar3, checks
from .freegroup import RankError, WordSyntaxError, canonical_trace_key, cyclic_reduce, parse_word
from .polyring import poly_eval, poly_format
from .sl2 import Mat2, mat_from_json
from .tracecalc import TraceTable, trace_poly

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def fmt_real(v: float) -> str:
    return format(v + 0.0, ".17g")


def fmt_complex(v: complex) -> str:
    v = complex(v)
    im = v.imag + 0.0
    sign = "-" if im < 0 else "+"
    return f"{fmt_real(v.real)} {sign} {fmt_real(abs(im))}i"


def json_text(obj) -> str:
    """JSON with every float written to 17 significant digits."""
    if isinstance(obj, complex):
        return json_text([obj.real, obj.imag])
    if isinstance(obj, float):
        return fmt_real(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(json_text(o) for o in obj) + "]"
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {json_text(v)}" for k, v in obj.items()) + "}"
    return json.dumps(obj)


def mat_json(m: Mat2) -> list:
    return [[complex(e) for e in row] for row in m.rows()]


def fmt_mat(m: Mat2) -> str:
    return "[[" + ", ".join(fmt_complex(e) for e in (m.a, m.b)) + "], [" + \
        ", ".join(fmt_complex(e) for e in (m.c, m.d)) + "]]"


def parse_complex(text: str) -> complex:
    """Accept ``a``, ``a+bi``, ``a-bi``, ``bi`` (``j`` works as well)."""
    s = text.strip().replace(" ", "").replace("i", "j").replace("J", "j")
    try:
        v = complex(s)
    except ValueError:
        raise UsageError(f"not a complex number: {text!r}") from None
    if v != v or abs(v) == float("inf"):
        raise UsageError(f"non-finite value: {text!r}")
    return v


def parse_tuple(text: str, n: int) -> list:
    parts = text.split(",")
    if len(parts) != n:
        raise UsageError(f"expected {n} comma-separated values, got {len(parts)}")
    return [parse_complex(p) for p in parts]


def _values(args: Sequence[str], n: int) -> list:
    flat = [p for a in args for p in a.split(",") if p.strip()]
    if len(flat) != n:
        raise UsageError(f"expected {n} values, got {len(flat)}")
    return [parse_complex(p) for p in flat]


def load_json(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}: malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from None


def _pair(obj, what: str, det_tol: float) -> tuple:
    if not (isinstance(obj, list) and len(obj) == 2):
        raise UsageError(f"{what}: expected an array of two matrices")
    try:
        pair = tuple(mat_from_json(m) for m in obj)
    except (ValueError, TypeError) as e:
        raise UsageError(f"{what}: {e}") from None
    for k, m in enumerate(pair):
        if not m.is_sl2(det_tol):
            raise UsageError(f"{what}[{k}]: determinant {fmt_complex(m.det())} is not 1")
    return pair


# subcommands

def cmd_trace(a, out, table):
    if a.rank != 2:
        raise UsageError("trace polynomials are rank-2 only; general rank-3 rewriting is not supported")
    w = _word(a.word, 2)
    print(poly_format(trace_poly(w, table)), file=out)


def cmd_eval(a, out, table):
    w = _word(a.word, 2)
    x, y, z = parse_tuple(a.at, 3)
    print(fmt_complex(poly_eval(trace_poly(w, table), {"x": x, "y": y, "z": z})), file=out)


def cmd_kappa(a, out, table):
    print(fmt_complex(charvar.kappa_value(*_values(a.values, 3))), file=out)


def cmd_lift(a, out, table):
    xi, eta = charvar.lift_char(*_values(a.values, 3))
    if a.json:
        print(json_text([mat_json(xi), mat_json(eta)]), file=out)
    else:
        print(f"xi  = {fmt_mat(xi)}", file=out)
        print(f"eta = {fmt_mat(eta)}", file=out)


def cmd_lift3(a, out, table):
    s = _values(a.values, 6)
    lift = charvar3.lift_char3_diagnostic(s, irr_tol=a.irr_tol)
    roots = charvar3.t123_roots(s)
    if a.json:
        print(json_text({"triple": [mat_json(m) for m in lift.triple], "branch": lift.branch,
                         "t123_roots": list(roots)}), file=out)
    else:
        for name, m in zip(("A1", "A2", "A3"), lift.triple):
            print(f"{name} = {fmt_mat(m)}", file=out)
        print(f"branch = {lift.branch}", file=out)
        print(f"t123 roots = {fmt_complex(roots[0])}, {fmt_complex(roots[1])}", file=out)


def cmd_roots3(a, out, table):
    roots = charvar3.t123_roots(_values(a.values, 6))
    if a.json:
        print(json_text(list(roots)), file=out)
    else:
        for r in roots:
            print(fmt_complex(r), file=out)


def cmd_conjugate(a, out, table):
    obj = load_json(a.path)
    if not (isinstance(obj, list) and len(obj) == 2):
        raise UsageError(f"{a.path}: expected [[xi, eta], [xi', eta']]")
    p = _pair(obj[0], f"{a.path}[0]", a.det_tol)
    q = _pair(obj[1], f"{a.path}[1]", a.det_tol)
    try:
        g = charvar.conjugator(p, q, char_tol=a.oracle_tol, irr_tol=a.irr_tol)
    except charvar.ReduciblePair:
        print("REDUCIBLE", file=out)
        return EXIT_DOMAIN
    except charvar.NotConjugate:
        print("NOT_CONJUGATE", file=out)
        return EXIT_DOMAIN
    print(json_text(mat_json(g)) if a.json else f"g = {fmt_mat(g)}", file=out)


def cmd_invol(a, out, table):
    xi, eta = _pair(load_json(a.path), a.path, a.det_tol)
    if not charvar.is_irreducible(xi, eta, a.irr_tol):
        print("REDUCIBLE", file=out)
        return EXIT_DOMAIN
    try:
        g = charvar.inverting_element(xi, eta)
    except charvar.ReduciblePair:
        print("REDUCIBLE", file=out)
        return EXIT_DOMAIN
    print(json_text(mat_json(g)) if a.json else f"g = {fmt_mat(g)}", file=out)


def cmd_verify(a, out, table):
    tol = checks.Tolerances(det_tol=a.det_tol, oracle_tol=a.oracle_tol, irr_tol=a.irr_tol)
    results = checks.run_suite(a.suite, a.trials, a.seed, tol, table)
    if a.json:
        print(json_text([{"name": r.name, "residual": r.residual, "tol": r.tol, "ok": r.ok}
                         for r in results]), file=out)
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            print(f"{r.name:<{width}}  {fmt_real(r.residual)}  tol {r.tol:g}  "
                  f"{'ok' if r.ok else 'FAIL'}", file=out)
    return EXIT_OK if all(r.ok for r in results) else EXIT_DOMAIN


def cmd_reduce(a, out, table):
    w = _word(a.word, a.rank)
    core, conj = cyclic_reduce(w)
    print(f"reduced = {w}", file=out)
    print(f"core = {core}", file=out)
    print(f"conjugator = {conj}", file=out)
    print(f"key = {canonical_trace_key(w)}", file=out)


def _word(text: str, rank: int):
    try:
        return parse_word(text, rank)
    except (WordSyntaxError, RankError) as e:
        raise UsageError(str(e)) from None


def _positive_float(s: str) -> float:
    v = float(s)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _positive_int(s: str) -> int:
    v = int(s)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _seed(s: str) -> int:
    v = int(s)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--det-tol", type=_positive_float, default=1e-9,
                        help="tolerance on |det - 1| for input matrices (default 1e-9)")
    common.add_argument("--oracle-tol", type=_positive_float, default=1e-8,
                        help="tolerance for equality of trace data (default 1e-8)")
    common.add_argument("--irr-tol", type=_positive_float, default=1e-8,
                        help="|kappa - 2| at or below this counts as reducible (default 1e-8)")
    common.add_argument("--memo-cap", type=_positive_int, default=None,
                        help="maximum number of memoised trace polynomials")

    p = argparse.ArgumentParser(prog="sl2traces",
                                description="Trace polynomials and character varieties of free groups in SL(2,C).")
    sub = p.add_subparsers(dest="cmd", required=True, metavar="COMMAND")

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_, description=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("trace", cmd_trace, "print the trace polynomial of a rank-2 word")
    sp.add_argument("word", help='word such as "XYX^-1Y^-1"')
    sp.add_argument("--rank", type=int, choices=(2, 3), default=2, help="word rank (only 2 is supported)")

    sp = add("eval", cmd_eval, "evaluate the trace polynomial of a word at (x, y, z)")
    sp.add_argument("word", help="rank-2 word")
    sp.add_argument("--at", required=True, metavar="X,Y,Z", help="comma-separated complex values")

    sp = add("kappa", cmd_kappa, "evaluate x^2 + y^2 + z^2 - xyz - 2")
    sp.add_argument("values", nargs="+", metavar="V", help="x y z (complex, e.g. 1+2i)")

    sp = add("lift", cmd_lift, "matrix pair with traces (x, y, z)")
    sp.add_argument("values", nargs="+", metavar="V", help="x y z")

    sp = add("lift3", cmd_lift3, "matrix triple with traces t1 t2 t3 t12 t23 t13")
    sp.add_argument("values", nargs="+", metavar="T", help="t1 t2 t3 t12 t23 t13")

    sp = add("roots3", cmd_roots3, "the two possible values of t123 over six traces")
    sp.add_argument("values", nargs="+", metavar="T", help="t1 t2 t3 t12 t23 t13")

    sp = add("conjugate", cmd_conjugate, "find g with g.(xi, eta) = (xi', eta')")
    sp.add_argument("path", help="JSON file [[xi, eta], [xi', eta']]")

    sp = add("invol", cmd_invol, "element conjugating (xi, eta) to (xi^-1, eta^-1)")
    sp.add_argument("path", help="JSON file [xi, eta]")

    sp = add("verify", cmd_verify, "run randomized identity checks")
    sp.add_argument("--suite", choices=("basic", "fricke", "all"), default="all")
    sp.add_argument("--trials", type=_positive_int, default=100, help="trials per check (default 100)")
    sp.add_argument("--seed", type=_seed, default=0, help="random seed (default 0)")

    sp = add("reduce", cmd_reduce, "show reduced and cyclically reduced forms and the trace key")
    sp.add_argument("word")
    sp.add_argument("--rank", type=int, choices=(2, 3), default=2)
    return p


_NEG_NUMBER = re.compile(r"^-(\d|\.\d|[ij]\b)")


def _protect_negatives(argv: list) -> list:
    # argparse would take "-1+2i" for an option
    return [" " + s if _NEG_NUMBER.match(s) else s for s in argv]


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(_protect_negatives(argv))
    except SystemExit as e:
        return int(e.code or 0)
    table = TraceTable(cap=args.memo_cap)
    try:
        status = args.fn(args, out, table)
    except UsageError as e:
        print(f"sl2traces {args.cmd}: error: {e}", file=err)
        return EXIT_USAGE
    return EXIT_OK if status is None else status


def main() -> None:
    sys.exit(run())
