"""Trace polynomials of free-group words in SL(2,C), character lifts in
ranks 2 and 3, and the numeric checks that tie them together."""

from .charvar import (NotConjugate, ReduciblePair, conjugator, inverting_element, is_irreducible,
                      is_irreducible_char, kappa_value, lift_char)
from .charvar3 import lift_char3, lift_char3_diagnostic, t123_roots, verify_fricke
from .freegroup import (Word, canonical_trace_key, concat, cyclic_reduce, free_reduce, invert,
                        parse_word)
from .polyring import LaurentPoly, Poly, poly_eval, poly_format, poly_parse, symmetrize_laurent
from .sl2 import Mat2, char8, companion, conjugate_to_companion, det_pencil, evaluate_word, tau
from .tracecalc import TraceTable, fricke_product_rhs, fricke_sum_rhs, kappa_poly, trace_poly

__version__ = "0.1.0"

__all__ = [
    "NotConjugate", "ReduciblePair", "conjugator", "inverting_element", "is_irreducible",
    "is_irreducible_char", "kappa_value", "lift_char",
    "lift_char3", "lift_char3_diagnostic", "t123_roots", "verify_fricke",
    "Word", "canonical_trace_key", "concat", "cyclic_reduce", "free_reduce", "invert", "parse_word",
    "LaurentPoly", "Poly", "poly_eval", "poly_format", "poly_parse", "symmetrize_laurent",
    "Mat2", "char8", "companion", "conjugate_to_companion", "det_pencil", "evaluate_word", "tau",
    "TraceTable", "fricke_product_rhs", "fricke_sum_rhs", "kappa_poly", "trace_poly",
]
