"""Exact colored Jones, Kashaev, WRT and Ohtsuki invariants from enhanced
Gauss diagrams, with an independent R-matrix evaluator as cross-check."""

from .diagram import EnhancedGaussDiagram, builtin, parse_egd
from .jones import colored_jones, jones_h_series, kashaev, state_term
from .ohtsuki import ohtsuki_series, phi_apply, phi_monomial, wrt_direct_check, wrt_theorem2
from .qarith import HSeries, LaurentPoly, MuPoly

__all__ = [
    "EnhancedGaussDiagram",
    "builtin",
    "parse_egd",
    "colored_jones",
    "jones_h_series",
    "kashaev",
    "state_term",
    "ohtsuki_series",
    "phi_apply",
    "phi_monomial",
    "wrt_direct_check",
    "wrt_theorem2",
    "HSeries",
    "LaurentPoly",
    "MuPoly",
]
