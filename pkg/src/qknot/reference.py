"""Closed formulas for the built-in knots, written directly as q-series.

These do not use diagrams or states and serve as independent references for
the state sum.
"""

from __future__ import annotations

from .qarith import LaurentPoly, reduce_mod_cyclotomic

q = LaurentPoly.q


def pochhammer(a: LaurentPoly, base: LaurentPoly, k: int) -> LaurentPoly:
    """``(a; base)_k = (1 - a)(1 - a base) ... (1 - a base^(k-1))``."""
    out = LaurentPoly.const(1)
    step = LaurentPoly.const(1)
    for _ in range(k):
        out = out * (1 - a * step)
        step = step * base
    return out


def trefoil_cyclotomic(mu: int) -> LaurentPoly:
    # q * sum_l q^(-(l+1) mu) (q^(1-mu); q)_l, the l-sum stops once a factor vanishes
    total = LaurentPoly()
    for l in range(mu):
        total = total + q(-(l + 1) * mu) * pochhammer(q(1 - mu), q(1), l)
    return total * q(1)


def trefoil_alternating(mu: int) -> LaurentPoly:
    total = LaurentPoly()
    for k in range(mu + 2):
        term = q(-k * (k + 3) // 2 - k * mu) * pochhammer(q(mu + 1), q(1), k) * pochhammer(q(mu - 1), q(-1), k)
        total = total + (term if k % 2 == 0 else -term)
    return total


def figure8(mu: int) -> LaurentPoly:
    total = LaurentPoly()
    for k in range(mu + 1):
        total = total + q(k * mu) * pochhammer(q(-mu - 1), q(-1), k) * pochhammer(q(1 - mu), q(1), k)
    return total


def trefoil_kashaev(K: int) -> LaurentPoly:
    total = LaurentPoly()
    for l in range(K):
        total = total + pochhammer(q(1), q(1), l)
    return reduce_mod_cyclotomic(total * q(1), K, unit="q")
