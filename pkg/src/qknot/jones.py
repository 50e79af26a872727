"""The Gauss-diagram state sum for the zero-framed colored Jones function."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .diagram import EnhancedGaussDiagram, c0_of_l, d_of_l, level_walk, s_vector, valid_states
from .qarith import (
    ASYM_MINUS,
    ASYM_PLUS,
    HSeries,
    LaurentPoly,
    MuCoefficient,
    MuPoly,
    general_binomial_series,
    q_binomial,
    reduce_mod_cyclotomic,
    to_h_series,
)

__all__ = [
    "StateTerm",
    "state_term",
    "colored_jones",
    "jones_h_series",
    "kashaev",
    "parallel_sum",
]

_KIND = {1: ASYM_PLUS, -1: ASYM_MINUS}


@dataclass(frozen=True)
class StateTerm:
    state: tuple[int, ...]
    value: MuPoly
    # pieces kept separately for the surgery formulas
    prefactor: LaurentPoly  # q^c0 * prod of q-binomials
    mu_part: MuPoly  # q^(d mu) * prod (q^(sigma(mu - s - p)) - 1)


def _zero_term(l) -> StateTerm:
    return StateTerm(tuple(l), MuPoly(), LaurentPoly(), MuPoly())


def state_term(D: EnhancedGaussDiagram, l: Sequence[int]) -> StateTerm:
    D._require_enhanced()
    l = tuple(l)
    ok, _ = level_walk(D, l)
    if not ok:
        return _zero_term(l)
    s = s_vector(D, l)
    pre = LaurentPoly.q(c0_of_l(D, l))
    for sj, lj, sig in zip(s, l, D.sigma):
        if lj:
            pre = pre * q_binomial(sj, lj, _KIND[sig])
    if pre.is_zero():
        return _zero_term(l)
    mu_part = MuPoly.monomial(d_of_l(D, l), 1)
    minus_one = LaurentPoly.const(-1)
    for sj, lj, sig in zip(s, l, D.sigma):
        for p in range(1, lj + 1):
            mu_part = mu_part * MuPoly({sig: LaurentPoly.q(-sig * (sj + p)), 0: minus_one})
    return StateTerm(l, mu_part * pre, pre, mu_part)


def parallel_sum(fn: Callable, items: Sequence, zero, workers: int = 1):
    """``sum(fn(x) for x in items)`` split over processes.

    Each chunk is summed in item order and chunk results are added in chunk
    order; with exact arithmetic the total does not depend on ``workers``.
    """
    items = list(items)
    if workers <= 1 or len(items) < 2:
        total = zero
        for x in items:
            total = total + fn(x)
        return total
    n = min(workers, len(items))
    chunks = [items[i::n] for i in range(n)]
    with ProcessPoolExecutor(max_workers=n) as pool:
        parts = list(pool.map(_chunk_sum, [(fn, ch, zero) for ch in chunks]))
    total = zero
    for p in parts:
        total = total + p
    return total


def _chunk_sum(args):
    fn, chunk, zero = args
    total = zero
    for x in chunk:
        total = total + fn(x)
    return total


class _JonesAt:
    # picklable callable for worker processes
    def __init__(self, D, mu):
        self.D, self.mu = D, mu

    def __call__(self, l):
        return state_term(self.D, l).value.evaluate(self.mu)


def colored_jones(D: EnhancedGaussDiagram, mu: int, workers: int = 1) -> LaurentPoly:
    """Zero-framed, unknot-normalised colored Jones polynomial in color ``mu``."""
    if mu < 1:
        raise ValueError(f"color must be >= 1, got {mu}")
    D._require_enhanced()
    states = list(valid_states(D, max_each=mu - 1))
    return parallel_sum(_JonesAt(D, mu), states, LaurentPoly(), workers)


def jones_h_series(D: EnhancedGaussDiagram, order: int) -> list[MuCoefficient]:
    """Coefficients of ``h^0..h^order`` of the Jones function as polynomials in mu."""
    if order < 0:
        raise ValueError("order must be >= 0")
    D._require_enhanced()
    acc = [MuCoefficient() for _ in range(order + 1)]
    for l in valid_states(D, max_total=order):
        for m, coeff in state_term(D, l).value.terms.items():
            cs = to_h_series(coeff, order).coeffs
            bs = _binomial_series(m, order)
            for i, ci in enumerate(cs):
                if ci:
                    for k in range(order + 1 - i):
                        acc[i + k] = acc[i + k] + bs[k] * ci
    return acc


@lru_cache(maxsize=None)
def _binomial_series(m: int, order: int) -> tuple[MuCoefficient, ...]:
    return tuple(general_binomial_series(m, 0, order))


def kashaev(D: EnhancedGaussDiagram, K: int) -> LaurentPoly:
    """Kashaev invariant: color ``K`` at a primitive ``K``-th root of unity,
    returned as the canonical representative modulo ``Phi_K(q)``."""
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    D._require_enhanced()
    total = LaurentPoly()
    for l in valid_states(D, max_each=K - 1):
        s = s_vector(D, l)
        term = LaurentPoly.q(c0_of_l(D, l))
        for sj, lj, sig in zip(s, l, D.sigma):
            for p in range(1, lj + 1):
                term = term * (LaurentPoly.q(-sig * p) - 1)
            term = term * q_binomial(sj, lj, ASYM_PLUS) * q_binomial(sj, lj, ASYM_MINUS)
        total = total + term
    return reduce_mod_cyclotomic(total, K, unit="q")
