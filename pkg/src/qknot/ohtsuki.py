"""Integer homology spheres from +-1 surgery on a knot: WRT values at roots
of unity, the Ohtsuki series, and audits of the divisibility and growth
claims that make the cyclotomic expansion work."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .diagram import EnhancedGaussDiagram, c0_of_l, d_of_l, linking_coefficients, s_vector, valid_states
from .jones import colored_jones, parallel_sum, state_term
from .qarith import (
    HSeries,
    LaurentPoly,
    MuPoly,
    angle_factorial,
    cyclotomic,
    exact_div,
    q_integer,
    reduce_mod_cyclotomic,
    to_h_series,
)

__all__ = [
    "IntegralityViolation",
    "OracleMismatch",
    "OhtsukiSeries",
    "WrtValue",
    "AuditRecord",
    "AuditReport",
    "phi_monomial",
    "phi_apply",
    "ohtsuki_series",
    "wrt_theorem2",
    "wrt_direct_check",
    "lemma_divisibility_audit",
    "bounds_audit",
    "congruence_probe",
    "lemma_grid",
    "h_power_audit",
    "h_valuation",
    "combined_divisor",
]


class IntegralityViolation(ArithmeticError):
    pass


class OracleMismatch(AssertionError):
    pass


def _check_framing(f):
    if f not in (1, -1):
        raise ValueError(f"framing must be +1 or -1, got {f}")


@lru_cache(maxsize=None)
def phi_monomial(m: int, f: int) -> LaurentPoly:
    """Contribution of ``q^(m mu)`` to the surgery invariant.

    ``(q^(-f(m+1)^2) + q^(-f(m-1)^2) - 2 q^(-f m^2)) / (2 q^-f - 2)``.
    Coefficients lie in ``Z/2`` in general.
    """
    _check_framing(f)
    num = LaurentPoly.q(-f * (m + 1) ** 2) + LaurentPoly.q(-f * (m - 1) ** 2) - LaurentPoly.q(-f * m * m) * 2
    return exact_div(num, (LaurentPoly.q(-f) - 1) * 2)


def phi_apply(P: MuPoly, f: int) -> LaurentPoly:
    out = LaurentPoly()
    for m, c in P.terms.items():
        out = out + c * phi_monomial(m, f)
    return out


@lru_cache(maxsize=None)
def _phi_series(m: int, f: int, order: int) -> HSeries:
    return to_h_series(phi_monomial(m, f), order)


@dataclass(frozen=True)
class OhtsukiSeries:
    series: HSeries
    framing: int
    diagram: EnhancedGaussDiagram
    order: int

    def __post_init__(self):
        if not self.series.is_integral():
            raise IntegralityViolation(f"non-integral Ohtsuki coefficients {self.series}")
        if self.series.coeffs[0] != 1:
            raise IntegralityViolation(f"lambda_0 = {self.series.coeffs[0]}, expected 1")

    @property
    def coefficients(self) -> list[int]:
        return [int(c) for c in self.series.coeffs]


class _StateSeries:
    def __init__(self, D, f, order):
        self.D, self.f, self.order = D, f, order

    def __call__(self, l):
        term = state_term(self.D, l)
        total = HSeries.zero(self.order)
        for m, c in term.value.terms.items():
            total = total + to_h_series(c, self.order) * _phi_series(m, self.f, self.order)
        return total


def ohtsuki_series(D: EnhancedGaussDiagram, f: int, order: int, workers: int = 1) -> OhtsukiSeries:
    """``lambda_0 .. lambda_order`` of the Ohtsuki series of ``f``-surgery on ``D``.

    A state contributes only from ``h^ceil(sum l / 2)`` on, so states with
    ``sum l <= 2 * order`` suffice.
    """
    _check_framing(f)
    if order < 0:
        raise ValueError("order must be >= 0")
    D._require_enhanced()
    states = list(valid_states(D, max_total=2 * order))
    series = parallel_sum(_StateSeries(D, f, order), states, HSeries.zero(order), workers)
    return OhtsukiSeries(series, f, D, order)


def _theorem2_sum(D: EnhancedGaussDiagram, f: int, K: int) -> LaurentPoly:
    total = LaurentPoly()
    for l in valid_states(D, max_each=K - 1):
        term = state_term(D, l)
        if term.value.is_zero():
            continue
        total = total + term.prefactor * phi_apply(term.mu_part, f)
    return total


def _check_level(K):
    if K < 1 or K % 2 == 0:
        raise ValueError(f"level K must be an odd positive integer, got {K}")


def _reduced_sum(D, f, K):
    return reduce_mod_cyclotomic(_theorem2_sum(D, f, K), K, unit="q")


def wrt_theorem2(D: EnhancedGaussDiagram, f: int, K: int) -> LaurentPoly:
    """WRT invariant at a primitive ``K``-th root of unity ``q`` as the canonical
    representative modulo ``Phi_K(q)``."""
    _check_framing(f)
    _check_level(K)
    D._require_enhanced()
    out = _reduced_sum(D, f, K)
    if not out.is_integral():
        raise IntegralityViolation(f"WRT representative {out} is not integral")
    return out


@dataclass(frozen=True)
class WrtValue:
    level: int
    framing: int
    representative: LaurentPoly  # in u, reduced mod Phi_4K(u)
    value_q: LaurentPoly  # the same value in q, reduced mod Phi_K(q)
    numerator: LaurentPoly
    denominator: LaurentPoly
    residual: LaurentPoly
    passed: bool

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "framing": self.framing,
            "representative": self.representative.to_json(),
            "value_q": self.value_q.to_json(),
            "residual": self.residual.to_json(),
            "pass": self.passed,
        }


def wrt_direct_check(D: EnhancedGaussDiagram, f: int, K: int, raise_on_mismatch: bool = True) -> WrtValue:
    """Check ``Z * sum q^(f mu^2/4)[mu]^2 == sum q^(f mu^2/4)[mu]^2 J'(mu)`` in
    ``Z[u]/Phi_4K(u)``, with ``Z`` from :func:`wrt_theorem2` and ``J'`` from
    :func:`colored_jones` at ``mu = 1 .. K-1``."""
    _check_framing(f)
    _check_level(K)
    if K < 3:
        raise ValueError("the direct check needs K >= 3")
    D._require_enhanced()
    # integrality is checked after the comparison so that a broken diagram
    # shows up as a mismatch first
    Z = _reduced_sum(D, f, K)
    num = LaurentPoly()
    den = LaurentPoly()
    for mu in range(1, K):
        w = LaurentPoly.u(f * mu * mu) * q_integer(mu) ** 2
        den = den + w
        num = num + w * colored_jones(D, mu)
    num = reduce_mod_cyclotomic(num, 4 * K)
    den = reduce_mod_cyclotomic(den, 4 * K)
    residual = reduce_mod_cyclotomic(num - Z * den, 4 * K)
    if den.is_zero():
        raise ArithmeticError(f"Gauss sum vanishes at K = {K}")
    rep = reduce_mod_cyclotomic(Z, 4 * K)
    value = WrtValue(K, f, rep, Z, num, den, residual, residual.is_zero())
    if raise_on_mismatch and not value.passed:
        raise OracleMismatch(f"K={K}, f={f}: residual {residual}")
    if value.passed and not Z.is_integral():
        raise IntegralityViolation(f"WRT representative {Z} is not integral")
    return value


# ---------------------------------------------------------------------------
# audits


@dataclass(frozen=True)
class AuditRecord:
    check: str
    location: tuple[int, ...]
    bound: object
    observed: object
    passed: bool

    def to_json(self) -> dict:
        def conv(x):
            if isinstance(x, Fraction):
                return str(x)
            if isinstance(x, LaurentPoly):
                return str(x)
            return x

        return {
            "check": self.check,
            "location": list(self.location),
            "bound": conv(self.bound),
            "observed": conv(self.observed),
            "pass": self.passed,
        }


@dataclass
class AuditReport:
    records: list[AuditRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> list[AuditRecord]:
        return [r for r in self.records if not r.passed]

    def __add__(self, other: "AuditReport") -> "AuditReport":
        return AuditReport(self.records + other.records)

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.records]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)


def h_valuation(p: LaurentPoly, cap: int) -> int:
    """Order of vanishing of ``p`` at ``q = 1``, capped at ``cap``."""
    if p.is_zero():
        return cap
    v = to_h_series(p, cap).valuation()
    return cap if v is None else v


def lemma_divisibility_audit(D: EnhancedGaussDiagram, f: int, l) -> AuditReport:
    """Divisibility of the surgery image of one state term by
    ``h^ceil(sum l / 2)`` and by ``<max l>!``.

    A single term may have coefficients in ``Z/2``; the quotient by
    ``<max l>!`` must not need any further denominator.
    """
    _check_framing(f)
    l = tuple(l)
    term = state_term(D, l)
    value = term.prefactor * phi_apply(term.mu_part, f) if not term.value.is_zero() else LaurentPoly()
    need = -(-sum(l) // 2)
    got = h_valuation(value, need)
    recs = [AuditRecord("h_divisibility", l, need, got, got >= need)]
    top = max(l) if l else 0
    divisor = angle_factorial(top)
    try:
        quot = exact_div(value, divisor)
        ok = value.denominator % quot.denominator == 0
        observed = "divisible" if ok else f"quotient denominator {quot.denominator}"
    except ArithmeticError:
        ok, observed = False, "not divisible"
    recs.append(AuditRecord("angle_factorial_divisibility", l, f"<{top}>!", observed, ok))
    both = _divides(value, combined_divisor(need, top))
    recs.append(AuditRecord("combined_divisibility", l, f"h^{need} <{top}>!/h", both, both))
    return AuditReport(recs)


def _alpha_beta(D, l):
    s = s_vector(D, l)
    pts = {(d_of_l(D, l), c0_of_l(D, l))}
    for sj, lj, sig in zip(s, l, D.sigma):
        for p in range(1, lj + 1):
            pts |= {(a + sig, b - sig * (sj + p)) for a, b in pts}
    return pts


def bounds_audit(D: EnhancedGaussDiagram, f: int, order: int) -> AuditReport:
    """Exponent bounds for every ``q^(alpha mu + beta)`` met in the order-``order``
    enumeration (``sum l <= 2 order``), before the surgery map."""
    _check_framing(f)
    N = order
    qmax = max((abs(x) for x in linking_coefficients(D)), default=0)
    a_bound = 2 * N * (1 + qmax) + Fraction(D.b, 2)
    b_bound = (16 * D.c + 10) * N * N + 2 * N * (2 + qmax) + Fraction(D.b, 2)
    report = AuditReport()
    for l in valid_states(D, max_total=2 * N):
        if state_term(D, l).value.is_zero():
            continue
        pts = _alpha_beta(D, l)
        am = max(abs(a) for a, _ in pts)
        bm = max(abs(b) for _, b in pts)
        report.records.append(AuditRecord("alpha_bound", l, a_bound, am, am <= a_bound))
        report.records.append(AuditRecord("beta_bound", l, b_bound, bm, bm <= b_bound))
    return report


def congruence_probe(D: EnhancedGaussDiagram, f: int, K: int, series: OhtsukiSeries | None = None) -> AuditReport:
    """Compare the ``(q-1)``-expansion of the WRT value with ``lambda_m`` mod ``K``.

    The representative is the unreduced sum over states.  For prime ``K``,
    ``Phi_K(1+h) = h^(K-1) mod K``, so coefficients ``m < K-1`` taken mod ``K``
    do not depend on that choice.  Informational only.
    """
    wrt_theorem2(D, f, K)  # integrality gate
    rep = _theorem2_sum(D, f, K)
    top = K - 2
    if series is None or series.order < top:
        series = ohtsuki_series(D, f, top)
    a = to_h_series(rep, top).coeffs
    recs = []
    for m in range(top + 1):
        lam = series.series.coeffs[m]
        am = a[m]
        ok = (am - lam).numerator % K == 0 and math.gcd((am - lam).denominator, K) == 1
        recs.append(AuditRecord(f"congruence_K{K}", (m,), str(lam), str(am), ok))
    return AuditReport(recs)


def _divides(value: LaurentPoly, divisor: LaurentPoly) -> bool:
    # exact division that introduces no new denominator
    try:
        quot = exact_div(value, divisor)
    except ArithmeticError:
        return False
    return value.denominator % quot.denominator == 0


def combined_divisor(k: int, l: int) -> LaurentPoly:
    """``h^k`` times ``<l>!`` with its ``Phi_1 = h`` factor removed.

    ``<l>!`` contains ``q - 1`` itself, so the two divisibility statements
    only combine as a product once that factor is taken out.
    """
    out = (LaurentPoly.q() - 1) ** k
    for p in range(2, l + 1):
        out = out * cyclotomic(p)
    return out


def _falling_block(a: int, bs) -> MuPoly:
    out = MuPoly.monomial(a, 1)
    for b in bs:
        out = out * MuPoly({1: LaurentPoly.q(-b), 0: LaurentPoly.const(-1)})
    return out


def lemma_grid(max_l: int = 6, span: int = 3, framings=(1, -1)) -> AuditReport:
    """Divisibility of ``phi_f(q^(a mu) prod_(p=1..l) (q^(mu-b-p) - 1))`` for
    ``1 <= l <= max_l`` and ``|a|, |b| <= span``: by ``Phi_l``, by ``<l>!``,
    by ``h^ceil(l/2)`` and by the product of the last two."""
    report = AuditReport()
    for f in framings:
        for l in range(1, max_l + 1):
            fact = angle_factorial(l)
            need = -(-l // 2)
            for a in range(-span, span + 1):
                for b in range(-span, span + 1):
                    value = phi_apply(_falling_block(a, [b + p for p in range(1, l + 1)]), f)
                    loc = (f, l, a, b)
                    c1 = _divides(value, cyclotomic(l))
                    report.records.append(AuditRecord("cyclotomic", loc, f"Phi_{l}", c1, c1))
                    c2 = _divides(value, fact)
                    report.records.append(AuditRecord("angle_factorial", loc, f"<{l}>!", c2, c2))
                    got = h_valuation(value, need)
                    report.records.append(AuditRecord("h_power", loc, need, got, got >= need))
                    c4 = _divides(value, combined_divisor(need, l))
                    report.records.append(AuditRecord("combined", loc, f"h^{need} <{l}>!/h", c4, c4))
    return report


def h_power_audit(f: int, a: int, bs) -> AuditRecord:
    """``phi_f(q^(a mu) prod_j (q^(mu - b_j) - 1))`` vanishes to order
    ``ceil(len(bs)/2)`` at ``q = 1``, for arbitrary shifts ``b_j``."""
    value = phi_apply(_falling_block(a, bs), f)
    need = -(-len(bs) // 2)
    got = h_valuation(value, need)
    return AuditRecord("h_power", (f, a, *bs), need, got, got >= need)
