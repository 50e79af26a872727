"""Self-check suites behind ``qknot verify``.

Each suite returns an :class:`AuditReport`.  ``corrupt=True`` flips the sign
of the first blob of every built-in knot before running, so that a working
suite must report failures.
"""

from __future__ import annotations

import dataclasses
import random

import numpy as np

from . import reference
from .diagram import EnhancedGaussDiagram, a_mu_exponent, builtin, valid_states
from .jones import colored_jones, kashaev
from .ohtsuki import (
    AuditRecord,
    AuditReport,
    IntegralityViolation,
    bounds_audit,
    lemma_divisibility_audit,
    lemma_grid,
    wrt_direct_check,
)
from .oracle import (
    b_mu_closed_form,
    b_mu_matrix_element,
    builtin_tangle,
    central_element,
    evaluate_tangle,
    framing_factor,
    irrep,
    yang_baxter_sides,
)
from .qarith import (
    ASYM_MINUS,
    ASYM_PLUS,
    LaurentPoly,
    angle_factorial,
    cyclotomic,
    exact_div,
    q_binomial,
    reduce_mod_cyclotomic,
    subst_q_inverse,
    to_h_series,
)

SUITES = ("golden", "lemmas", "oracle", "qarith")
KNOTS = ("trefoil", "figure8")


def corrupted(D: EnhancedGaussDiagram) -> EnhancedGaussDiagram:
    if not D.blobs:
        return D
    blobs = list(D.blobs)
    p, d = blobs[0]
    blobs[0] = (p, -d)
    return dataclasses.replace(D, blobs=tuple(blobs))


def _knot(name: str, corrupt: bool) -> EnhancedGaussDiagram:
    D = builtin(name)
    return corrupted(D) if corrupt else D


def _eq(report, check, loc, got, want):
    report.records.append(AuditRecord(check, tuple(loc), str(want), str(got), got == want))


def golden(corrupt: bool = False) -> AuditReport:
    r = AuditReport()
    T, F = _knot("trefoil", corrupt), _knot("figure8", corrupt)
    for mu in range(1, 9):
        _eq(r, "trefoil_cyclotomic", (mu,), colored_jones(T, mu), reference.trefoil_cyclotomic(mu))
    for mu in range(1, 7):
        _eq(r, "trefoil_alternating", (mu,), colored_jones(T, mu), reference.trefoil_alternating(mu))
        _eq(r, "figure8", (mu,), colored_jones(F, mu), reference.figure8(mu))
    q = LaurentPoly.q
    _eq(r, "trefoil_jones", (2,), colored_jones(T, 2), q(-1) + q(-3) - q(-4))
    _eq(r, "figure8_jones", (2,), colored_jones(F, 2), q(-2) - q(-1) + 1 - q(1) + q(2))
    for mu in range(2, 7):
        J = colored_jones(F, mu)
        _eq(r, "figure8_amphichiral", (mu,), subst_q_inverse(J), J)
    for K in (3, 5, 7):
        _eq(r, "trefoil_kashaev", (K,), kashaev(T, K), reference.trefoil_kashaev(K))
    return r


def lemmas(corrupt: bool = False) -> AuditReport:
    r = lemma_grid()
    for name in KNOTS:
        D = _knot(name, corrupt)
        for f in (1, -1):
            for l in valid_states(D, max_total=6):
                r = r + lemma_divisibility_audit(D, f, l)
        for l in valid_states(D, max_total=6):
            mu_coef, const = a_mu_exponent(D, l)
            # a^mu = mu_coef * mu + const must match mu * sum(l) mod 2 for every mu
            ok = (mu_coef - sum(l)) % 2 == 0 and const % 2 == 0
            r.records.append(AuditRecord("a_mu_parity", l, "mu*sum(l) mod 2", f"{mu_coef}*mu + {const}", ok))
        r = r + bounds_audit(D, 1, 4)
    return r


def oracle(corrupt: bool = False) -> AuditReport:
    r = AuditReport()
    for name in KNOTS:
        D = _knot(name, corrupt)
        T = builtin_tangle(name)
        for mu in (2, 3, 4):
            framed = evaluate_tangle(T, mu)
            want = colored_jones(D, mu) * framing_factor(mu, T.writhe)
            _eq(r, "tangle_vs_state_sum", (mu,), framed, want)
    for name in ("unknot",) + KNOTS:
        D = _knot(name, corrupt)
        for l in valid_states(D, max_total=4):
            for mu in range(1, 6):
                m = b_mu_matrix_element(D, l, mu)
                _eq(r, f"b_mu_{name}", tuple(l) + (mu,), b_mu_closed_form(D, l, mu), m)
    for name in KNOTS:
        D = _knot(name, corrupt)
        for f in (1, -1):
            for K in (3, 5, 7):
                try:
                    ok = wrt_direct_check(D, f, K, raise_on_mismatch=False).passed
                except IntegralityViolation:
                    ok = False
                r.records.append(AuditRecord(f"wrt_{name}", (f, K), "residual 0", ok, ok))
    a, b = yang_baxter_sides(2, 2, 2)
    ok = bool(np.all(a == b))
    r.records.append(AuditRecord("yang_baxter", (2, 2, 2), True, ok, ok))
    for mu in range(1, 7):
        rep = irrep(mu)
        ok = bool(np.all(rep.X @ rep.Y - rep.Y @ rep.X == rep.bracket_H()))
        r.records.append(AuditRecord("commutator", (mu,), "[H]", ok, ok))
    for mu in range(1, 5):
        F = central_element(mu)
        scalar = framing_factor(mu, 1)
        ok = all(F[i, j] == (scalar if i == j else LaurentPoly()) for i in range(mu) for j in range(mu))
        r.records.append(AuditRecord("central_element", (mu,), str(scalar), ok, ok))
    return r


def qarith(corrupt: bool = False, seed: int = 0) -> AuditReport:
    r = AuditReport()
    q = LaurentPoly.q
    for n in range(1, 13):
        prod = LaurentPoly.const(1)
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        _eq(r, "cyclotomic_product", (n,), prod, q(n) - 1)
    for kind, shift in ((ASYM_PLUS, 1), (ASYM_MINUS, -1)):
        for s in range(0, 6):
            for l in range(1, 5):
                # Pascal rule for [s+l choose l]
                lhs = q_binomial(s, l, kind)
                rhs = q_binomial(s, l - 1, kind) + q_binomial(s - 1, l, kind) * q(shift * l)
                _eq(r, f"pascal_{kind}", (s, l), lhs, rhs)
    rng = random.Random(seed)
    for i in range(40):
        a = LaurentPoly({4 * rng.randint(-3, 3): rng.randint(-4, 4) for _ in range(3)})
        b = LaurentPoly({4 * rng.randint(-2, 2): rng.randint(1, 4) for _ in range(2)})
        if b.is_zero():
            continue
        _eq(r, "exact_div_roundtrip", (i,), exact_div(a * b, b), a)
        _eq(r, "h_series_product", (i,), to_h_series(a * b, 5), to_h_series(a, 5) * to_h_series(b, 5))
    for l in range(0, 7):
        for n in range(1, l + 1):
            got = reduce_mod_cyclotomic(angle_factorial(l), n, unit="q")
            _eq(r, "angle_factorial_vanishes", (l, n), got, LaurentPoly())
    return r


def run(suite: str, corrupt: bool = False) -> AuditReport:
    if suite == "all":
        out = AuditReport()
        for name in SUITES:
            out = out + run(name, corrupt)
        return out
    try:
        fn = {"golden": golden, "lemmas": lemmas, "oracle": oracle, "qarith": qarith}[suite]
    except KeyError:
        raise ValueError(f"unknown suite {suite!r}; known: {', '.join(SUITES)}, all") from None
    return fn(corrupt)
