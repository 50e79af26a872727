from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qknot.qarith import (
    ASYM_MINUS,
    ASYM_PLUS,
    SYMMETRIC,
    HSeries,
    LaurentPoly,
    MuCoefficient,
    MuPoly,
    NonDivisible,
    QuarterPowerPresent,
    angle_factorial,
    cyclotomic,
    divmod_poly,
    exact_div,
    general_binomial_series,
    q_binomial,
    q_factorial,
    q_integer,
    reduce_mod_cyclotomic,
    subst_q_inverse,
    to_h_series,
)

q = LaurentPoly.q
v = LaurentPoly.v
u = LaurentPoly.u


def qpoly(*coeffs):
    return LaurentPoly.from_q_coeffs(coeffs)


# strategies --------------------------------------------------------------

def laurent(unit=4, lo=-4, hi=4, max_terms=4):
    return st.dictionaries(
        st.integers(lo, hi).map(lambda e: unit * e),
        st.integers(-5, 5),
        max_size=max_terms,
    ).map(LaurentPoly)


nonzero_q = laurent(max_terms=3).filter(lambda p: not p.is_zero())


# canonical form ----------------------------------------------------------

def test_zero_terms_are_dropped():
    p = LaurentPoly({0: 1, 4: 0, 8: Fraction(0)})
    assert p.terms == {0: 1}
    assert LaurentPoly({4: 1}) - q(1) == LaurentPoly()


def test_rendering_uses_largest_unit():
    assert str(-q(-4) + q(-3) + q(-1)) == "-q^-4 + q^-3 + q^-1"
    assert str(u(3)) == "u^3"
    assert str(v(-1) + 1) == "v^-1 + 1"
    assert str(LaurentPoly()) == "0"
    assert str(qpoly(-1, 1, 1, 1) * Fraction(1, 2)) == "-1/2 + 1/2*q + 1/2*q^2 + 1/2*q^3"


def test_predicates():
    assert q(3).is_q_poly() and q(3).is_v_poly()
    assert v(1).is_v_poly() and not v(1).is_q_poly()
    assert not u(1).is_v_poly()
    assert not (q(1) * Fraction(1, 2)).is_integral()


@given(laurent(unit=1, lo=-12, hi=12, max_terms=6))
def test_json_round_trip(p):
    assert LaurentPoly.from_json(p.to_json()) == p
    assert LaurentPoly.from_json(__import__("json").loads(p.dumps())) == p


def test_json_schema():
    obj = (q(1) * Fraction(1, 2) - 3).to_json()
    assert obj == {"unit": "u", "terms": [[0, "-3/1"], [4, "1/2"]]}


@given(laurent(unit=1, lo=-8, hi=8), laurent(unit=1, lo=-8, hi=8), laurent(unit=1, lo=-8, hi=8))
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a - a == LaurentPoly()


# q-numbers ---------------------------------------------------------------

def test_q_integer_examples():
    assert q_integer(3, SYMMETRIC) == v(2) + 1 + v(-2)
    assert q_integer(3, ASYM_PLUS) == qpoly(1, 1, 1)
    assert q_integer(0, SYMMETRIC) == LaurentPoly()
    assert q_integer(3, ASYM_MINUS) == subst_q_inverse(qpoly(1, 1, 1))


def test_q_factorial_examples():
    assert q_factorial(3, ASYM_PLUS) == qpoly(1, 2, 2, 1)
    assert q_factorial(0, SYMMETRIC) == LaurentPoly.const(1)


def test_q_binomial_examples():
    assert q_binomial(2, 2, ASYM_PLUS) == qpoly(1, 1, 2, 1, 1)
    assert q_binomial(-1, 3, ASYM_PLUS) == LaurentPoly()
    for s in range(-3, 4):
        for kind in (SYMMETRIC, ASYM_PLUS, ASYM_MINUS):
            assert q_binomial(s, 0, kind) == LaurentPoly.const(1)


def test_q_binomial_vanishes_in_gap():
    for l in range(1, 6):
        for s in range(-l, 0):
            assert q_binomial(s, l, ASYM_PLUS).is_zero()


def test_q_binomial_below_gap_is_nonzero():
    # product definition with negative upper argument
    assert not q_binomial(-4, 2, ASYM_PLUS).is_zero()


def test_subst_q_inverse():
    assert subst_q_inverse(q(1) + 1) == q(-1) + 1


def _sym_binom(n, r):
    return q_binomial(n - r, r, SYMMETRIC)


def _asym_binom(n, r):
    return q_binomial(n - r, r, ASYM_PLUS)


def test_pascal_recurrences():
    for n in range(0, 12):
        for r in range(0, n):
            assert _sym_binom(n + 1, r + 1) == v(r - n) * _sym_binom(n, r) + v(r + 1) * _sym_binom(n, r + 1)
            assert _asym_binom(n + 1, r + 1) == _asym_binom(n, r) + q(r + 1) * _asym_binom(n, r + 1)


def test_symmetric_asymmetric_relation():
    for n in range(0, 11):
        for m in range(0, n + 1):
            assert _asym_binom(n, m) == v(m * (n - m)) * _sym_binom(n, m)


@given(st.integers(0, 8), st.integers(0, 6))
def test_asym_binomial_is_positive_polynomial(s, l):
    b = q_binomial(s, l, ASYM_PLUS)
    assert b.is_integral() and b.is_q_poly()
    assert b.min_exp() >= 0
    assert all(c > 0 for c in b.terms.values())


# cyclotomics and division --------------------------------------------------

def test_cyclotomic_examples():
    assert cyclotomic(1) == qpoly(-1, 1)
    assert cyclotomic(2) == qpoly(1, 1)
    assert cyclotomic(4) == qpoly(1, 0, 1)
    assert cyclotomic(6) == qpoly(1, -1, 1)


def test_angle_factorial_examples():
    assert angle_factorial(0) == LaurentPoly.const(1)
    assert angle_factorial(2) == qpoly(-1, 0, 1)
    assert angle_factorial(3) == qpoly(-1, 0, 1) * qpoly(1, 1, 1)


def test_angle_factorial_contains_q_minus_one():
    # defined as the full product from p = 1, so it vanishes at q = 1
    for l in range(1, 6):
        assert reduce_mod_cyclotomic(angle_factorial(l), 1, unit="q").is_zero()


def test_angle_factorial_vanishes_at_small_roots():
    for l in range(0, 8):
        for k in range(1, l + 1):
            assert reduce_mod_cyclotomic(angle_factorial(l), k, unit="q").is_zero()


def test_exact_div_examples():
    assert exact_div(qpoly(-1, 0, 1), qpoly(-1, 1)) == qpoly(1, 1)
    assert exact_div(qpoly(1, -2, 0, 0, 1), qpoly(-1, 1)) == qpoly(-1, 1, 1, 1)
    with pytest.raises(NonDivisible):
        exact_div(qpoly(1, 0, 1), qpoly(-1, 1))


@given(laurent(), nonzero_q)
def test_exact_div_round_trip(a, b):
    assert exact_div(a * b, b) == a


@given(laurent(max_terms=5), nonzero_q)
def test_divmod_reconstructs(a, b):
    quo, rem = divmod_poly(a, b)
    assert quo * b + rem == a


def test_reduce_mod_cyclotomic_examples():
    assert reduce_mod_cyclotomic(u(4) - 1, 4).is_zero()
    assert reduce_mod_cyclotomic(q(1), 1, unit="q") == LaurentPoly.const(1)
    assert reduce_mod_cyclotomic(qpoly(1, 1, 1), 3, unit="q").is_zero()
    assert reduce_mod_cyclotomic(qpoly(1, 1, 1), 12).is_zero()


@given(laurent(unit=1, lo=-20, hi=20, max_terms=6), st.sampled_from([3, 5, 7, 12, 20, 28]))
def test_reduction_is_canonical(p, n):
    r = reduce_mod_cyclotomic(p, n)
    assert reduce_mod_cyclotomic(r, n) == r
    assert reduce_mod_cyclotomic(p - r, n).is_zero()
    if not r.is_zero():
        # below the degree of Phi_n(u)
        phi_u = cyclotomic(n).map_exponents(lambda e: e // 4)
        assert 0 <= r.min_exp() and r.max_exp() < phi_u.max_exp()


# h-series ----------------------------------------------------------------

def test_h_series_examples():
    assert to_h_series(q(2), 2) == HSeries([1, 2, 1])
    assert to_h_series(q(-1), 2) == HSeries([1, -1, 1])
    assert to_h_series(q(1) - 1, 3) == HSeries([0, 1, 0, 0])


def test_h_series_rejects_quarter_powers():
    with pytest.raises(QuarterPowerPresent):
        to_h_series(v(1), 2)


@given(laurent(), laurent(), st.integers(0, 6))
def test_h_series_multiplicative(a, b, n):
    assert to_h_series(a * b, n) == to_h_series(a, n) * to_h_series(b, n)


def test_h_series_order_is_min():
    a, b = HSeries([1, 2, 3]), HSeries([1, 1])
    assert (a * b).order == 1
    assert (a + b).order == 1


def test_general_binomial_series_examples():
    assert general_binomial_series(0, 2, 2) == [MuCoefficient([1]), MuCoefficient([2]), MuCoefficient([1])]
    assert general_binomial_series(1, 0, 2) == [
        MuCoefficient([1]),
        MuCoefficient([0, 1]),
        MuCoefficient([0, Fraction(-1, 2), Fraction(1, 2)]),
    ]
    assert general_binomial_series(2, 1, 1) == [MuCoefficient([1]), MuCoefficient([1, 2])]


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(0, 5))
def test_general_binomial_series_specialises(alpha, beta, mu):
    series = general_binomial_series(alpha, beta, 5)
    want = to_h_series(q(alpha * mu + beta), 5)
    assert HSeries([c(mu) for c in series], 5) == want


def test_mu_coefficient_trims_and_prints():
    c = MuCoefficient([1, 0, -1, 0, 0])
    assert c.degree == 2
    assert str(c) == "1 - mu^2"
    assert str(MuCoefficient([0, Fraction(-1, 2), 3])) == "-1/2*mu + 3*mu^2"


# MuPoly ------------------------------------------------------------------

def test_mupoly_drops_zero_and_evaluates():
    P = MuPoly({1: q(-1), 0: LaurentPoly.const(-1), 3: LaurentPoly()})
    assert set(P.terms) == {0, 1}
    assert P.evaluate(2) == q(1) - 1


@given(st.integers(0, 6))
def test_mupoly_product_evaluates(mu):
    A = MuPoly({1: q(-1), 0: LaurentPoly.const(-1)})
    B = MuPoly({-1: q(2), 2: LaurentPoly.const(3)})
    assert (A * B).evaluate(mu) == A.evaluate(mu) * B.evaluate(mu)
    assert (A + B).evaluate(mu) == A.evaluate(mu) + B.evaluate(mu)
