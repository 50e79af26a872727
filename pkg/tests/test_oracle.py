import numpy as np
import pytest

from qknot.diagram import builtin, valid_states
from qknot.jones import colored_jones
from qknot.oracle import (
    TangleError,
    b_mu_closed_form,
    b_mu_matrix_element,
    builtin_tangle,
    central_element,
    evaluate_tangle,
    framing_factor,
    identity,
    irrep,
    parse_tangle,
    r_matrix,
    r_matrix_inverse_formula,
    ribbon_scalar,
    tangle_matrix,
    yang_baxter_sides,
)
from qknot.qarith import LaurentPoly, q_integer

u, v, q = LaurentPoly.u, LaurentPoly.v, LaurentPoly.q


def same(A, B):
    return A.shape == B.shape and bool(np.all(A == B))


def test_irrep_examples():
    r1 = irrep(1)
    assert r1.H_eigen == (0,) and r1.X[0, 0].is_zero() and r1.Y[0, 0].is_zero()
    assert r1.K_eigen == (LaurentPoly.const(1),)
    r2 = irrep(2)
    assert r2.H_eigen == (-1, 1)
    assert r2.X[1, 0] == LaurentPoly.const(1) and r2.Y[0, 1] == LaurentPoly.const(1)
    r3 = irrep(3)
    assert r3.Y[1, 2] == v(1) + v(-1)


@pytest.mark.parametrize("mu", range(1, 7))
def test_defining_relations(mu):
    r = irrep(mu)
    assert same(r.X @ r.Y - r.Y @ r.X, r.bracket_H())
    H = r.H
    two = LaurentPoly.const(2)
    assert same(H @ r.X - r.X @ H, r.X * two)
    assert same(H @ r.Y - r.Y @ H, r.Y * (-two))


@pytest.mark.parametrize("mu", range(1, 7))
def test_square_antipode_conjugation(mu):
    r = irrep(mu)
    K2, Km2 = r.K_power(2), r.K_power(-2)
    assert same(K2 @ r.X @ Km2, r.X * q(1))
    assert same(K2 @ r.Y @ Km2, r.Y * q(-1))


def test_r_matrix_trivial():
    assert same(r_matrix(1, 1), identity(1))


@pytest.mark.parametrize("mu,nu", [(2, 2), (2, 3), (3, 3), (3, 2), (1, 3)])
def test_r_inverse_both_routes(mu, nu):
    R = r_matrix(mu, nu)
    Ri = r_matrix(mu, nu, -1)
    assert same(R @ Ri, identity(mu * nu))
    assert same(r_matrix_inverse_formula(mu, nu), Ri)


@pytest.mark.parametrize("dims", [(2, 2, 2), (2, 3, 2), (3, 2, 2)])
def test_yang_baxter(dims):
    lhs, rhs = yang_baxter_sides(*dims)
    assert same(lhs, rhs)


def test_yang_baxter_is_not_vacuous():
    from qknot.oracle import _kron

    R12 = _kron(r_matrix(2, 2), identity(2))
    R23 = _kron(identity(2), r_matrix(2, 2))
    assert not same(R12 @ R23, R23 @ R12)


@pytest.mark.parametrize("mu", range(1, 5))
def test_central_element_scalar(mu):
    F = central_element(mu)
    assert same(F, identity(mu) * ribbon_scalar(mu))
    # v^((mu^2 - 1)/2) written in u = v^(1/2)
    assert ribbon_scalar(mu) == u(mu * mu - 1)


def test_framing_factor_examples():
    for mu in range(1, 5):
        assert framing_factor(mu, 0) == LaurentPoly.const(1)
    assert framing_factor(2, 1) == u(3)
    assert framing_factor(3, -1) == u(-8)


def test_single_strand():
    for mu in range(1, 4):
        assert evaluate_tangle(builtin_tangle("unknot"), mu) == LaurentPoly.const(1)


@pytest.mark.parametrize("mu", range(1, 5))
def test_kinks(mu):
    assert evaluate_tangle(builtin_tangle("kink+"), mu) == framing_factor(mu, 1)
    assert evaluate_tangle(builtin_tangle("kink-"), mu) == framing_factor(mu, -1)


@pytest.mark.parametrize("name", ["trefoil", "figure8"])
@pytest.mark.parametrize("mu", [2, 3, 4])
def test_tangle_matches_state_sum(name, mu):
    T = builtin_tangle(name)
    assert evaluate_tangle(T, mu) == colored_jones(builtin(name), mu) * framing_factor(mu, T.writhe)


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("mu", [2, 3])
def test_upward_crossing_rotations_agree(sign, mu):
    from qknot.oracle import Slice, slice_map

    cw = slice_map([Slice("crossing", 0, sign, "uu")], "uu", mu)
    ccw = slice_map([Slice("crossing", 0, sign, "uu", "ccw")], "uu", mu)
    assert cw == ccw and cw


CURLS = [
    "cup_right 1\nx+ 1 du\ncap_left 0\n",
    "cup_right 1\nx- 1 du\ncap_left 0\n",
    "cup_left 0\nx+ 0 ud\ncap_right 1\n",
    "cup_left 0\nx- 0 ud\ncap_right 1\n",
]


@pytest.mark.parametrize("word", CURLS)
@pytest.mark.parametrize("mu", range(1, 5))
def test_mixed_crossing_curls(word, mu):
    # kinks whose crossing has one upward strand
    T = parse_tangle(word)
    assert evaluate_tangle(T, mu) == framing_factor(mu, T.writhe)


def test_tangle_grammar_errors():
    with pytest.raises(TangleError, match="line 2"):
        parse_tangle("cup_right 1\nwiggle 0\n")
    with pytest.raises(TangleError, match="end on one downward point"):
        parse_tangle("cup_right 1\n")
    with pytest.raises(TangleError, match="cap_left needs"):
        parse_tangle("cup_right 1\ncap_left 0\n")
    with pytest.raises(TangleError, match="crossing declared"):
        parse_tangle("cup_right 1\nx+ 0 uu\ncap_left 1\n")


def test_tangle_serialize_round_trip():
    T = builtin_tangle("figure8")
    assert parse_tangle(T.serialize()).slices == T.slices


def test_b_mu_examples():
    D = builtin("trefoil")
    assert b_mu_matrix_element(D, (0, 0, 0), 4) == LaurentPoly.const(1)
    assert b_mu_matrix_element(D, (0, 1, 0), 3) == q_integer(1) * q_integer(2)
    assert b_mu_closed_form(D, (0, 1, 0), 3) == v(1) + v(-1)


@pytest.mark.parametrize("name", ["unknot", "trefoil", "figure8"])
def test_b_mu_three_ways(name):
    D = builtin(name)
    import itertools

    for l in itertools.product(range(5), repeat=D.c):
        if sum(l) > 4:
            continue
        for mu in range(1, 6):
            m = b_mu_matrix_element(D, l, mu)
            assert b_mu_closed_form(D, l, mu) == m
            assert b_mu_closed_form(D, l, mu, asymmetric=True) == m
