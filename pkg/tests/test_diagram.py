import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qknot.diagram import (
    BUILTINS,
    DiagramError,
    EGDSyntaxError,
    EnhancedGaussDiagram,
    NonIntegralExponent,
    NonIntegralLinking,
    RealizabilityWarning,
    a_mu_exponent,
    builtin,
    c0_of_l,
    convert_left_pointing,
    d_of_l,
    level_walk,
    linking_coefficients,
    parse_egd,
    s_vector,
    valid_states,
)

TREFOIL = builtin("trefoil")
FIG8 = builtin("figure8")
UNKNOT = builtin("unknot")


def test_trefoil_parse():
    assert TREFOIL.c == 3
    assert TREFOIL.sigma == (1, 1, 1)
    assert TREFOIL.endpoints == ((1, 1), (2, -1), (3, 1), (1, -1), (2, 1), (3, -1))


def test_unknot_parse():
    assert UNKNOT.c == 0 and UNKNOT.b == 0 and UNKNOT.endpoints == ()


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_serialize_round_trip(name):
    D = builtin(name)
    assert parse_egd(D.serialize()) == D
    assert parse_egd(D.serialize()).serialize() == D.serialize()


def test_duplicate_overpass_is_rejected():
    text = "crossings 2\nsign 1 +1\nsign 2 +1\nsequence 1o 1o 2u 2o\n"
    with pytest.raises(DiagramError, match="more than once as overpass"):
        parse_egd(text)


def test_syntax_errors_carry_line_numbers():
    text = "knot x\ncrossings 1\nsign 1 +1\nsequence 1o 1q\n"
    with pytest.raises(EGDSyntaxError) as e:
        parse_egd(text)
    assert e.value.lineno == 4 and "line 4" in str(e.value)
    with pytest.raises(EGDSyntaxError, match="line 2"):
        parse_egd("crossings 1\nfoo 3\n")


def test_missing_sign_is_rejected():
    with pytest.raises(DiagramError, match="signs missing"):
        parse_egd("crossings 2\nsign 1 +1\nsequence 1o 2u 1u 2o\n")


def test_bad_blob_position():
    with pytest.raises(DiagramError, match="blob position"):
        EnhancedGaussDiagram((1,), ((1, 1), (1, -1)), ((5, 1),))


def test_parity_warnings():
    text = "crossings 2\nsign 1 +1\nsign 2 +1\nsequence 1o 2o 1u 2u\nblob 1 +1\n"
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        D = parse_egd(text)
    assert [w.category for w in caught] == [RealizabilityWarning] * 3
    assert "p_j parity" in str(caught[0].message)
    assert len(D.parity_warnings()) == 3
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for name in BUILTINS:
            parse_egd(BUILTINS[name])


def test_non_integral_linking_on_corrupted_diagram():
    D = EnhancedGaussDiagram((1, 1), ((1, 1), (2, 1), (1, -1), (2, -1)))
    with pytest.raises(NonIntegralLinking):
        linking_coefficients(D)


def test_non_integral_exponent_on_corrupted_diagram():
    D = EnhancedGaussDiagram(TREFOIL.sigma, TREFOIL.endpoints, ())
    with pytest.raises(NonIntegralExponent):
        d_of_l(D, (0, 0, 0))


# left-pointing crossings -------------------------------------------------

def test_convert_left_pointing_positive():
    D = EnhancedGaussDiagram((1,), ((1, -1), (1, 1)), left=(1,))
    E = convert_left_pointing(D)
    # j+ is the 2nd endpoint
    assert E.blobs == ((1, 1), (2, -1)) and E.left == ()


def test_convert_left_pointing_negative():
    D = EnhancedGaussDiagram((-1,), ((1, 1), (1, -1)), left=(1,))
    assert convert_left_pointing(D).blobs == ((0, -1), (1, 1))


def test_convert_without_flags_is_identity():
    assert convert_left_pointing(TREFOIL) == TREFOIL


def test_flagged_diagram_is_refused_by_state_sum():
    from qknot.jones import colored_jones

    with pytest.raises(DiagramError, match="left-pointing"):
        colored_jones(EnhancedGaussDiagram((1,), ((1, -1), (1, 1)), left=(1,)), 2)


# state quantities ----------------------------------------------------------

small = st.integers(0, 5)


@given(small, small, small)
def test_trefoil_s_vector(a, b, c):
    assert s_vector(TREFOIL, (a, b, c)) == [b - a - c, -a, -c]


@given(small, small)
def test_figure8_s_vector(l, m):
    s = s_vector(FIG8, (0, l, 0, m))
    assert s[0] == s[3] == l - m and s[1] == s[2] == 0


def test_zero_state_s_vector():
    for name in ("trefoil", "figure8"):
        D = builtin(name)
        assert s_vector(D, (0,) * D.c) == [0] * D.c


def test_linking_coefficients():
    assert linking_coefficients(TREFOIL)[1] == -2
    assert linking_coefficients(FIG8) == [-1, 1, -1, 1]
    assert linking_coefficients(UNKNOT) == []


@given(small)
def test_d_and_c0_trefoil(l):
    assert d_of_l(TREFOIL, (0, l, 0)) == -1 - 2 * l
    assert 2 * c0_of_l(TREFOIL, (0, l, 0)) == 2 + l + l * l


@given(small, small)
def test_d_and_c0_figure8(l, m):
    assert d_of_l(FIG8, (0, l, 0, m)) == l + m + 1
    assert 2 * c0_of_l(FIG8, (0, l, 0, m)) == -3 * l * l + 2 * l * m - m * m - 5 * l + m - 2


@pytest.mark.parametrize("name", ["trefoil", "figure8"])
def test_zero_state_exponents(name):
    D = builtin(name)
    z = (0,) * D.c
    assert 2 * d_of_l(D, z) == -sum(d for _, d in D.blobs) - sum(D.sigma)
    assert c0_of_l(D, z) == -d_of_l(D, z)


@pytest.mark.parametrize("name", ["trefoil", "figure8"])
def test_a_mu_relation_and_parity(name):
    D = builtin(name)
    for l in valid_states(D, max_total=6):
        mu_coef, const = a_mu_exponent(D, l)
        sig_l = sum(s * x for s, x in zip(D.sigma, l))
        # c^mu = a^mu / 2 - mu sum(sigma l) / 2
        assert mu_coef - sig_l == 2 * d_of_l(D, l)
        assert const == 2 * c0_of_l(D, l)
        assert (mu_coef - sum(l)) % 2 == 0 and const % 2 == 0


@given(st.lists(small, min_size=4, max_size=4))
def test_suffix_consistency(l):
    # every l_j enters once with each sign, so the walk returns to level 0
    _, levels = level_walk(FIG8, l)
    assert levels[0] == 0 and levels[-1] == 0


def test_level_walk_examples():
    ok, levels = level_walk(TREFOIL, (0, 2, 0))
    assert ok and levels == [0, 0, 2, 2, 2, 0, 0]
    ok, levels = level_walk(TREFOIL, (1, 0, 0))
    assert not ok and levels[1] == -1
    assert level_walk(TREFOIL, (0, 0, 0)) == (True, [0] * 7)


def test_single_support_states_follow_endpoint_order():
    # l_j > 0 alone is valid exactly when j- comes before j+
    for D in (TREFOIL, FIG8):
        for j in range(1, D.c + 1):
            l = [0] * D.c
            l[j - 1] = 1
            ok, _ = level_walk(D, l)
            assert ok == (D.position(j, -1) < D.position(j, 1))


@pytest.mark.parametrize("name", ["trefoil", "figure8"])
def test_valid_states_matches_brute_force(name):
    import itertools

    D = builtin(name)
    want = [l for l in itertools.product(range(4), repeat=D.c) if level_walk(D, l)[0]]
    assert sorted(valid_states(D, max_each=3)) == sorted(want)
    want_total = [l for l in want if sum(l) <= 4]
    assert sorted(valid_states(D, max_each=3, max_total=4)) == sorted(want_total)


def test_valid_states_needs_a_bound():
    with pytest.raises(ValueError):
        list(valid_states(TREFOIL))


def test_state_length_checked():
    with pytest.raises(ValueError):
        s_vector(TREFOIL, (0, 0))
