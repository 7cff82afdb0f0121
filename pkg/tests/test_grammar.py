import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stirlingperms import grammar, stats, words
from stirlingperms.poly import MultiPoly
from conftest import compositions_up_to

X, Y = MultiPoly.var("x"), MultiPoly.var("y")


def enumeration_side(parts):
    """Independent route: sum the label monomials over the word set."""
    total = MultiPoly.zero(grammar.QUINTUPLE_VARS)
    for w in words.enumerate_words(parts):
        p = stats.profile(w)
        evec = grammar.quintuple_exponents(p.quintuple())
        total = total + MultiPoly(grammar.QUINTUPLE_VARS, {evec: 1})
    return total


def test_dumont_derivatives():
    g = grammar.dumont_grammar()
    d1 = grammar.derive(g, X)
    assert d1 == X * Y
    d2 = grammar.derive(g, d1)
    assert d2 == X * Y * (X + Y)
    d3 = grammar.derive(g, d2)
    assert d3 == X**3 * Y + 4 * X**2 * Y**2 + X * Y**3
    assert grammar.dumont_poly(3) == d3


def test_derive_of_constant_is_zero():
    g = grammar.dumont_grammar()
    assert grammar.derive(g, MultiPoly.const(7)).is_zero()
    assert grammar.derive_n(g, X, 0) == X


@pytest.mark.parametrize("n", range(7))
def test_dumont_matches_permutation_statistics(n):
    side = MultiPoly.zero(("x", "y"))
    for w in words.enumerate_words((1,) * n):
        p = stats.profile(w)
        side = side + MultiPoly(("x", "y"), {(p.asc, p.des): 1})
    if n == 0:
        # zero derivatives leave the start variable untouched
        assert grammar.dumont_poly(0) == X
    else:
        assert grammar.dumont_poly(n) == side


def test_gk_rules():
    g2 = grammar.gk(2)
    expected2 = MultiPoly(grammar.QUINTUPLE_VARS, {(0, 1, 0, 1, 1): 1})  # xt*yt*z
    assert all(g2.rules[v] == expected2 for v in grammar.QUINTUPLE_VARS)
    g1 = grammar.gk(1)
    expected1 = MultiPoly(grammar.QUINTUPLE_VARS, {(1, 0, 0, 0, 1): 1})  # x*z
    assert all(g1.rules[v] == expected1 for v in grammar.QUINTUPLE_VARS)
    g3 = grammar.gk(3)
    expected3 = MultiPoly(grammar.QUINTUPLE_VARS, {(0, 1, 1, 1, 1): 1})  # xt*yt*y*z
    assert all(g3.rules[v] == expected3 for v in grammar.QUINTUPLE_VARS)
    with pytest.raises(ValueError):
        grammar.gk(0)


def test_quintuple_poly_small():
    z = MultiPoly.var("z")
    assert grammar.quintuple_poly(()) == z
    x = MultiPoly.var("x")
    assert grammar.quintuple_poly((1,)) == x * z
    xt, yt = MultiPoly.var("xt"), MultiPoly.var("yt")
    expected = xt * yt**2 * z**2 + xt**2 * yt * z**2 + xt**2 * yt**2 * z
    assert grammar.quintuple_poly((2, 2)) == expected


@pytest.mark.parametrize("parts", compositions_up_to(6))
def test_grammar_claim(parts):
    assert grammar.quintuple_poly(parts) == enumeration_side(parts)


@pytest.mark.parametrize("parts", compositions_up_to(6))
def test_quintuple_poly_symmetric_in_xt_yt(parts):
    p = grammar.quintuple_poly(parts)
    assert p == p.swap_vars("xt", "yt")


def test_missing_rule_error():
    with pytest.raises(grammar.MissingRuleError) as einfo:
        grammar.Grammar({"x": MultiPoly.var("w")})
    assert einfo.value.var == "w"
    g = grammar.dumont_grammar()
    with pytest.raises(grammar.MissingRuleError) as einfo:
        grammar.derive(g, MultiPoly.var("q"))
    assert einfo.value.var == "q"


@given(
    st.dictionaries(
        st.tuples(st.integers(0, 2), st.integers(0, 2)),
        st.integers(-100, 100),
        max_size=4,
    ),
    st.dictionaries(
        st.tuples(st.integers(0, 2), st.integers(0, 2)),
        st.integers(-100, 100),
        max_size=4,
    ),
)
@settings(max_examples=60, deadline=None)
def test_derive_is_linear(terms_p, terms_q):
    g = grammar.dumont_grammar()
    p = MultiPoly(("x", "y"), terms_p)
    q = MultiPoly(("x", "y"), terms_q)
    assert grammar.derive(g, p + q) == grammar.derive(g, p) + grammar.derive(g, q)


def test_derive_leibniz_on_product():
    g = grammar.dumont_grammar()
    p, q = X + Y, X * Y
    assert grammar.derive(g, p * q) == grammar.derive(g, p) * q + p * grammar.derive(g, q)


def test_grammar_json():
    data = grammar.dumont_grammar().to_json_dict()
    assert set(data["rules"]) == {"x", "y"}
    assert data["rules"]["x"]["terms"] == [{"e": [1, 1], "c": "1"}]
