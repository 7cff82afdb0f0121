"""Substitution grammars and their formal derivative.

A grammar maps each variable to a polynomial; its derivative D acts on
polynomials by linearity and the Leibniz rule, replacing one variable
occurrence at a time:

    D(prod v^e_v) = sum_v e_v * v^(e_v - 1) * rule(v) * prod_{u != v} u^e_u

Two families are built here.  The block-insertion grammar of order k
rewrites every one of the five labeling variables to ``x*z`` (k = 1) or
``xt*yt*y^(k-2)*z`` (k >= 2); composing the derivatives for the parts of
a multiplicity vector, starting from ``z``, produces the joint
generating polynomial of (sdes, mdes, fplat, uplat, asc) over the word
set.  The classical two-variable grammar ``{x -> xy, y -> xy}``
generates the bivariate ascent/descent polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .poly import MultiPoly
from .words import check_composition

QUINTUPLE_VARS = ("x", "xt", "y", "yt", "z")


class MissingRuleError(KeyError):
    """A polynomial uses a variable the grammar does not rewrite."""

    def __init__(self, var: str):
        super().__init__(var)
        self.var = var

    def __str__(self) -> str:
        return f"no substitution rule for variable {self.var!r}"


@dataclass(frozen=True)
class Grammar:
    """Substitution rules, closed under the variables they produce."""

    rules: Mapping[str, MultiPoly]

    def __post_init__(self):
        for v, rhs in self.rules.items():
            for evec in rhs.terms:
                for u, e in zip(rhs.vars, evec):
                    if e and u not in self.rules:
                        raise MissingRuleError(u)

    def rule(self, var: str) -> MultiPoly:
        try:
            return self.rules[var]
        except KeyError:
            raise MissingRuleError(var) from None

    def to_json_dict(self) -> dict:
        return {"rules": {v: self.rules[v].to_json_dict() for v in sorted(self.rules)}}


def derive(g: Grammar, p: MultiPoly) -> MultiPoly:
    """One formal derivative of ``p`` under the grammar.

    >>> d = dumont_grammar()
    >>> print(derive(d, MultiPoly.var("x")))
    x*y
    """
    out = MultiPoly.zero(p.vars)
    for evec, c in p.terms.items():
        for pos, (v, e) in enumerate(zip(p.vars, evec)):
            if not e:
                continue
            reduced = list(evec)
            reduced[pos] -= 1
            out = out + MultiPoly(p.vars, {tuple(reduced): c * e}) * g.rule(v)
    return out


def derive_n(g: Grammar, p: MultiPoly, n: int) -> MultiPoly:
    """n-fold iterate of :func:`derive`."""
    if n < 0:
        raise ValueError("derivative count must be nonnegative")
    for _ in range(n):
        p = derive(g, p)
    return p


def gk(k: int) -> Grammar:
    """The block-insertion grammar of order ``k >= 1``: all five
    labeling variables rewrite to the same monomial."""
    if k < 1:
        raise ValueError("grammar order must be a positive integer")
    if k == 1:
        rhs = MultiPoly(QUINTUPLE_VARS, {(1, 0, 0, 0, 1): 1})
    else:
        # x^0 xt^1 y^(k-2) yt^1 z^1 over (x, xt, y, yt, z)
        rhs = MultiPoly(QUINTUPLE_VARS, {(0, 1, k - 2, 1, 1): 1})
    return Grammar({v: rhs for v in QUINTUPLE_VARS})


def dumont_grammar() -> Grammar:
    """The classical grammar {x -> xy, y -> xy}."""
    xy = MultiPoly(("x", "y"), {(1, 1): 1})
    return Grammar({"x": xy, "y": xy})


def dumont_poly(n: int) -> MultiPoly:
    """n-th derivative of ``x`` under the classical grammar: the
    bivariate ascent/descent polynomial of plain permutations."""
    return derive_n(dumont_grammar(), MultiPoly.var("x"), n)


def quintuple_poly(parts: Iterable[int]) -> MultiPoly:
    """Joint (sdes, mdes, fplat, uplat, asc) generating polynomial as a
    grammar derivative: start from ``z`` and apply the derivative of the
    order-``m_i`` grammar for i = 1, ..., n in that order."""
    parts = check_composition(parts)
    p = MultiPoly.var("z")
    for mk in parts:
        p = derive(gk(mk), p)
    return p


def quintuple_exponents(profile_quintuple: tuple[int, int, int, int, int]) -> tuple[int, ...]:
    """Map a (sdes, mdes, fplat, uplat, asc) tuple to the exponent
    vector over QUINTUPLE_VARS (alphabetical: x, xt, y, yt, z)."""
    sdes, mdes, fplat, uplat, asc = profile_quintuple
    return (sdes, mdes, uplat, fplat, asc)
