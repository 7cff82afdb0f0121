"""Gamma-basis expansion of the trivariate word polynomials.

``s_poly(m)`` is the exact sum of ``x^asc y^des z^plat`` over all
generalized Stirling words with content ``m``.  Its coefficient of
``z^i`` is a homogeneous polynomial symmetric in x and y, and therefore
expands uniquely over the basis ``(xy)^j (x+y)^(d-2j)``.  The expansion
coefficients are recovered by leading-coefficient elimination; the same
table is produced purely combinatorially by counting the words free of
single double-descents and free descent-plateaux, refined by
(mdup, ascpp), and the two routes are compared entry by entry.

Also houses the truncated-series checks tying the descent polynomials
of plain permutations and of doubled-letter words to the classical
power sums ``sum k^n t^k`` and ``sum S(n+k, k) t^k``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from ._backend import kernel
from .poly import MultiPoly, TruncatedSeries, series_divide
from .words import check_composition, total_of


class NotHomogeneousError(ValueError):
    """Input polynomial has terms of different total degree."""


class NotSymmetricError(ValueError):
    """Input polynomial changes under swapping x and y."""


class InternalResidueError(ArithmeticError):
    """Elimination left a nonzero residue: an arithmetic bug, since a
    symmetric homogeneous input always expands exactly."""


@dataclass(frozen=True)
class GammaTable:
    """Map ``(i, j) -> gamma`` of nonzero expansion coefficients, with
    i the plateau level and j the gamma index."""

    degree: int
    entries: Mapping[tuple[int, int], int]
    positive: bool

    def rows(self) -> list[int]:
        return sorted({i for i, _ in self.entries})

    def entry(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def sorted_items(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.entries.items())

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "entries": [
                {"i": i, "j": j, "g": str(g)} for (i, j), g in self.sorted_items()
            ],
            "positive": self.positive,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def to_csv(self) -> str:
        lines = ["i,j,gamma"]
        lines.extend(f"{i},{j},{g}" for (i, j), g in self.sorted_items())
        return "\n".join(lines) + "\n"


def triple_counts(parts: Iterable[int]) -> dict[tuple[int, int, int], int]:
    """Histogram of (asc, des, plat) over all words with content ``parts``."""
    parts = check_composition(parts)
    out: dict[tuple[int, int, int], int] = {}
    for w in kernel.words_of(parts):
        p = kernel.profile12(w)
        key = (p[0], p[2], p[1])
        out[key] = out.get(key, 0) + 1
    return out


def quintuple_counts(parts: Iterable[int]) -> dict[tuple[int, int, int, int, int], int]:
    """Histogram of (sdes, mdes, fplat, uplat, asc)."""
    parts = check_composition(parts)
    out: dict[tuple[int, int, int, int, int], int] = {}
    for w in kernel.words_of(parts):
        p = kernel.profile12(w)
        key = (p[3], p[4], p[5], p[6], p[0])
        out[key] = out.get(key, 0) + 1
    return out


def s_poly(parts: Iterable[int]) -> MultiPoly:
    """Sum of ``x^asc y^des z^plat`` over the word set.

    >>> print(s_poly((1, 1)))
    x^2*y + x*y^2
    """
    terms = {
        (asc, des, plat): c for (asc, des, plat), c in triple_counts(parts).items()
    }
    return MultiPoly(("x", "y", "z"), terms)


def _gamma_basis(j: int, degree: int) -> MultiPoly:
    x, y = MultiPoly.var("x"), MultiPoly.var("y")
    return (x * y) ** j * (x + y) ** (degree - 2 * j)


def gamma_expand(h: MultiPoly) -> list[int]:
    """Exact coefficients ``[g_0, ..., g_floor(d/2)]`` with
    ``h = sum_j g_j (xy)^j (x+y)^(d-2j)``.

    Requires ``h`` homogeneous and symmetric in x, y; the elimination
    peels the coefficient of ``x^j y^(d-j)`` at each step and must end
    with a zero residue.
    """
    extra = set(h.vars) - {"x", "y"}
    for evec in h.terms:
        for v, e in zip(h.vars, evec):
            if v in extra and e:
                raise ValueError(f"gamma_expand needs a polynomial in x, y; found {v}")
    aligned = h.with_vars(sorted(set(h.vars) | {"x", "y"}))
    ix, iy = aligned.vars.index("x"), aligned.vars.index("y")
    h = MultiPoly(("x", "y"), {(e[ix], e[iy]): c for e, c in aligned.terms.items()})
    if h.is_zero():
        return []
    if not h.is_homogeneous():
        raise NotHomogeneousError(f"not homogeneous: {h}")
    if not h.is_symmetric_xy():
        raise NotSymmetricError(f"not symmetric in x, y: {h}")
    d = h.degree()
    residue = h
    gammas: list[int] = []
    for j in range(d // 2 + 1):
        g = residue.coeff((j, d - j))
        gammas.append(g)
        if g:
            residue = residue - g * _gamma_basis(j, d)
    if not residue.is_zero():
        raise InternalResidueError(f"nonzero residue {residue}")
    return gammas


def reassemble(gammas: list[int], degree: int) -> MultiPoly:
    """Inverse of :func:`gamma_expand` for a given homogeneous degree."""
    out = MultiPoly.zero(("x", "y"))
    for j, g in enumerate(gammas):
        if g:
            out = out + g * _gamma_basis(j, degree)
    return out


def partial_gamma(p: MultiPoly) -> GammaTable:
    """Gamma table of a trivariate polynomial, one row per z-power.

    Each z-slice must be homogeneous in x, y (degrees may differ across
    slices) and symmetric; nonzero coefficients land in
    ``entries[(i, j)]`` and the table is flagged positive when all of
    them are nonnegative.
    """
    entries: dict[tuple[int, int], int] = {}
    degree = 0
    for i, s in p.z_slices():
        try:
            gammas = gamma_expand(s)
        except (NotHomogeneousError, NotSymmetricError, InternalResidueError) as exc:
            raise type(exc)(f"slice i={i}: {exc}") from None
        for j, g in enumerate(gammas):
            if g:
                entries[(i, j)] = g
        degree = max(degree, i + s.degree())
    positive = all(g >= 0 for g in entries.values())
    return GammaTable(degree, entries, positive)


def gamma_combinatorial(parts: Iterable[int]) -> GammaTable:
    """Gamma table counted directly: words with ``sddes = fdesp = 0``,
    tabulated by ``(mdup, ascpp)``."""
    parts = check_composition(parts)
    entries: dict[tuple[int, int], int] = {}
    for w in kernel.words_of(parts):
        if not w:
            # the empty word's ascpp = 0 sits outside the j >= 1 range
            # of the expansion, which starts from a nonempty multiset
            continue
        p = kernel.profile12(w)
        if p[8] == 0 and p[9] == 0:  # sddes, fdesp
            key = (p[11], p[10])  # (mdup, ascpp)
            entries[key] = entries.get(key, 0) + 1
    return GammaTable(total_of(parts) + 1, entries, True)


@dataclass(frozen=True)
class TheoremReport:
    """Comparison of the expansion-side and counting-side gamma tables."""

    parts: tuple[int, ...]
    expansion: GammaTable
    combinatorial: GammaTable
    passed: bool
    detail: str

    def __bool__(self) -> bool:
        return self.passed


def verify_theorem(parts: Iterable[int]) -> TheoremReport:
    """Check that the two gamma tables agree entrywise, with all entries
    nonnegative and every internal j = 0 coefficient equal to zero."""
    parts = check_composition(parts)
    if total_of(parts) < 1:
        raise ValueError("the expansion statement needs a nonempty multiset")
    expansion = partial_gamma(s_poly(parts))
    combinatorial = gamma_combinatorial(parts)
    detail = ""
    if any(j == 0 for _, j in expansion.entries):
        bad = sorted((i, j) for (i, j) in expansion.entries if j == 0)
        detail = f"nonzero j=0 coefficient at {bad}"
    elif not expansion.positive:
        neg = sorted(k for k, g in expansion.entries.items() if g < 0)
        detail = f"negative coefficient at {neg}"
    elif dict(expansion.entries) != dict(combinatorial.entries):
        keys = sorted(set(expansion.entries) | set(combinatorial.entries))
        for key in keys:
            a, b = expansion.entry(*key), combinatorial.entry(*key)
            if a != b:
                detail = f"first mismatch at (i,j)={key}: expansion {a} vs count {b}"
                break
    return TheoremReport(parts, expansion, combinatorial, detail == "", detail)


def _stirling2_row(n: int, kmax: int) -> list[int]:
    """S(n, 0..kmax) by the triangle recurrence
    S(a, b) = S(a-1, b-1) + b * S(a-1, b)."""
    row = [1] + [0] * kmax
    for a in range(1, n + 1):
        new = [0] * (kmax + 1)
        for b in range(1, kmax + 1):
            new[b] = row[b - 1] + b * row[b]
        row = new
    return row


@dataclass(frozen=True)
class SeriesReport:
    """Outcome of one truncated generating-function identity check."""

    kind: str
    n: int
    order: int
    numerator: tuple[int, ...]
    expanded: TruncatedSeries
    target: tuple[int, ...]
    passed: bool


def _descent_numerator(parts: tuple[int, ...], order: int) -> list[int]:
    num = [0] * (order + 1)
    for w in kernel.words_of(parts):
        num[kernel.profile12(w)[2]] += 1
    while num and num[-1] == 0:
        num.pop()
    return num


def classical_series_check(kind: str, n: int, order: int) -> SeriesReport:
    """Verify a classical power-series identity at truncation ``order``.

    ``eulerian``: the descent polynomial A_n over plain permutations
    satisfies ``A_n(t) / (1-t)^(n+1) = sum_k k^n t^k``.

    ``second_order``: the descent polynomial C_n over doubled-letter
    words satisfies ``C_n(t) / (1-t)^(2n+1) = sum_k S(n+k, k) t^k`` with
    S the Stirling partition numbers.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if order < n + 2:
        raise ValueError("order must be at least n + 2")
    if kind == "eulerian":
        num = _descent_numerator((1,) * n, order)
        expanded = series_divide(num, n + 1, order)
        target = tuple(k**n for k in range(order + 1))
    elif kind == "second_order":
        num = _descent_numerator((2,) * n, order)
        expanded = series_divide(num, 2 * n + 1, order)
        target = tuple(
            _stirling2_row(n + k, k)[k] for k in range(order + 1)
        )
    else:
        raise ValueError(f"unknown series kind {kind!r}")
    return SeriesReport(
        kind, n, order, tuple(num), expanded, target, expanded.coeffs == target
    )
