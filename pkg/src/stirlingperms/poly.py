"""Exact sparse multivariate polynomials and truncated power series.

Coefficients are arbitrary-precision Python ints; exponents are
nonnegative.  Variables are referenced by name and kept sorted, so two
polynomials combine by aligning variable lists (a variable missing from
one side is treated as exponent 0 everywhere).

>>> x, y = MultiPoly.var("x"), MultiPoly.var("y")
>>> print((x + y) * (x + y))
x^2 + 2*x*y + y^2
"""

from __future__ import annotations

import json
from math import comb
from typing import Iterable, Mapping, Sequence


def _merge_vars(a: tuple[str, ...], b: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(sorted(set(a) | set(b)))


class MultiPoly:
    """Sparse exact-integer polynomial in named variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Iterable[str] = (), terms: Mapping[tuple[int, ...], int] | None = None):
        vs = tuple(vars)
        if len(set(vs)) != len(vs):
            raise ValueError(f"duplicate variable in {vs}")
        order = tuple(sorted(vs))
        perm = [vs.index(v) for v in order]
        clean: dict[tuple[int, ...], int] = {}
        for evec, c in (terms or {}).items():
            if len(evec) != len(vs):
                raise ValueError(f"exponent vector {evec} does not match variables {vs}")
            if any(e < 0 for e in evec):
                raise ValueError(f"negative exponent in {evec}")
            if c == 0:
                continue
            key = tuple(evec[i] for i in perm)
            clean[key] = clean.get(key, 0) + c
            if clean[key] == 0:
                del clean[key]
        self.vars = order
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vars: Iterable[str] = ()) -> "MultiPoly":
        return cls(vars, {})

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls((), {(): c} if c else {})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls((name,), {(1,): 1})

    @classmethod
    def monomial(cls, vars: Iterable[str], evec: Sequence[int], coeff: int = 1) -> "MultiPoly":
        return cls(vars, {tuple(evec): coeff})

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def with_vars(self, vars: Iterable[str]) -> "MultiPoly":
        """Re-express over a superset of the current variables."""
        new = tuple(sorted(vars))
        if new == self.vars:
            return self
        missing = set(self.vars) - set(new)
        if missing:
            raise ValueError(f"cannot drop variables {sorted(missing)}")
        pos = {v: i for i, v in enumerate(new)}
        out: dict[tuple[int, ...], int] = {}
        for evec, c in self.terms.items():
            key = [0] * len(new)
            for v, e in zip(self.vars, evec):
                key[pos[v]] = e
            out[tuple(key)] = c
        return MultiPoly(new, out)

    def _aligned(self, other: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        vs = _merge_vars(self.vars, other.vars)
        return self.with_vars(vs), other.with_vars(vs)

    def coeff(self, evec: Sequence[int]) -> int:
        """Coefficient of the exponent vector (against ``self.vars``)."""
        key = tuple(evec)
        if len(key) != len(self.vars):
            raise ValueError(f"exponent vector {key} does not match variables {self.vars}")
        return self.terms.get(key, 0)

    def coeff_of(self, **exps: int) -> int:
        """Coefficient by named exponents; unnamed variables must be 0.

        >>> p = MultiPoly.var("x") * MultiPoly.var("y") * 3
        >>> p.coeff_of(x=1, y=1)
        3
        """
        unknown = set(exps) - set(self.vars)
        if any(exps[v] for v in unknown):
            return 0
        key = tuple(exps.get(v, 0) for v in self.vars)
        return self.terms.get(key, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def terms_sorted(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in descending graded-lex order (the canonical order)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.const(other)
        return None

    def __add__(self, other) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._aligned(o)
        out = dict(a.terms)
        for evec, c in b.terms.items():
            out[evec] = out.get(evec, 0) + c
            if out[evec] == 0:
                del out[evec]
        return MultiPoly(a.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._aligned(o)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                key = tuple(u + v for u, v in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
                if out[key] == 0:
                    del out[key]
        return MultiPoly(a.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = MultiPoly.const(1).with_vars(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._aligned(o)
        return a.terms == b.terms

    def __hash__(self):
        # hash over nonzero structure only, consistent with aligned equality
        live = tuple(sorted(
            (tuple((v, e) for v, e in zip(self.vars, evec) if e), c)
            for evec, c in self.terms.items()
        ))
        return hash(live)

    # -- queries ------------------------------------------------------

    def is_homogeneous(self, degree: int | None = None) -> bool:
        """Every term has the same total degree (``degree`` if given).
        The zero polynomial is homogeneous of any degree."""
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def is_symmetric_xy(self) -> bool:
        """Invariance under swapping the variables ``x`` and ``y``."""
        return self == self.swap_vars("x", "y")

    def swap_vars(self, u: str, v: str) -> "MultiPoly":
        """Exchange two variables (either may be absent)."""
        p = self.with_vars(_merge_vars(self.vars, (u, v)))
        iu, iv = p.vars.index(u), p.vars.index(v)
        out: dict[tuple[int, ...], int] = {}
        for evec, c in p.terms.items():
            key = list(evec)
            key[iu], key[iv] = key[iv], key[iu]
            out[tuple(key)] = c
        return MultiPoly(p.vars, out)

    def z_slices(self) -> list[tuple[int, "MultiPoly"]]:
        """Decompose a polynomial in x, y, z by powers of z.

        Returns ``[(i, s_i)]`` with each nonzero ``s_i`` over (x, y),
        sorted by i.
        """
        extra = set(self.vars) - {"x", "y", "z"}
        if extra:
            raise ValueError(f"z_slices needs variables within x,y,z, got {sorted(extra)}")
        p = self.with_vars(("x", "y", "z"))
        buckets: dict[int, dict[tuple[int, int], int]] = {}
        for (ex, ey, ez), c in p.terms.items():
            buckets.setdefault(ez, {})[(ex, ey)] = c
        return [
            (i, MultiPoly(("x", "y"), buckets[i]))
            for i in sorted(buckets)
        ]

    def evaluate(self, assignment: Mapping[str, object]):
        """Evaluate with values from any commutative ring (duck-typed)."""
        missing = [v for v in self.vars if v not in assignment]
        if missing:
            raise ValueError(f"no value for variables {missing}")
        total = 0
        for evec, c in self.terms.items():
            term = c
            for v, e in zip(self.vars, evec):
                if e:
                    term = term * assignment[v] ** e
            total = total + term
        return total

    # -- rendering ----------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for evec, c in self.terms_sorted():
            factors = [
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.vars, evec)
                if e
            ]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def to_json_dict(self) -> dict:
        """Bit-exact fixture form: decimal-string coefficients, terms in
        descending graded-lex order."""
        return {
            "vars": list(self.vars),
            "terms": [{"e": list(e), "c": str(c)} for e, c in self.terms_sorted()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "MultiPoly":
        terms = {tuple(t["e"]): int(t["c"]) for t in data["terms"]}
        return cls(tuple(data["vars"]), terms)


class TruncatedSeries:
    """Integer power series known exactly through order K."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = tuple(int(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return list(self.coeffs) == [int(c) for c in other]
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)})"


def unipoly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Dense convolution of integer coefficient lists."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def series_divide(numerator: Sequence[int], r: int, order: int) -> TruncatedSeries:
    """Expansion of ``numerator / (1 - t)^r`` through ``t^order``.

    The divisor expands as ``sum_k C(k + r - 1, r - 1) t^k``; the result
    is the exact convolution, truncated.

    >>> series_divide([0, 1], 2, 4).coeffs
    (0, 1, 2, 3, 4)
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    if order < 0:
        raise ValueError("order must be nonnegative")
    num = [int(c) for c in numerator]
    while num and num[-1] == 0:
        num.pop()
    if len(num) - 1 > order:
        raise ValueError("truncation order is below the numerator degree")
    out = []
    for k in range(order + 1):
        acc = 0
        for i, c in enumerate(num):
            if i > k:
                break
            if c:
                acc += c * comb(k - i + r - 1, r - 1)
        out.append(acc)
    return TruncatedSeries(out)
