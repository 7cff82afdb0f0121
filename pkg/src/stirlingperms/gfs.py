"""The letter-hopping involutions and their orbit structure.

For each letter x, the map phi_x moves the leftmost occurrence of x
between a double-ascent position and a free-descent-plateau or single
double-descent position (larger letters are hopped over; landing uses
strict ``<`` leftward and ``<=`` rightward).  The phi_x are commuting
involutions, so the subsets of letters act as a group of order 2^n on
each word set; every orbit contains exactly one word with no single
double-descents and no free descent-plateaux, and summing
``x^asc y^(fplat+sdes)`` over an orbit gives
``(xy)^ascpp (x+y)^(m+1-mdup-2*ascpp)`` evaluated at that word.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Iterable, Sequence

from ._backend import kernel
from .words import Word, check_composition, pack_word, unpack_word


class ValueClass(IntEnum):
    """How a letter's leftmost occurrence sits in its window."""

    FIXED = 0
    FREE_DESCENT_PLATEAU = 1
    SINGLE_DOUBLE_DESCENT = 2
    DOUBLE_ASCENT = 3


#: Classes whose letters hop left; their images hop right.
MOVABLE_LEFT = (ValueClass.FREE_DESCENT_PLATEAU, ValueClass.SINGLE_DOUBLE_DESCENT)


def classify_value(word: Sequence[int], x: int) -> ValueClass:
    """Value class of letter ``x`` in ``word``.

    >>> classify_value((1, 2, 2, 1), 1)
    <ValueClass.DOUBLE_ASCENT: 3>
    """
    return ValueClass(kernel.classify_letter(pack_word(word), x))


def phi(word: Sequence[int], x: int) -> Word:
    """Apply the hop of letter ``x`` (identity on fixed letters)."""
    return unpack_word(kernel.phi_letter(pack_word(word), x))


def phi_set(word: Sequence[int], letters: Iterable[int]) -> Word:
    """Compose the hops of a set of letters (order-independent)."""
    packed = pack_word(word)
    for x in sorted(set(letters)):
        packed = kernel.phi_letter(packed, x)
    return unpack_word(packed)


def orbit(word: Sequence[int]) -> list[Word]:
    """Closure of a word under all letter hops, sorted."""
    start = pack_word(word)
    letters = sorted(set(start))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for x in letters:
                img = kernel.phi_letter(w, x)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return [unpack_word(w) for w in sorted(seen)]


def canonical_rep(word: Sequence[int]) -> Word:
    """The orbit element with no single double-descents and no free
    descent-plateaux.

    Found greedily by hopping every movable-left letter, at most n
    rounds; if the greedy loop fails to settle (not expected by the
    commuting-involution structure) the orbit is searched exhaustively.
    """
    packed = pack_word(word)
    letters = sorted(set(packed))
    cur = packed
    for _ in range(len(letters) + 1):
        movable = [x for x in letters if kernel.classify_letter(cur, x) in MOVABLE_LEFT]
        if not movable:
            return unpack_word(cur)
        for x in movable:
            cur = kernel.phi_letter(cur, x)
    reps = [
        w
        for w in orbit(word)
        if kernel.profile12(pack_word(w))[8] == 0
        and kernel.profile12(pack_word(w))[9] == 0
    ]
    if len(reps) != 1:
        raise RuntimeError(
            f"expected exactly one representative in the orbit of {word}, found {len(reps)}"
        )
    return reps[0]


def is_representative(word: Sequence[int]) -> bool:
    """True when the word has sddes = fdesp = 0."""
    p = kernel.profile12(pack_word(word))
    return p[8] == 0 and p[9] == 0


def orbit_partition(parts: Iterable[int]) -> dict[Word, list[Word]]:
    """Partition of the whole word set into hop orbits, keyed by the
    canonical representative; deterministic (keys and members sorted)."""
    parts = check_composition(parts)
    remaining = set(kernel.words_of(parts))
    out: dict[Word, list[Word]] = {}
    while remaining:
        w = min(remaining)
        orb = orbit(unpack_word(w))
        remaining.difference_update(pack_word(u) for u in orb)
        rep = next((u for u in orb if is_representative(u)), None)
        if rep is None:
            raise RuntimeError(f"orbit of {unpack_word(w)} has no representative")
        out[rep] = orb
    return dict(sorted(out.items()))
