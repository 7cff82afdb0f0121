"""Pure-Python kernels.

This module is the reference implementation of the hot primitives; the
Cython module ``stirlingperms._core`` mirrors it function for function.
Both operate on *packed words*: a word is a ``bytes`` object whose byte
values are the letters (so letters are limited to 1..255), and a
multiplicity vector is a tuple of positive ints.  The boundary sentinel
is the value 0, which is smaller than every letter.

Statistic order returned by :func:`profile12`::

    (asc, plat, des, sdes, mdes, fplat, uplat, dasc, sddes, fdesp, ascpp, mdup)
"""

from __future__ import annotations

BACKEND_NAME = "pure"

# value classes for the hopping action
FIXED = 0
FREE_DESCENT_PLATEAU = 1
SINGLE_DOUBLE_DESCENT = 2
DOUBLE_ASCENT = 3


def _check_parts(parts):
    if len(parts) > 255:
        raise ValueError("at most 255 distinct letters are supported")
    for p in parts:
        if p < 1:
            raise ValueError("multiplicities must be positive")


def words_of(parts):
    """All generalized Stirling words of the multiset ``{i^parts[i-1]}``.

    Built by inserting the block ``k^parts[k-1]`` into every gap of every
    word over the previous alphabet; returned as a lexicographically
    sorted list of packed words.
    """
    _check_parts(parts)
    cur = [b""]
    for k, mk in enumerate(parts, start=1):
        block = bytes([k]) * mk
        nxt = []
        for w in cur:
            nxt.extend(w[:g] + block + w[g:] for g in range(len(w) + 1))
        cur = nxt
    cur.sort()
    return cur


def enum_counts(parts):
    """``(total, distinct)`` sizes of the insertion-construction output."""
    ws = words_of(parts)
    distinct = 0
    prev = None
    for w in ws:
        if w != prev:
            distinct += 1
            prev = w
    return len(ws), distinct


def _stirling_property(word, mult):
    # Stack of letters with more occurrences still to come; the stack is
    # strictly increasing, so any letter smaller than the top sits between
    # two occurrences of the top letter.
    stack = []
    seen = [0] * len(mult)
    for c in word:
        if stack and stack[-1] == c:
            seen[c] += 1
            if seen[c] == mult[c]:
                stack.pop()
        else:
            if stack and stack[-1] > c:
                return False
            seen[c] = 1
            if mult[c] > 1:
                stack.append(c)
    return True


def is_stirling(word, parts):
    """Content check against ``parts`` plus the nesting property."""
    _check_parts(parts)
    n = len(parts)
    if len(word) != sum(parts):
        return False
    mult = [0] * (n + 1)
    for c in word:
        if c < 1 or c > n:
            return False
        mult[c] += 1
    for k in range(1, n + 1):
        if mult[k] != parts[k - 1]:
            return False
    return _stirling_property(word, mult)


def _sorted_letters(parts):
    out = bytearray()
    for k, mk in enumerate(parts, start=1):
        out.extend([k] * mk)
    return out


def _next_permutation(a):
    m = len(a)
    i = m - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = m - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1 :] = a[:i:-1]
    return True


def brute_count(parts):
    """Count Stirling words by filtering every multiset permutation."""
    _check_parts(parts)
    arr = _sorted_letters(parts)
    if not arr:
        return 1
    mult = [0] * (len(parts) + 1)
    for k, mk in enumerate(parts, start=1):
        mult[k] = mk
    count = 0
    while True:
        if _stirling_property(arr, mult):
            count += 1
        if not _next_permutation(arr):
            return count


def brute_words(parts):
    """Materialized brute-force enumeration, lexicographically sorted."""
    _check_parts(parts)
    arr = _sorted_letters(parts)
    if not arr:
        return [b""]
    mult = [0] * (len(parts) + 1)
    for k, mk in enumerate(parts, start=1):
        mult[k] = mk
    out = []
    while True:
        if _stirling_property(arr, mult):
            out.append(bytes(arr))
        if not _next_permutation(arr):
            return out


def profile12(word):
    """The twelve comparison statistics of a packed word.

    Indices 0..m (sentinel value 0 at both ends) are classified as
    ascent/plateau/descent; the pattern statistics look at the window
    ``(w[i-1], w[i], w[i+1])`` for i in 1..m.  A letter counts as
    multiple when it occurs more than once in the word itself.  The
    empty word is the grammar base case and counts one ascent.
    """
    m = len(word)
    if m == 0:
        return (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)
    mult = {}
    first = {}
    for idx, c in enumerate(word):
        mult[c] = mult.get(c, 0) + 1
        if c not in first:
            first[c] = idx + 1
    asc = plat = des = 0
    sdes = mdes = fplat = uplat = 0
    dasc = sddes = fdesp = ascpp = mdup = 0
    for i in range(m + 1):
        a = word[i - 1] if i >= 1 else 0
        b = word[i] if i < m else 0
        if a < b:
            asc += 1
        elif a == b:
            plat += 1
        else:
            des += 1
    for i in range(1, m + 1):
        p = word[i - 2] if i >= 2 else 0
        c = word[i - 1]
        nx = word[i] if i < m else 0
        multiple = mult[c] > 1
        leftmost = first[c] == i
        if c > nx:
            if multiple:
                mdes += 1
                mdup += 1
            else:
                sdes += 1
        elif c == nx:
            if leftmost:
                fplat += 1
            if not (p > c and leftmost) and not p < c:
                uplat += 1
                mdup += 1
        if p < c < nx:
            dasc += 1
        if p > c > nx and not multiple:
            sddes += 1
        if p > c == nx and leftmost:
            fdesp += 1
        if p < c and c >= nx:
            ascpp += 1
    return (asc, plat, des, sdes, mdes, fplat, uplat, dasc, sddes, fdesp, ascpp, mdup)


def classify_letter(word, x):
    """Value class of letter ``x``: looks at the window around its
    leftmost occurrence (0 fixed, 1 free descent-plateau value, 2 single
    double-descent value, 3 double-ascent value)."""
    pos = word.find(bytes([x]))
    if pos < 0:
        raise ValueError(f"letter {x} does not occur in the word")
    m = len(word)
    p = word[pos - 1] if pos >= 1 else 0
    nx = word[pos + 1] if pos + 1 < m else 0
    if p > x == nx:
        return FREE_DESCENT_PLATEAU
    if p > x > nx and word.count(bytes([x])) == 1:
        return SINGLE_DOUBLE_DESCENT
    if p < x < nx:
        return DOUBLE_ASCENT
    return FIXED


def phi_letter(word, x):
    """One hop of the letter action: the leftmost occurrence of ``x``
    jumps left past larger letters (free descent-plateau / single
    double-descent value) or right past larger letters (double-ascent
    value); other letters are fixed points.

    Landing positions use strict ``<`` on the left and ``<=`` on the
    right, with the sentinels as final backstops.
    """
    cls = classify_letter(word, x)
    if cls == FIXED:
        return word
    m = len(word)
    l1 = word.find(bytes([x])) + 1  # 1-based leftmost occurrence
    piece = bytes([x])
    if cls in (FREE_DESCENT_PLATEAU, SINGLE_DOUBLE_DESCENT):
        k = 0
        for a in range(l1 - 2, 0, -1):
            if word[a - 1] < x:
                k = a
                break
        return word[:k] + piece + word[k : l1 - 1] + word[l1:]
    k = m + 1
    for a in range(l1 + 2, m + 1):
        if word[a - 1] <= x:
            k = a
            break
    return word[: l1 - 1] + word[l1 : k - 1] + piece + word[k - 1 :]
