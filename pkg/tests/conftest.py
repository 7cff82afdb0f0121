"""Shared oracles for the test suite.

The brute-force oracle here is deliberately independent of the package
kernels: it generates raw multiset permutations with itertools and
checks the nesting property per letter by scanning the segment between
consecutive occurrences.
"""

from itertools import permutations


def oracle_is_stirling(word: tuple[int, ...]) -> bool:
    """Every letter's consecutive occurrences enclose only larger letters."""
    for letter in set(word):
        positions = [i for i, c in enumerate(word) if c == letter]
        for lo, hi in zip(positions, positions[1:]):
            if any(word[k] < letter for k in range(lo + 1, hi)):
                return False
    return True


def oracle_words(parts: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Brute-force enumeration: filter all multiset permutations."""
    letters = []
    for k, mk in enumerate(parts, start=1):
        letters.extend([k] * mk)
    return sorted(w for w in set(permutations(letters)) if oracle_is_stirling(w))


def compositions_up_to(max_total: int) -> list[tuple[int, ...]]:
    out = []
    for total in range(max_total + 1):
        stack = [((), total)]
        found = []
        while stack:
            prefix, rest = stack.pop()
            if rest == 0:
                found.append(prefix)
                continue
            for head in range(1, rest + 1):
                stack.append((prefix + (head,), rest - head))
        out.extend(sorted(found, key=lambda c: tuple(reversed(c))))
    return out
