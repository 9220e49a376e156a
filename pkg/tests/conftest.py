"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately re-derive results from first principles
(raw word scans, exhaustive playouts, brute-force group enumeration) so
the package code is checked against a second route, not against itself.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import permutations

import pytest


def naive_word(perm: tuple[int, ...], cyclic: bool = False) -> list[int]:
    """Raw pointer word built symbol by symbol from the definition."""
    m = len(perm)
    word: list[int] = []
    for value in perm:
        left = value - 1
        right = value
        if cyclic:
            word.append(left if left >= 1 else m)
            word.append(right if right <= m - 1 else m)
        else:
            if left >= 1:
                word.append(left)
            if right <= m - 1:
                word.append(right)
    return word


def naive_valid_contexts(perm: tuple[int, ...], cyclic: bool = False) -> set[tuple[int, int]]:
    """O(m^2) double loop over pointer pairs scanning raw word positions."""
    word = naive_word(perm, cyclic)
    m = len(perm)
    top = m + 1 if cyclic else m
    found = set()
    for p in range(1, top):
        for q in range(p + 1, top):
            pattern = [s for s in word if s in (p, q)]
            if pattern in ([p, q, p, q], [q, p, q, p]):
                found.add((p, q))
    return found


def naive_cds(perm: tuple[int, ...], p: int, q: int) -> tuple[int, ...]:
    """Block swap computed from scratch over gap positions."""
    m = len(perm)
    gaps: list[tuple[int, int]] = []  # (pointer, gap) in word order
    for i, value in enumerate(perm, start=1):
        left, right = value - 1, value
        if left >= 1:
            gaps.append((left, i - 1))
        if right <= m - 1:
            gaps.append((right, i))
    occ = [g for s, g in gaps if s in (p, q)]
    b1, b2, b3, b4 = occ
    return perm[:b1] + perm[b3:b4] + perm[b2:b3] + perm[b1:b2] + perm[b4:]


@lru_cache(maxsize=None)
def playout_fixed_points(perm: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """All fixed points reachable by exhaustive swap playouts."""
    from cdsgame import apply_cds, valid_contexts

    moves = valid_contexts(perm)
    if not moves:
        return frozenset([perm])
    out: set[tuple[int, ...]] = set()
    for move in moves:
        out |= playout_fixed_points(apply_cds(perm, move))
    return frozenset(out)


def brute_psi(m: int) -> int:
    return sum(
        1 for c in range(1, m + 1) if math.gcd(c, m) == 1 and math.gcd(c - 1, m) == 1
    )


def all_perms(m: int):
    return permutations(range(1, m + 1))


@pytest.fixture(scope="session")
def paper_pile_example() -> tuple[int, ...]:
    return (8, 1, 5, 2, 4, 3, 7, 6)


@pytest.fixture(scope="session")
def paper_word_example() -> tuple[int, ...]:
    return (6, 3, 5, 1, 2, 4)
