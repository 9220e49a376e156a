"""Strategic piles: sortability, reachable fixed points, and contraction.

For a length-n permutation [a1 .. an], compose the two (n+1)-cycles

    X = (0 1 2 ... n)        and        Y = (an a(n-1) ... a1 0)

into the *cycle map* C = Y o X on the points {0, .., n}.  The strategic
pile is the set of values read along the cycle of C from n up to (but
excluding) 0; it is empty exactly when the permutation is sortable by
context-directed swaps, and its members index the reachable rotation
fixed points: p is in the pile iff [p+1 .. n 1 .. p] is reachable.

The pile can hold at most n-1 values (n even) or n-2 (n odd); a
permutation meeting that bound has a *maximal* pile.  An even-length
permutation with maximal pile always shows n immediately before 1, so
deleting the entry n *contracts* it to an odd permutation over the
cyclic pointer alphabet, where the wraparound pointer (n-1, 1) stands
in for the deleted boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perm import (
    Perm,
    adjacencies,
    apply_cds,
    check_permutation,
    format_permutation,
    identity,
    is_fixed_point,
    reduce_adjacency,
    rotation,
    valid_contexts,
)


def cycle_map(perm: Sequence[int]) -> tuple[int, ...]:
    """The composite map C on {0..n}, returned as an array: C[x] = Y(X(x)).

    >>> cycle_map((8, 1, 5, 2, 4, 3, 7, 6))[0]
    8
    """
    perm = tuple(perm)
    n = len(perm)
    y = [0] * (n + 1)
    # Y is the cycle (a_n a_{n-1} ... a_1 0): a_i -> a_{i-1}, a_1 -> 0, 0 -> a_n
    y[0] = perm[-1]
    y[perm[0]] = 0
    for i in range(1, n):
        y[perm[i]] = perm[i - 1]
    return tuple(y[(x + 1) % (n + 1)] for x in range(n + 1))


def cycles(cmap: Sequence[int]) -> list[tuple[int, ...]]:
    """Disjoint cycles of an array-backed map, singletons included, lowest point first."""
    seen = [False] * len(cmap)
    out: list[tuple[int, ...]] = []
    for start in range(len(cmap)):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = cmap[x]
        out.append(tuple(cycle))
    return out


def cycle_count(perm: Sequence[int]) -> int:
    """Number of cycles of the cycle map, length-1 cycles included."""
    return len(cycles(cycle_map(perm)))


@dataclass(frozen=True)
class StrategicPile:
    """The pile as a set plus the order in which the cycle visits it."""

    elements: frozenset[int]
    trace: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def to_json(self) -> dict:
        return {"elements": sorted(self.elements), "trace": list(self.trace)}


def strategic_pile(perm: Sequence[int]) -> StrategicPile:
    """Values between n and 0 on the cycle of the cycle map through both.

    >>> sorted(strategic_pile((8, 1, 5, 2, 4, 3, 7, 6)).elements)
    [1, 2, 3, 4, 5, 6, 7]
    """
    perm = tuple(perm)
    n = len(perm)
    cmap = cycle_map(perm)
    trace: list[int] = []
    x = cmap[n]
    while x not in (0, n):
        trace.append(x)
        x = cmap[x]
    if x == n:  # orbit of n returned without meeting 0: disjoint cycles
        return StrategicPile(frozenset(), ())
    return StrategicPile(frozenset(trace), tuple(trace))


def is_sortable(perm: Sequence[int]) -> bool:
    """Sortable to the identity by context-directed swaps iff the pile is empty."""
    return not strategic_pile(perm).elements


def reachable_fixed_points(perm: Sequence[int]) -> tuple[Perm, ...]:
    """The rotations indexed by the pile; just the identity when sortable."""
    perm = tuple(perm)
    n = len(perm)
    pile = strategic_pile(perm)
    if not pile.elements:
        return (identity(n),)
    return tuple(rotation(n, p) for p in sorted(pile.elements))


def max_pile_size(n: int) -> int:
    return n - 1 if n % 2 == 0 else n - 2


def has_max_pile(perm: Sequence[int]) -> bool:
    return len(strategic_pile(perm)) == max_pile_size(len(perm))


def contract(perm: Sequence[int]) -> Perm:
    """Delete the entry n from an even max-pile permutation.

    The result is one shorter and carries the cyclic pointer alphabet
    with wraparound pointer (n-1, 1).
    """
    perm = check_permutation(perm)
    n = len(perm)
    if n % 2 != 0:
        raise ValueError("contraction requires even length")
    if not has_max_pile(perm):
        raise ValueError(f"{format_permutation(perm)} does not have a maximal pile")
    return tuple(x for x in perm if x != n)


def uncontract(perm: Sequence[int]) -> Perm:
    """Insert the new top value immediately before the entry 1."""
    perm = check_permutation(perm)
    top = len(perm) + 1
    at = perm.index(1)
    return perm[:at] + (top,) + perm[at:]


def duration(perm: Sequence[int]) -> int:
    """Number of swaps in every maximal run to a fixed point.

    (n+1-c)/2 for sortable input and one less otherwise, with c the
    cycle count of the cycle map.  The run length does not depend on
    which swaps are chosen.
    """
    perm = tuple(perm)
    if is_fixed_point(perm):
        raise ValueError("duration is undefined on a fixed point")
    n = len(perm)
    c = cycle_count(perm)
    moves2 = n + 1 - c
    if moves2 % 2:
        raise AssertionError(f"odd cycle defect for {format_permutation(perm)}")
    half = moves2 // 2
    return half if is_sortable(perm) else half - 1


def max_pile_report(perm: Sequence[int]) -> dict[str, bool]:
    """Check the structural properties of a maximal-pile permutation.

    Items (vacuous parity cases report True):
      1. n even: n is immediately followed by 1.
      2. n even: no adjacencies.
      3. n odd: exactly one adjacency.
      4. n even: every swap adds exactly two adjacencies and removes
         exactly two pile elements.
      5. n even: every swap, after reducing the two new adjacencies,
         leaves a maximal-pile permutation two shorter.
    """
    perm = tuple(perm)
    n = len(perm)
    if not has_max_pile(perm):
        raise ValueError(f"{format_permutation(perm)} does not have a maximal pile")
    even = n % 2 == 0
    report = {f"item{i}": True for i in range(1, 6)}
    adj = adjacencies(perm)
    if even:
        at = perm.index(n)
        report["item1"] = at + 1 < n and perm[at + 1] == 1
        report["item2"] = not adj
        pile = strategic_pile(perm).elements
        for context in valid_contexts(perm):
            child = apply_cds(perm, context)
            new_adj = adjacencies(child) - adj
            child_pile = strategic_pile(child).elements
            if len(new_adj) != 2 or len(pile - child_pile) != 2:
                report["item4"] = False
            reduced = child
            for r in sorted(new_adj, reverse=True):
                reduced = reduce_adjacency(reduced, r)
            if len(reduced) != n - 2 or not has_max_pile(reduced):
                report["item5"] = False
    else:
        report["item3"] = len(adj) == 1
    return report
