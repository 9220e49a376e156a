"""The two-player swap game: children, Grundy numbers, and winning conditions.

A game position is a permutation together with the target set of the
player about to move.  A move performs one context-directed swap; the
swapped pair {p, q} leaves the strategic pile, and the child position
hands the opponent the complement of the mover's targets within the
shrunken pile.  Play ends at a fixed point; the player whose target set
contains the fixed point's rotation index wins.

Grundy numbers follow the mex recursion over children with base value 1
when the terminal rotation index lies in the mover's targets and 0
otherwise.  A nonzero value means the mover wins - except in the
degenerate extension to sortable permutations, where every run ends at
the identity, no target set can contain it, and the second player wins
outright; `winner` and `minimax_wins` special-case an empty pile for
that reason while `grundy` keeps the plain recursion.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from .perm import (
    Perm,
    adjacencies,
    apply_cds,
    check_permutation,
    fixed_point_index,
    valid_contexts,
)
from .pile import strategic_pile
from .taxonomy import context_count, universal_pointers

Context = tuple[int, int]

ONE = "ONE"
TWO = "TWO"


@dataclass(frozen=True)
class GameState:
    """A permutation plus the target set of the player about to move."""

    perm: Perm
    targets: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "perm", check_permutation(self.perm))
        object.__setattr__(self, "targets", frozenset(int(x) for x in self.targets))
        pile = strategic_pile(self.perm).elements
        if not self.targets <= pile:
            raise ValueError(
                f"targets {sorted(self.targets)} not within the strategic pile {sorted(pile)}"
            )

    def key(self) -> tuple[Perm, tuple[int, ...]]:
        return (self.perm, tuple(sorted(self.targets)))


def children(state: GameState) -> list[tuple[Context, GameState]]:
    """All moves with their successor positions, in sorted move order."""
    pile = strategic_pile(state.perm).elements
    opponent = pile - state.targets
    out = []
    for p, q in valid_contexts(state.perm):
        child = GameState(apply_cds(state.perm, (p, q)), frozenset(opponent - {p, q}))
        out.append(((p, q), child))
    return out


class GrundyCache:
    """Memo table for Grundy values; concurrent idempotent inserts are safe."""

    def __init__(self) -> None:
        self._table: dict[tuple, int] = {}
        self._lock = threading.Lock()

    def get(self, key: tuple) -> int | None:
        return self._table.get(key)

    def put(self, key: tuple, value: int) -> None:
        with self._lock:
            self._table[key] = value

    def __len__(self) -> int:
        return len(self._table)


_shared_cache = GrundyCache()


def mex(values: Iterable[int]) -> int:
    seen = set(values)
    out = 0
    while out in seen:
        out += 1
    return out


def grundy(state: GameState, cache: GrundyCache | None = None) -> int:
    """Sprague-Grundy number: mex over children, terminal base 1 iff index in targets."""
    cache = cache or _shared_cache
    key = state.key()
    hit = cache.get(key)
    if hit is not None:
        return hit
    index = fixed_point_index(state.perm)
    if index is not None:
        value = 1 if index in state.targets else 0
    else:
        value = mex(grundy(child, cache) for _, child in children(state))
    cache.put(key, value)
    return value


def minimax_wins(state: GameState, _memo: dict | None = None) -> bool:
    """Whether the player about to move wins, by plain win/loss search.

    Independent of the Grundy recursion.  On a sortable non-terminal
    position every run ends at the identity, which no target set
    contains, so the mover (the first player of that game) loses.
    """
    memo: dict[tuple, bool] = _memo if _memo is not None else {}
    key = state.key()
    if key in memo:
        return memo[key]
    index = fixed_point_index(state.perm)
    if index is not None:
        result = index in state.targets
    elif not strategic_pile(state.perm).elements:
        result = False
    else:
        result = any(not minimax_wins(child, memo) for _, child in children(state))
    memo[key] = result
    return result


def winner(state: GameState, cache: GrundyCache | None = None) -> str:
    """ONE when the first player wins the game rooted at this position.

    Sortable games always end at the identity and go to TWO; otherwise
    the first player wins exactly when the Grundy number is nonzero.
    """
    if fixed_point_index(state.perm) is None and not strategic_pile(state.perm).elements:
        return TWO
    return ONE if grundy(state, cache) else TWO


def best_moves(state: GameState, cache: GrundyCache | None = None) -> list[Context]:
    """Moves to a Grundy-zero child; empty on terminal or losing positions."""
    if fixed_point_index(state.perm) is not None:
        return []
    return [move for move, child in children(state) if grundy(child, cache) == 0]


def grundy_closed_form(m: int, a: int) -> int:
    """Grundy value of the symmetric family with 2m-1 live targets and |A| = a.

    Three cases split on a against m and the parity of m.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if not 0 <= a <= 2 * m - 1:
        raise ValueError(f"a must lie in 0..{2 * m - 1}, got {a}")
    odd = m % 2 == 1
    if a <= m - 2 or (a == m - 1 and odd):
        return 0
    if a >= m + 1 or (a == m and odd):
        return 1
    return 2


def _compatible_pairs(perm: Perm) -> set[Context]:
    return set(valid_contexts(perm))


def is_excellent(perm: Sequence[int], pointers: Iterable[int]) -> bool:
    """All pairs inside the set compatible, everything outside inert, pile equal to the set."""
    perm = tuple(perm)
    pset = frozenset(int(p) for p in pointers)
    pairs = _compatible_pairs(perm)
    inside = sorted(pset)
    for i, p in enumerate(inside):
        for q in inside[i + 1 :]:
            if (p, q) not in pairs:
                return False
    if any(p not in pset or q not in pset for p, q in pairs):
        return False
    return strategic_pile(perm).elements == pset


def is_good(perm: Sequence[int], pointers: Iterable[int]) -> bool:
    """Pairwise-compatible set with interchangeable members and a full live pile.

    (1) every pair inside the set is compatible; (2) members are
    compatible with exactly the same outside pointers; (3) every
    pointer not in an adjacency indexes a pile element.
    """
    perm = tuple(perm)
    pset = frozenset(int(p) for p in pointers)
    pairs = _compatible_pairs(perm)
    inside = sorted(pset)
    for i, p in enumerate(inside):
        for q in inside[i + 1 :]:
            if (p, q) not in pairs:
                return False
    neighbours = {p: set() for p in range(1, len(perm))}
    for p, q in pairs:
        neighbours[p].add(q)
        neighbours[q].add(p)
    for i, p in enumerate(inside):
        for q in inside[i + 1 :]:
            if neighbours[p] - {q} != neighbours[q] - {p}:
                return False
    pile = strategic_pile(perm).elements
    adj = adjacencies(perm)
    return all(p in pile for p in range(1, len(perm)) if p not in adj)


def winning_conditions_report(state: GameState) -> dict:
    """Evaluate the sufficient winning conditions on a position.

    Conditions for the mover (ONE at the root): the 3/4 pile bound; the
    majority bound on symmetric positions; the margin bound over the
    interchangeable-set structure; and the near-complete-context bound.
    Also reports the second player's small-target bound |A| < |SP|/4 - 2.
    """
    perm = state.perm
    a_size = len(state.targets)
    pile = strategic_pile(perm).elements
    k = len(pile)
    n2 = len(perm)

    three_quarters = 4 * a_size >= 3 * k
    two_small = 4 * a_size < k - 8

    excellent = is_excellent(perm, pile)
    excellent_majority = excellent and a_size > k - a_size

    universal = universal_pointers(perm)
    good = is_good(perm, universal)
    c = k - len(universal)
    good_margin = (
        good and c >= 0 and len(universal) > 3 * c and a_size >= k // 2 + 1 + 2 * c
    )

    deficit_fires = False
    deficit = None
    if n2 % 2 == 0 and k == n2 - 1:
        top = (n2 - 1) * (n2 - 2) // 2
        deficit = top - context_count(perm)
        b = deficit
        if b > 0 and n2 - 1 - b > 3 * b and a_size >= n2 // 2 + 2 * b:
            deficit_fires = True

    fired_one = [
        name
        for name, hit in [
            ("three_quarters", three_quarters),
            ("excellent_majority", excellent_majority),
            ("good_margin", good_margin),
            ("deficit_bound", deficit_fires),
        ]
        if hit
    ]
    return {
        "pile_size": k,
        "targets_size": a_size,
        "universal_count": len(universal),
        "excellent": excellent,
        "good": good,
        "context_deficit": deficit,
        "three_quarters": three_quarters,
        "excellent_majority": excellent_majority,
        "good_margin": good_margin,
        "deficit_bound": deficit_fires,
        "two_small_target": two_small,
        "one_conditions_fired": fired_one,
    }


# ---------------------------------------------------------------------------
# playouts


def all_playout_lengths(perm: Sequence[int]) -> set[int]:
    """Lengths of every maximal swap run from the permutation."""
    perm = tuple(perm)
    memo: dict[Perm, set[int]] = {}

    def lengths(current: Perm) -> set[int]:
        if current in memo:
            return memo[current]
        moves = valid_contexts(current)
        if not moves:
            out = {0}
        else:
            out = set()
            for move in moves:
                out.update(1 + d for d in lengths(apply_cds(current, move)))
        memo[current] = out
        return out

    return lengths(perm)


@dataclass(frozen=True)
class Transcript:
    """A finished game: the root, the moves in order, and the winner."""

    perm: Perm
    targets: tuple[int, ...]
    moves: tuple[Context, ...]
    winner: str

    def to_json(self) -> dict:
        return {
            "permutation": list(self.perm),
            "targets": list(self.targets),
            "moves": [{"p": p, "q": q} for p, q in self.moves],
            "winner": self.winner,
        }


def autoplay(state: GameState, cache: GrundyCache | None = None) -> Transcript:
    """Optimal-vs-optimal run from the root; deterministic move choice."""
    root = state
    moves: list[Context] = []
    current = state
    while fixed_point_index(current.perm) is None:
        options = best_moves(current, cache)
        move = options[0] if options else children(current)[0][0]
        moves.append(move)
        current = dict(children(current))[move]
    index = fixed_point_index(current.perm)
    # targets alternate mover by mover; recover ONE's claim by parity
    ones_turn = len(moves) % 2 == 0
    mover_wins = index in current.targets
    one_wins = mover_wins if ones_turn else not mover_wins
    return Transcript(
        root.perm, tuple(sorted(root.targets)), tuple(moves), ONE if one_wins else TWO
    )
