"""Permutations, pointer words, adjacencies, and the context-directed swap.

A permutation of length m is a tuple of the values 1..m in one-line
notation.  Every value k carries a left pointer (k-1, k) and a right
pointer (k, k+1); a pointer is stored as the single integer p, meaning
the ordered pair (p, p+1).  Reading the pointers of the entries from
left to right (and dropping the boundary pairs (0,1) and (m, m+1))
yields the *pointer word*, a double occurrence word in which every
pointer 1..m-1 appears exactly twice.

Contracted permutations use a *cyclic* pointer alphabet of size m in
which p = m denotes the wraparound pointer (m, 1): value 1 keeps (m, 1)
as its left pointer and value m keeps (m, 1) as its right pointer, so
nothing is dropped and the word has length 2m.

Two distinct pointers form a *valid context* when their four
occurrences strictly interleave in word order (p..q..p..q).  The
context-directed swap (cds) exchanges the two blocks of entries spanned
by the first and second halves of such a pattern; it always creates
adjacencies about both pointers, and adjacencies persist forever after.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]
Context = tuple[int, int]


def check_permutation(entries: Iterable[int]) -> Perm:
    """Validate one-line notation: the values must be exactly 1..m.

    >>> check_permutation([2, 3, 1])
    (2, 3, 1)
    """
    perm = tuple(int(x) for x in entries)
    m = len(perm)
    if m < 1:
        raise ValueError("permutation must have length >= 1")
    if sorted(perm) != list(range(1, m + 1)):
        raise ValueError(f"not a permutation of 1..{m}: {list(perm)}")
    return perm


def parse_permutation(text: str) -> Perm:
    """Parse whitespace-separated values with optional surrounding brackets.

    >>> parse_permutation("[8 1 5 2 4 3 7 6]")
    (8, 1, 5, 2, 4, 3, 7, 6)
    """
    cleaned = text.strip().lstrip("[").rstrip("]").replace(",", " ")
    parts = cleaned.split()
    if not parts:
        raise ValueError("empty permutation")
    try:
        return check_permutation(int(p) for p in parts)
    except ValueError:
        raise
    except Exception as exc:  # int() failures
        raise ValueError(f"cannot parse permutation from {text!r}") from exc


def format_permutation(perm: Sequence[int]) -> str:
    return "[" + " ".join(str(x) for x in perm) + "]"


def identity(m: int) -> Perm:
    return tuple(range(1, m + 1))


def rotation(m: int, k: int) -> Perm:
    """The rotation fixed point [k+1 k+2 .. m 1 2 .. k]; its last entry is k.

    k = m gives the identity.
    """
    if not 1 <= k <= m:
        raise ValueError(f"rotation index must lie in 1..{m}, got {k}")
    return tuple(range(k + 1, m + 1)) + tuple(range(1, k + 1))


def pointer_label(p: int, m: int, cyclic: bool = False) -> str:
    """Render pointer p as its value pair, e.g. 3 -> "(3,4)"; m -> "(m,1)" cyclically."""
    if cyclic and p == m:
        return f"({m},1)"
    return f"({p},{p + 1})"


@dataclass(frozen=True)
class PointerWord:
    """A sequence of pointer occurrences in reading order.

    ``symbols[i]`` is the pointer, ``boundaries[i]`` the gap index b in
    0..m it sits on (the left pointer of the entry at position i has
    b = i-1, the right pointer b = i).  A full word over a non-cyclic
    alphabet has 2m-2 symbols, a cyclic one 2m; words produced by
    `pointer_word_ignoring` drop one entry's pair and are shorter.
    """

    symbols: tuple[int, ...]
    boundaries: tuple[int, ...]
    m: int
    cyclic: bool = False

    def __str__(self) -> str:
        return "".join(pointer_label(p, self.m, self.cyclic) for p in self.symbols)

    def occurrences(self, p: int) -> tuple[int, ...]:
        """Word positions (0-based) of pointer p."""
        return tuple(i for i, s in enumerate(self.symbols) if s == p)


def pointer_alphabet(m: int, cyclic: bool = False) -> range:
    return range(1, m + 1) if cyclic else range(1, m)


def _entry_pointers(value: int, m: int, cyclic: bool) -> tuple[int | None, int | None]:
    """(left, right) pointer of an entry, None where the boundary pair is dropped."""
    if cyclic:
        left = value - 1 if value > 1 else m
        right = value if value < m else m
        return left, right
    left = value - 1 if value > 1 else None
    right = value if value < m else None
    return left, right


def pointer_word(perm: Sequence[int], cyclic: bool = False) -> PointerWord:
    """The pointer word of a permutation.

    >>> str(pointer_word((6, 3, 5, 1, 2, 4)))
    '(5,6)(2,3)(3,4)(4,5)(5,6)(1,2)(1,2)(2,3)(3,4)(4,5)'
    """
    m = len(perm)
    symbols: list[int] = []
    boundaries: list[int] = []
    for i, value in enumerate(perm, start=1):
        left, right = _entry_pointers(value, m, cyclic)
        if left is not None:
            symbols.append(left)
            boundaries.append(i - 1)
        if right is not None:
            symbols.append(right)
            boundaries.append(i)
    return PointerWord(tuple(symbols), tuple(boundaries), m, cyclic)


def pointer_word_ignoring(perm: Sequence[int], p: int, cyclic: bool = False) -> PointerWord:
    """The pointer word with the left/right pair of the entry p+1 removed.

    Removing that entry's segment deletes one occurrence of p and one of
    p+1, so the result is no longer a double occurrence word.

    >>> str(pointer_word_ignoring((6, 3, 5, 1, 2, 4), 2))
    '(5,6)(4,5)(5,6)(1,2)(1,2)(2,3)(3,4)(4,5)'
    """
    m = len(perm)
    if p not in pointer_alphabet(m, cyclic):
        raise ValueError(f"pointer {p} out of range for length {m}")
    target = p + 1 if p < m else 1
    symbols: list[int] = []
    boundaries: list[int] = []
    for i, value in enumerate(perm, start=1):
        if value == target:
            continue
        left, right = _entry_pointers(value, m, cyclic)
        if left is not None:
            symbols.append(left)
            boundaries.append(i - 1)
        if right is not None:
            symbols.append(right)
            boundaries.append(i)
    return PointerWord(tuple(symbols), tuple(boundaries), m, cyclic)


def adjacencies(perm: Sequence[int], cyclic: bool = False) -> frozenset[int]:
    """Pointers p whose values p, p+1 sit in consecutive positions.

    Equivalently the duplicated (word-adjacent) pointers of the word.

    >>> sorted(adjacencies((1, 2, 5, 6, 3, 4)))
    [1, 3, 5]
    """
    m = len(perm)
    found = {perm[i] for i in range(m - 1) if perm[i + 1] == perm[i] + 1}
    if cyclic and any(perm[i] == m and perm[i + 1] == 1 for i in range(m - 1)):
        found.add(m)
    return frozenset(found)


def reduce_adjacency(perm: Sequence[int], r: int) -> Perm:
    """Contract the adjacency r, r+1 into one entry, renumbering down.

    Deletes the entry r+1 and decrements every value above r, giving a
    permutation one shorter.

    >>> reduce_adjacency((1, 2, 5, 6, 3, 4), 3)
    (1, 2, 4, 5, 3)
    """
    perm = tuple(perm)
    if r not in adjacencies(perm):
        raise ValueError(f"no adjacency about pointer {r} in {format_permutation(perm)}")
    return tuple(x if x <= r else x - 1 for x in perm if x != r + 1)


def reduced_pointer_word(perm: Sequence[int], r: int) -> PointerWord:
    """Pointer word of the adjacency reduction at r."""
    return pointer_word(reduce_adjacency(perm, r))


def _occurrence_positions(perm: Sequence[int], cyclic: bool) -> dict[int, tuple[int, int]]:
    """For each pointer, its two occurrence slots in word order.

    Slots are 2i-1 for the left pointer of position i and 2i for the
    right pointer; dropping boundary pairs preserves this order, so
    slots compare exactly like word positions.
    """
    m = len(perm)
    pos = {value: i for i, value in enumerate(perm, start=1)}
    occ: dict[int, tuple[int, int]] = {}
    for p in pointer_alphabet(m, cyclic):
        right_owner = p                      # p is the right pointer of value p
        left_owner = p + 1 if p < m else 1   # and the left pointer of value p+1
        slots = sorted((2 * pos[right_owner], 2 * pos[left_owner] - 1))
        occ[p] = (slots[0], slots[1])
    return occ


def _interleaved(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] < b[0] < a[1] < b[1] or b[0] < a[0] < b[1] < a[1]


def valid_contexts(perm: Sequence[int], cyclic: bool = False) -> tuple[Context, ...]:
    """All pointer pairs whose occurrences strictly interleave, sorted.

    >>> (3, 5) in valid_contexts((6, 3, 5, 1, 2, 4))
    True
    >>> valid_contexts((1, 2, 3))
    ()
    """
    occ = _occurrence_positions(perm, cyclic)
    pointers = sorted(occ)
    found = [
        (p, q)
        for i, p in enumerate(pointers)
        for q in pointers[i + 1 :]
        if _interleaved(occ[p], occ[q])
    ]
    return tuple(found)


def is_compatible(perm: Sequence[int], p: int, q: int, cyclic: bool = False) -> bool:
    """Whether pointers p and q form a valid context."""
    if p == q:
        return False
    occ = _occurrence_positions(perm, cyclic)
    return _interleaved(occ[p], occ[q])


def apply_cds(perm: Sequence[int], context: Iterable[int], cyclic: bool = False) -> Perm:
    """Swap the two blocks delimited by an interleaved pointer pair.

    With the four occurrences in word order x..y..x..y sitting on gaps
    b1 <= b2 <= b3 <= b4, the blocks at positions b1+1..b2 and b3+1..b4
    exchange places (either may be empty).

    >>> apply_cds((6, 3, 5, 1, 2, 4), (5, 3))
    (1, 2, 5, 6, 3, 4)
    >>> apply_cds((1, 3, 2), (1, 2))
    (1, 2, 3)
    """
    perm = tuple(perm)
    p, q = sorted(set(int(x) for x in context))
    word = pointer_word(perm, cyclic)
    occ_p = word.occurrences(p)
    occ_q = word.occurrences(q)
    if len(occ_p) != 2 or len(occ_q) != 2 or not _interleaved(
        (occ_p[0], occ_p[1]), (occ_q[0], occ_q[1])
    ):
        raise ValueError(
            f"{{{p},{q}}} is not a valid context of {format_permutation(perm)}"
        )
    w1, w2, w3, w4 = sorted(occ_p + occ_q)
    b1, b2, b3, b4 = (word.boundaries[w] for w in (w1, w2, w3, w4))
    out = perm[:b1] + perm[b3:b4] + perm[b2:b3] + perm[b1:b2] + perm[b4:]
    return out


def is_fixed_point(perm: Sequence[int], cyclic: bool = False) -> bool:
    """True when no valid contexts remain.

    Over the non-cyclic alphabet these are exactly the identity and the
    rotations [k+1 .. m 1 .. k].
    """
    if cyclic:
        return not valid_contexts(perm, cyclic=True)
    return fixed_point_index(perm) is not None


def fixed_point_index(perm: Sequence[int]) -> int | None:
    """The rotation index k of a fixed point (m for the identity), else None."""
    perm = tuple(perm)
    m = len(perm)
    k = perm[-1]
    return k if perm == rotation(m, k) else None


def all_permutations(m: int) -> Iterator[Perm]:
    """All of S_m in lexicographic order."""
    from itertools import permutations as _perms

    return _perms(range(1, m + 1))
