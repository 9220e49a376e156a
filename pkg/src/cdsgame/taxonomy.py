"""Context counting, exhaustive censuses, and classification of max-pile permutations.

The census enumerates every even-length permutation with the top value
immediately before 1 (forced for a maximal pile), keeps the max-pile
ones, and histograms them by number of valid contexts.  Over length 2n
and with m = 2n - 1 pointers, the classification theorems pin down the
extreme histogram classes:

  * the full count C(m, 2) is exactly the m cyclic shifts of the
    evens-then-odds permutation [2 4 .. 2n-2 1 3 .. 2n-1] (contracted);
  * the count C(m, 2) - 4 is exactly one shift-translate orbit of m^2
    permutations, represented by the 4-2 swap of the family above;
  * counts C(m, 2) - 1, -2, -3 never occur;
  * the minimum count m is attained by exactly 2m permutations: the
    descending family and the halved-stride interleaved family.

Every class size is 0 mod m^2 whenever the context count is coprime to
m, because only periodic difference sequences give smaller orbits.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations as _permutations
from typing import Iterator, Sequence

from .perm import Perm, check_permutation
from .pile import contract, has_max_pile, max_pile_size, strategic_pile, uncontract
from .symmetry import difference_sequence, orbit


def _occurrence_slots(perm: Sequence[int], cyclic: bool) -> list[tuple[int, int]]:
    """Per pointer p (index p-1), the sorted slot pair of its occurrences."""
    m = len(perm)
    pos = [0] * (m + 1)
    for i, value in enumerate(perm, start=1):
        pos[value] = i
    out = []
    top = m + 1 if cyclic else m
    for p in range(1, top):
        left_owner = p + 1 if p < m else 1
        a, b = 2 * pos[p], 2 * pos[left_owner] - 1
        out.append((a, b) if a < b else (b, a))
    return out


def context_count(perm: Sequence[int], cyclic: bool = False) -> int:
    """Number of valid pointer contexts (cyclic alphabet for contracted input).

    >>> context_count((2, 4, 1, 3, 5), cyclic=True)
    10
    """
    occ = _occurrence_slots(perm, cyclic)
    count = 0
    for i in range(len(occ)):
        a0, a1 = occ[i]
        for j in range(i + 1, len(occ)):
            b0, b1 = occ[j]
            if (a0 < b0 < a1 < b1) or (b0 < a0 < b1 < a1):
                count += 1
    return count


def compatibility_degrees(perm: Sequence[int], cyclic: bool = False) -> dict[int, int]:
    """For each pointer, how many other pointers it forms a context with."""
    occ = _occurrence_slots(perm, cyclic)
    degrees = {p: 0 for p in range(1, len(occ) + 1)}
    for i in range(len(occ)):
        a0, a1 = occ[i]
        for j in range(i + 1, len(occ)):
            b0, b1 = occ[j]
            if (a0 < b0 < a1 < b1) or (b0 < a0 < b1 < a1):
                degrees[i + 1] += 1
                degrees[j + 1] += 1
    return degrees


def universal_pointers(perm: Sequence[int], cyclic: bool = False) -> frozenset[int]:
    """Pointers compatible with every other pointer."""
    degrees = compatibility_degrees(perm, cyclic)
    full = len(degrees) - 1
    return frozenset(p for p, d in degrees.items() if d == full)


def incompatibility_graph(perm: Sequence[int], cyclic: bool = False) -> tuple[frozenset[int], frozenset[tuple[int, int]]]:
    """Vertices: non-universal pointers; edges: incompatible pairs among them."""
    occ = _occurrence_slots(perm, cyclic)
    n_pointers = len(occ)
    vertices = set(range(1, n_pointers + 1)) - universal_pointers(perm, cyclic)
    edges = set()
    for p in vertices:
        a0, a1 = occ[p - 1]
        for q in vertices:
            if q <= p:
                continue
            b0, b1 = occ[q - 1]
            if not ((a0 < b0 < a1 < b1) or (b0 < a0 < b1 < a1)):
                edges.add((p, q))
    return frozenset(vertices), frozenset(edges)


def constant_diff_context_count(d: int, n: int) -> int:
    """Context count of the contracted constant-difference-d permutation.

    (2n-1) * min(inv - 1, 2n - 1 - inv) with inv the inverse of d mod 2n-1.
    """
    m = 2 * n - 1
    if math.gcd(d % m, m) != 1:
        raise ValueError(f"difference {d} is not invertible mod {m}")
    inv = pow(d, -1, m)
    return m * min(inv - 1, m - inv)


# ---------------------------------------------------------------------------
# canonical families


def evens_then_odds(n: int) -> Perm:
    """[2 4 .. 2n-2 2n 1 3 .. 2n-1]: maximal pile, every pointer pair compatible."""
    return tuple(range(2, 2 * n + 1, 2)) + tuple(range(1, 2 * n, 2))


def four_two_swap(n: int) -> Perm:
    """The evens-then-odds permutation with its first two entries swapped."""
    if n < 3:
        raise ValueError("the swapped family needs n >= 3")
    base = list(evens_then_odds(n))
    base[0], base[1] = base[1], base[0]
    return tuple(base)


def descending(n: int) -> Perm:
    """[2n-1 2n-2 .. 2 2n 1]: maximal pile with the minimum context count."""
    return tuple(range(2 * n - 1, 1, -1)) + (2 * n, 1)


def halved_interleave(n: int) -> Perm:
    """[2n 1 n+1 2 n+2 .. n-1 2n-1 n]: the other minimum-count family."""
    out = [2 * n, 1]
    for i in range(2, n + 1):
        out.append(n + i - 1)
        out.append(i)
    return tuple(out[: 2 * n])


MAX_CONTEXTS = "MAX_CONTEXTS"
MAX_MINUS_4 = "MAX_MINUS_4"
MIN_CONTEXTS_DESC = "MIN_CONTEXTS_DESC"
MIN_CONTEXTS_INTERLEAVED = "MIN_CONTEXTS_INTERLEAVED"
OTHER = "OTHER"


@lru_cache(maxsize=None)
def _family_orbits(n: int) -> dict[str, frozenset[Perm]]:
    out = {MAX_CONTEXTS: frozenset(orbit(contract(evens_then_odds(n))))}
    if n >= 3:
        out[MAX_MINUS_4] = frozenset(orbit(contract(four_two_swap(n))))
        out[MIN_CONTEXTS_DESC] = frozenset(orbit(contract(descending(n))))
        out[MIN_CONTEXTS_INTERLEAVED] = frozenset(orbit(contract(halved_interleave(n))))
    return out


def classify(contracted: Sequence[int]) -> str:
    """Orbit-membership tag of a contracted max-pile permutation."""
    contracted = check_permutation(contracted)
    m = len(contracted)
    if m % 2 == 0 or not has_max_pile(uncontract(contracted)):
        raise ValueError("classification requires a contracted max-pile permutation")
    n = (m + 1) // 2
    for tag, members in _family_orbits(n).items():
        if contracted in members:
            return tag
    return OTHER


def has_violating_subsequence(perm: Sequence[int]) -> bool:
    """A proper window whose values fill a range starting and ending at its endpoints."""
    perm = tuple(perm)
    m = len(perm)
    for start in range(m):
        low = high = perm[start]
        for end in range(start + 1, m):
            if end - start + 1 == m:
                break
            value = perm[end]
            low = min(low, value)
            high = max(high, value)
            if perm[start] == low and value == high and high - low == end - start:
                return True
    return False


# ---------------------------------------------------------------------------
# census


@dataclass(frozen=True)
class CensusReport:
    """Histogram of max-pile permutations of length 2n by context count."""

    n: int
    histogram: dict[int, int]
    total: int
    orbits: tuple[tuple[Perm, int, int], ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "orbits": [
                {"rep": list(rep), "size": size, "k": k} for rep, size, k in self.orbits
            ],
        }


def iter_glued_candidates(n: int) -> Iterator[Perm]:
    """All length-2n permutations with 2n immediately before 1.

    Arrangements of the glued block (2n, 1) with the remaining values;
    a maximal pile forces this shape, so nothing is missed.
    """
    rest = list(range(2, 2 * n))
    for arrangement in _permutations(rest + [0]):
        out: list[int] = []
        for x in arrangement:
            if x == 0:
                out.append(2 * n)
                out.append(1)
            else:
                out.append(x)
        yield tuple(out)


def iter_max_pile(n: int) -> Iterator[Perm]:
    """All max-pile permutations of length 2n."""
    target = max_pile_size(2 * n)
    for candidate in iter_glued_candidates(n):
        if len(strategic_pile(candidate)) == target:
            yield candidate


def _census_chunk(args: tuple[int, int]) -> dict[int, int]:
    n, first = args
    histogram: dict[int, int] = {}
    target = max_pile_size(2 * n)
    rest = [x for x in list(range(2, 2 * n)) + [0] if x != first]
    for arrangement in _permutations(rest):
        seq = (first, *arrangement)
        out: list[int] = []
        for x in seq:
            if x == 0:
                out.append(2 * n)
                out.append(1)
            else:
                out.append(x)
        perm = tuple(out)
        if len(strategic_pile(perm)) == target:
            k = context_count(perm)
            histogram[k] = histogram.get(k, 0) + 1
    return histogram


def census(
    n: int,
    *,
    include_orbits: bool = False,
    max_n: int = 6,
    threads: int = 1,
) -> CensusReport:
    """Exhaustive census of max-pile permutations of length 2n.

    The histogram keys count contexts on the uncontracted permutation
    (equal to the contracted count; asserted by the test suite).  The
    optional orbit decomposition lists one representative contraction
    per shift-translate orbit.
    """
    if n < 2:
        raise ValueError("census requires n >= 2")
    if n > max_n:
        raise ValueError(f"census n={n} exceeds the configured cap {max_n}")
    histogram: dict[int, int] = {}
    if threads > 1:
        firsts = list(range(2, 2 * n)) + [0]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_census_chunk, [(n, f) for f in firsts]):
                for k, v in part.items():
                    histogram[k] = histogram.get(k, 0) + v
    else:
        for perm in iter_max_pile(n):
            k = context_count(perm)
            histogram[k] = histogram.get(k, 0) + 1
    orbits: list[tuple[Perm, int, int]] = []
    if include_orbits:
        seen: set[Perm] = set()
        for perm in iter_max_pile(n):
            reduced = contract(perm)
            if reduced in seen:
                continue
            members = orbit(reduced)
            seen.update(members)
            rep = min(members)
            orbits.append((rep, len(members), context_count(rep, cyclic=True)))
        orbits.sort(key=lambda item: (-item[2], item[0]))
    total = sum(histogram.values())
    return CensusReport(n, histogram, total, tuple(orbits))


# ---------------------------------------------------------------------------
# theorem reports


def divisibility_report(n: int, report: CensusReport | None = None) -> dict:
    """Periodic members have counts divisible by (2n-1)/p; coprime classes by (2n-1)^2."""
    if report is None:
        report = census(n)
    m = 2 * n - 1
    periodic_ok = True
    periodic_failures: list[list[int]] = []
    for perm in iter_max_pile(n):
        reduced = contract(perm)
        p = difference_sequence(reduced).period
        if p is None:
            continue
        if context_count(perm) % (m // p) != 0:
            periodic_ok = False
            periodic_failures.append(list(perm))
    coprime_ok = True
    coprime_failures: list[int] = []
    for k, count in report.histogram.items():
        if math.gcd(k, m) == 1 and count % (m * m) != 0:
            coprime_ok = False
            coprime_failures.append(k)
    return {
        "n": n,
        "periodic_multiple_ok": periodic_ok,
        "periodic_failures": periodic_failures,
        "coprime_class_square_ok": coprime_ok,
        "coprime_failures": coprime_failures,
    }


def parity_report(n: int, report: CensusReport | None = None) -> dict:
    """Per-pointer degrees are even; counts C(m,2)-1, -2, -3 never occur."""
    if report is None:
        report = census(n)
    m = 2 * n - 1
    degrees_even = True
    degree_failures: list[list[int]] = []
    for perm in iter_max_pile(n):
        reduced = contract(perm)
        if any(d % 2 for d in compatibility_degrees(reduced, cyclic=True).values()):
            degrees_even = False
            degree_failures.append(list(reduced))
    top = m * (m - 1) // 2
    forbidden = [top - 1, top - 2, top - 3]
    gap_ok = all(k not in report.histogram for k in forbidden)
    return {
        "n": n,
        "degrees_even": degrees_even,
        "degree_failures": degree_failures,
        "forbidden_counts": forbidden,
        "gap_ok": gap_ok,
    }
