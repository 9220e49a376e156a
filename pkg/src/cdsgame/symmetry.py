"""The shift-translate group action and periodic difference sequences.

The pair (a, b) in Z_m x Z_m acts on a length-m permutation by a cyclic
shift of positions by a followed by adding b to every value (the two
commute).  The *difference sequence* D(k) = pi(k+1) - pi(k) (cyclically,
mod m) is invariant under translation and shifts along with the
permutation, so the stabilizer of a permutation whose differences
repeat with period p is the cyclic group generated by
(p, pi(p+1) - pi(1)); orbits have size m*p for periodic difference
sequences and m^2 otherwise.

Every permutation with period dividing p (p | m) factors uniquely into
a triple: a base permutation phi of S_p, a vector of p block offsets in
{0 .. m/p - 1}, and a stride k coprime to m/p:

    pi(i) = offsets[i mod p] * p + phi(i mod p) + k * p * floor((i-1)/p)

with all values reduced to representatives 1..m.  Contracted max-pile
permutations with periodic differences are characterized by the base
triple, which yields exact counts of them via a totient-style function
counting the c with both c and c-1 coprime to m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .perm import Perm, check_permutation, format_permutation
from .pile import has_max_pile, uncontract

GroupElement = tuple[int, int]


def _rep(x: int, m: int) -> int:
    """Smallest strictly positive representative of x mod m (m stands for 0)."""
    r = x % m
    return r if r else m


def act(g: GroupElement, perm: Sequence[int]) -> Perm:
    """Apply (a, b): x -> perm(x - a) + b, values kept in 1..m.

    >>> act((2, 3), (5, 4, 1, 3, 2))
    (1, 5, 3, 2, 4)
    """
    a, b = g
    perm = tuple(perm)
    m = len(perm)
    return tuple(_rep(perm[(x - a) % m] + b, m) for x in range(m))


@dataclass(frozen=True)
class DifferenceSequence:
    """Cyclic consecutive differences mod m; period is None when non-periodic."""

    values: tuple[int, ...]
    period: int | None

    @property
    def m(self) -> int:
        return len(self.values)


def _smallest_period(values: Sequence[int]) -> int | None:
    """Smallest proper cyclic period; a minimal period must divide the length."""
    m = len(values)
    for p in sorted(d for d in range(1, m) if m % d == 0):
        if all(values[k] == values[(k + p) % m] for k in range(m)):
            return p
    return None


def difference_sequence(perm: Sequence[int]) -> DifferenceSequence:
    """D(k) = pi(k+1) - pi(k) for k < m, and D(m) = pi(1) - pi(m), mod m.

    >>> difference_sequence((2, 4, 3, 8, 1, 9, 5, 7, 6)).values
    (2, 8, 5, 2, 8, 5, 2, 8, 5)
    """
    perm = tuple(perm)
    m = len(perm)
    values = tuple(_rep(perm[(k + 1) % m] - perm[k], m) for k in range(m))
    return DifferenceSequence(values, _smallest_period(values))


def is_valid_difference_sequence(values: Sequence[int]) -> bool:
    """True iff the full sum is 0 mod m and no shorter cyclic window sums to 0."""
    values = tuple(values)
    m = len(values)
    if sum(values) % m != 0:
        return False
    for i in range(m):
        total = 0
        for j in range(m - 1):
            total = (total + values[(i + j) % m]) % m
            if total == 0:
                return False
    return True


def permutation_from_difference(values: Sequence[int], a1: int) -> Perm:
    """Integrate a valid difference sequence starting from the value a1."""
    values = tuple(values)
    m = len(values)
    if not is_valid_difference_sequence(values):
        raise ValueError(f"{list(values)} is not a difference sequence of any permutation")
    out = [_rep(a1, m)]
    for k in range(m - 1):
        out.append(_rep(out[-1] + values[k], m))
    return check_permutation(out)


@dataclass(frozen=True)
class Stabilizer:
    generator: GroupElement
    order: int


def stabilizer(perm: Sequence[int]) -> Stabilizer:
    """Generator and order of the stabilizer under the shift-translate action.

    Trivial iff the difference sequence is non-periodic; otherwise
    generated by (p, pi(p+1) - pi(1)) with order m/p.
    """
    perm = tuple(perm)
    m = len(perm)
    p = difference_sequence(perm).period
    if p is None:
        return Stabilizer((0, 0), 1)
    return Stabilizer((p, _rep(perm[p] - perm[0], m)), m // p)


def orbit_size(perm: Sequence[int]) -> int:
    """m * p for period-p differences, m^2 otherwise."""
    m = len(perm)
    p = difference_sequence(perm).period
    return m * p if p is not None else m * m


def orbit(perm: Sequence[int]) -> set[Perm]:
    """The full orbit under the action, by enumeration."""
    perm = tuple(perm)
    m = len(perm)
    return {act((a, b), perm) for a in range(m) for b in range(m)}


def reduce_mod(perm: Sequence[int], p: int) -> Perm:
    """First p entries taken mod p (representatives 1..p).

    Requires p | m and the difference period to divide p; the residues
    then repeat with period p and the prefix is a permutation of 1..p.

    >>> reduce_mod((2, 4, 3, 8, 1, 9, 5, 7, 6), 3)
    (2, 1, 3)
    """
    perm = tuple(perm)
    m = len(perm)
    _require_period(perm, p)
    return check_permutation(_rep(perm[i], p) for i in range(p))


def _require_period(perm: Sequence[int], p: int) -> None:
    m = len(perm)
    if p < 1 or m % p != 0:
        raise ValueError(f"{p} does not divide the length {m}")
    period = difference_sequence(perm).period
    effective = period if period is not None else m  # non-periodic: only p = m fits
    if p % effective != 0:
        raise ValueError(
            f"difference period of {format_permutation(perm)} does not divide {p}"
        )


@dataclass(frozen=True)
class PeriodicTriple:
    """Base permutation, block offsets, and stride of a periodic permutation."""

    phi: tuple[int, ...]
    offsets: tuple[int, ...]
    k: int

    @property
    def p(self) -> int:
        return len(self.phi)

    def to_json(self) -> dict:
        return {
            "phi": list(self.phi),
            "R": list(self.offsets),
            "k": self.k,
            "p": self.p,
        }


def build_periodic_permutation(triple: PeriodicTriple, m: int) -> Perm:
    """Evaluate the block formula; the result has difference period dividing p.

    >>> build_periodic_permutation(PeriodicTriple((2, 1, 3), (0, 1, 0), 2), 9)
    (2, 4, 3, 8, 1, 9, 5, 7, 6)
    """
    p = triple.p
    if m % p != 0:
        raise ValueError(f"block length {p} does not divide {m}")
    blocks = m // p
    if math.gcd(triple.k, blocks) != 1:
        raise ValueError(f"stride {triple.k} is not coprime to {blocks}")
    check_permutation(triple.phi)
    if len(triple.offsets) != p or not all(0 <= r < blocks for r in triple.offsets):
        raise ValueError(f"offsets must be length {p} over 0..{blocks - 1}")
    out = []
    for i in range(1, m + 1):
        j = _rep(i, p)
        value = triple.offsets[j - 1] * p + triple.phi[j - 1] + triple.k * p * ((i - 1) // p)
        out.append(_rep(value, m))
    return check_permutation(out)


def recover_periodic_triple(perm: Sequence[int], p: int) -> PeriodicTriple:
    """Invert the block formula for a permutation of difference period dividing p.

    >>> recover_periodic_triple((2, 4, 3, 8, 1, 9, 5, 7, 6), 3)
    PeriodicTriple(phi=(2, 1, 3), offsets=(0, 1, 0), k=2)
    """
    perm = tuple(perm)
    m = len(perm)
    _require_period(perm, p)
    phi = reduce_mod(perm, p)
    offsets = tuple((perm[i] - phi[i]) // p for i in range(p))
    k = _periodic_stride(perm, p)
    return PeriodicTriple(phi, offsets, k)


def _periodic_stride(perm: Sequence[int], p: int) -> int:
    """The constant p-step jump (pi(p+1) - pi(1))/p, as a 1..m/p representative."""
    m = len(perm)
    if p == m:
        return 1
    step = (perm[p] - perm[0]) % m
    if step % p != 0:
        raise AssertionError("p-step difference not divisible by the period")
    return _rep(step // p, m // p)


def periodic_has_max_pile(perm: Sequence[int], p: int) -> bool:
    """Max-pile test for a contracted permutation with difference period p.

    True iff the base permutation, uncontracted into length p+1, has a
    maximal pile and the stride minus one is coprime to m/p.
    """
    perm = tuple(perm)
    m = len(perm)
    _require_period(perm, p)
    base = reduce_mod(perm, p)
    if not has_max_pile(uncontract(base)):
        return False
    k = _periodic_stride(perm, p)
    return math.gcd(k - 1, m // p) == 1


def coprime_pair_count(m: int) -> int:
    """Count 0 < c <= m with gcd(c, m) = gcd(c-1, m) = 1.

    Closed form m * prod(1 - 2/q) over the distinct primes q of m.

    >>> [coprime_pair_count(m) for m in (1, 5, 15)]
    [1, 3, 3]
    """
    if m < 1:
        raise ValueError("m must be positive")
    num, den = m, 1
    for q in _distinct_primes(m):
        num *= q - 2
        den *= q
    return num // den


def _distinct_primes(m: int) -> list[int]:
    primes = []
    q = 2
    while q * q <= m:
        if m % q == 0:
            primes.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        primes.append(m)
    return primes


def count_periodic_max_pile(n: int, p: int) -> int:
    """Contracted max-pile permutations of length 2n-1 with period dividing p.

    2 * p!/(p+1) * (m/p)^p * coprime_pair_count(m/p) with m = 2n - 1.
    """
    m = 2 * n - 1
    if p < 1 or m % p != 0:
        raise ValueError(f"{p} does not divide {m}")
    base_count = 2 * math.factorial(p)
    if base_count % (p + 1) != 0:
        raise AssertionError("non-integral base-permutation count")
    blocks = m // p
    return (base_count // (p + 1)) * blocks**p * coprime_pair_count(blocks)
