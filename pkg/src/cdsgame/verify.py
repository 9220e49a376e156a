"""Named verification suites: exhaustive and sampled checks of the theory.

Each suite runs a batch of checks at desk scale and reports pass/fail
per check; a failing check always carries a concrete counterexample.
The CLI exposes these through ``cdsgame verify <suite>``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations, permutations as _permutations
from typing import Callable, Iterable

from .perm import (
    Perm,
    adjacencies,
    apply_cds,
    identity,
    is_fixed_point,
    pointer_word,
    rotation,
    valid_contexts,
)
from .pile import (
    contract,
    duration,
    has_max_pile,
    max_pile_report,
    max_pile_size,
    strategic_pile,
    uncontract,
)
from .symmetry import (
    act,
    build_periodic_permutation,
    coprime_pair_count,
    count_periodic_max_pile,
    difference_sequence,
    is_valid_difference_sequence,
    orbit,
    orbit_size,
    periodic_has_max_pile,
    permutation_from_difference,
    recover_periodic_triple,
    stabilizer,
)
from .taxonomy import (
    MAX_CONTEXTS,
    MAX_MINUS_4,
    MIN_CONTEXTS_DESC,
    MIN_CONTEXTS_INTERLEAVED,
    census,
    classify,
    compatibility_degrees,
    constant_diff_context_count,
    context_count,
    divisibility_report,
    has_violating_subsequence,
    incompatibility_graph,
    iter_max_pile,
    parity_report,
    universal_pointers,
)
from .game import (
    GameState,
    GrundyCache,
    all_playout_lengths,
    children,
    grundy,
    grundy_closed_form,
    is_excellent,
    is_good,
    minimax_wins,
    winner,
    winning_conditions_report,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    counterexample: list | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "details": self.details}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class SuiteResult:
    suite: str
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def _all_perms(m: int) -> Iterable[Perm]:
    return _permutations(range(1, m + 1))


def _check(name: str, failures: list, **details) -> CheckResult:
    return CheckResult(
        name,
        not failures,
        details,
        counterexample=failures[0] if failures else None,
    )


# ---------------------------------------------------------------------------
# suites


def suite_worked_examples(**_: object) -> list[CheckResult]:
    """Byte-exact reproduction of the published worked examples."""
    checks = []
    word = str(pointer_word((6, 3, 5, 1, 2, 4)))
    checks.append(
        _check(
            "pointer-word",
            [] if word == "(5,6)(2,3)(3,4)(4,5)(5,6)(1,2)(1,2)(2,3)(3,4)(4,5)" else [word],
        )
    )
    swapped = apply_cds((6, 3, 5, 1, 2, 4), (5, 3))
    checks.append(_check("swap-blocks", [] if swapped == (1, 2, 5, 6, 3, 4) else [list(swapped)]))
    from .perm import reduced_pointer_word

    reduced = str(reduced_pointer_word((8, 5, 2, 4, 6, 7, 3, 1), 6))
    expected = "(6,7)(4,5)(5,6)(1,2)(2,3)(3,4)(4,5)(5,6)(6,7)(2,3)(3,4)(1,2)"
    checks.append(_check("reduced-word", [] if reduced == expected else [reduced]))
    from .pile import cycle_map, cycles

    cmap = cycle_map((8, 1, 5, 2, 4, 3, 7, 6))
    cyc = [c for c in cycles(cmap) if 0 in c][0]
    checks.append(_check("cycle-map", [] if cyc == (0, 8, 6, 3, 2, 4, 1, 5, 7) else [list(cyc)]))
    pile = strategic_pile((8, 1, 5, 2, 4, 3, 7, 6))
    checks.append(_check("pile-trace", [] if pile.trace == (6, 3, 2, 4, 1, 5, 7) else [list(pile.trace)]))
    acted = act((2, 3), (5, 4, 1, 3, 2))
    checks.append(_check("group-action", [] if acted == (1, 5, 3, 2, 4) else [list(acted)]))
    diffs = difference_sequence((2, 4, 3, 8, 1, 9, 5, 7, 6))
    ok = diffs.values == (2, 8, 5) * 3 and diffs.period == 3
    checks.append(_check("difference-sequence", [] if ok else [list(diffs.values), diffs.period]))
    from .symmetry import reduce_mod

    base = reduce_mod((2, 4, 3, 8, 1, 9, 5, 7, 6), 3)
    checks.append(_check("residue-base", [] if base == (2, 1, 3) else [list(base)]))
    return checks


def suite_duration(n: int = 3, **_: object) -> list[CheckResult]:
    """Every maximal swap run has the predicted length, move order regardless."""
    failures = []
    for m in range(2, 6):
        for perm in _all_perms(m):
            if is_fixed_point(perm):
                continue
            if all_playout_lengths(perm) != {duration(perm)}:
                failures.append(list(perm))
    small = _check("all-runs-small-lengths", failures, lengths="2..5")
    failures = []
    for perm in iter_max_pile(n):
        want = {duration(perm)}
        if all_playout_lengths(perm) != want or want != {n - 1}:
            failures.append(list(perm))
    big = _check("max-pile-runs", failures, n=n, expected=n - 1)
    return [small, big]


def suite_retention(n: int = 3, **_: object) -> list[CheckResult]:
    """From any reachable position with several pile members, each can be kept."""
    failures = []
    seen: set[Perm] = set()

    def walk(perm: Perm) -> None:
        if perm in seen:
            return
        seen.add(perm)
        pile = strategic_pile(perm).elements
        moves = valid_contexts(perm)
        if moves and len(pile) > 1:
            for x in pile:
                if not any(x not in move for move in moves):
                    failures.append([list(perm), x])
        for move in moves:
            walk(apply_cds(perm, move))

    for perm in iter_max_pile(n):
        walk(perm)
    return [_check("retention", failures, n=n, positions=len(seen))]


def suite_removal(m: int = 6, **_: object) -> list[CheckResult]:
    """A swap removes exactly its two pointers from the strategic pile."""
    failures = []
    for size in range(2, m + 1):
        for perm in _all_perms(size):
            pile = strategic_pile(perm).elements
            for p, q in valid_contexts(perm):
                child_pile = strategic_pile(apply_cds(perm, (p, q))).elements
                if child_pile != pile - {p, q}:
                    failures.append([list(perm), [p, q]])
    return [_check("pile-removal", failures, max_length=m)]


def suite_pile_bound(m: int = 7, **_: object) -> list[CheckResult]:
    """|pile| <= n-1 (n even) or n-2 (n odd), over all of S_n with n >= 2.

    Length 1 is excluded: the odd-length bound is negative there while
    the pile of the trivial permutation is empty.
    """
    failures = []
    for size in range(2, m + 1):
        bound = max_pile_size(size)
        for perm in _all_perms(size):
            if len(strategic_pile(perm)) > bound:
                failures.append(list(perm))
    return [_check("pile-bound", failures, max_length=m)]


def suite_orbit_stabilizer(n: int = 4, **_: object) -> list[CheckResult]:
    """Brute-force orbits and stabilizers match the period formulas."""
    orbit_failures = []
    stab_failures = []
    for nn in range(3, n + 1):
        for perm in iter_max_pile(nn):
            reduced = contract(perm)
            m = len(reduced)
            members = orbit(reduced)
            p = difference_sequence(reduced).period
            expected = m * p if p is not None else m * m
            if len(members) != expected or orbit_size(reduced) != expected:
                orbit_failures.append(list(reduced))
            brute = {
                (a, b)
                for a in range(m)
                for b in range(m)
                if act((a, b), reduced) == reduced
            }
            stab = stabilizer(reduced)
            gen_a, gen_b = stab.generator
            generated = {((k * gen_a) % m, (k * gen_b) % m) for k in range(m)}
            if brute != generated or len(brute) != stab.order:
                stab_failures.append(list(reduced))
    return [
        _check("orbit-size", orbit_failures, n=n),
        _check("stabilizer-generator", stab_failures, n=n),
    ]


def suite_action(n: int = 4, seed: int = 0, **_: object) -> list[CheckResult]:
    """Action axioms, difference laws, and class preservation under the action."""
    rng = random.Random(seed)
    failures = []
    for _ in range(200):
        m = rng.choice([5, 7, 9])
        perm = tuple(rng.sample(range(1, m + 1), m))
        a, b, cc, d = (rng.randrange(m) for _ in range(4))
        if act((0, 0), perm) != perm:
            failures.append([list(perm), "identity"])
        if act((cc, d), act((a, b), perm)) != act(((a + cc) % m, (b + d) % m), perm):
            failures.append([list(perm), "composition"])
        shifted = act((a, 0), perm)
        dperm = difference_sequence(perm).values
        dshift = difference_sequence(shifted).values
        if any(dshift[k] != dperm[(k - a) % m] for k in range(m)):
            failures.append([list(perm), "shift-law"])
        if difference_sequence(act((0, b), perm)).values != dperm:
            failures.append([list(perm), "translation-invariance"])
        i, j = rng.randrange(m), rng.randrange(1, m)
        total = sum(dperm[(i + k) % m] for k in range(j)) % m
        lhs = (perm[(i + j) % m] - perm[i % m]) % m
        if lhs != total:
            failures.append([list(perm), "telescoping"])
    axioms = _check("axioms-and-difference-laws", failures, samples=200, seed=seed)
    failures = []
    for nn in range(3, n + 1):
        for perm in iter_max_pile(nn):
            reduced = contract(perm)
            k = context_count(reduced, cyclic=True)
            m = len(reduced)
            for g in [(1, 0), (0, 1), (2, 3)]:
                moved = act(g, reduced)
                if not has_max_pile(uncontract(moved)) or context_count(moved, cyclic=True) != k:
                    failures.append([list(reduced), list(g)])
    preservation = _check("class-preservation", failures, n=n)
    return [axioms, preservation]


def suite_diff_seq(seed: int = 0, **_: object) -> list[CheckResult]:
    """Window criterion matches realizability; integration round-trips."""
    from itertools import product

    realizable = {difference_sequence(p).values for p in _all_perms(5)}
    failures = []
    for values in product(range(1, 6), repeat=5):
        if is_valid_difference_sequence(values) != (values in realizable):
            failures.append(list(values))
    criterion = _check("window-criterion-vs-bruteforce", failures, modulus=5)
    rng = random.Random(seed)
    failures = []
    for _ in range(1000):
        perm = tuple(rng.sample(range(1, 10), 9))
        diffs = difference_sequence(perm).values
        rebuilt = permutation_from_difference(diffs, perm[0])
        if rebuilt != perm:
            failures.append(list(perm))
    round_trip = _check("integration-round-trip", failures, samples=1000, seed=seed)
    return [criterion, round_trip]


def suite_periodic(n: int = 4, **_: object) -> list[CheckResult]:
    """Triple factorization round-trips; periodic max-pile counts match censuses."""
    failures = []
    m = 9
    for perm in _all_perms(m):
        period = difference_sequence(perm).period
        if period is None or period not in (1, 3):
            continue
        for p in (1, 3):
            if p % period:
                continue
            triple = recover_periodic_triple(perm, p)
            if build_periodic_permutation(triple, m) != perm:
                failures.append([list(perm), p])
            if math.gcd(triple.k, m // p) != 1:
                failures.append([list(perm), p, "stride-coprime"])
    round_trip = _check("triple-round-trip", failures, length=m)

    failures = []
    for length in (5, 7):
        for perm in _all_perms(length):
            period = difference_sequence(perm).period
            if period is None:
                continue
            predicted = periodic_has_max_pile(perm, period)
            actual = has_max_pile(uncontract(perm))
            if predicted != actual:
                failures.append([list(perm), period])
    criterion = _check("periodic-max-pile-criterion", failures, lengths=[5, 7])

    failures = []
    counts = {}
    for nn in range(2, n + 1):
        m = 2 * nn - 1
        for p in (d for d in range(1, m + 1) if m % d == 0):
            brute = 0
            for perm in iter_max_pile(nn):
                reduced = contract(perm)
                period = difference_sequence(reduced).period or m
                if p % period == 0:
                    brute += 1
            formula = count_periodic_max_pile(nn, p)
            counts[f"n={nn},p={p}"] = formula
            if brute != formula:
                failures.append([nn, p, brute, formula])
    count_check = _check("periodic-count-formula", failures, counts=counts)
    return [round_trip, criterion, count_check]


def suite_psi(m: int = 2000, **_: object) -> list[CheckResult]:
    """Closed form of the paired-coprimality count against brute force."""
    failures = []
    for value in range(1, m + 1):
        brute = sum(
            1
            for c in range(1, value + 1)
            if math.gcd(c, value) == 1 and math.gcd(c - 1, value) == 1
        )
        if brute != coprime_pair_count(value):
            failures.append([value, brute, coprime_pair_count(value)])
    return [_check("paired-coprimality-closed-form", failures, max_m=m)]


def suite_census_checks(n: int = 3, **_: object) -> list[CheckResult]:
    """Divisibility, parity-gap, degree, and graph-shape facts of the census."""
    report = census(n)
    div = divisibility_report(n, report)
    par = parity_report(n, report)
    checks = [
        _check(
            "periodic-count-multiples",
            div["periodic_failures"],
            n=n,
        ),
        _check("coprime-class-squares", div["coprime_failures"], n=n),
        _check("degree-parity", par["degree_failures"], n=n),
        _check(
            "near-max-gap",
            [] if par["gap_ok"] else [par["forbidden_counts"]],
            n=n,
        ),
    ]
    m = 2 * n - 1
    top = m * (m - 1) // 2
    failures = []
    for perm in iter_max_pile(n):
        reduced = contract(perm)
        k = context_count(reduced, cyclic=True)
        if context_count(perm) != k:
            failures.append([list(perm), "contracted-count-differs"])
        c = top - k
        vertices, edges = incompatibility_graph(reduced, cyclic=True)
        a = len(vertices)
        if c > 0 and a > 0 and not (a <= c <= a * (a - 1) // 2):
            failures.append([list(reduced), a, c])
        if k == m:
            degrees = compatibility_degrees(reduced, cyclic=True)
            if any(d != 2 for d in degrees.values()):
                failures.append([list(reduced), "degree-not-2"])
        if has_violating_subsequence(reduced):
            failures.append([list(reduced), "violating-window"])
    checks.append(_check("structure-facts", failures, n=n))
    failures = []
    for d in range(2, 2 * n - 1):
        if math.gcd(d, 2 * n - 1) != 1:
            continue
        base = permutation_from_difference((d,) * (2 * n - 1), 1)
        expected = constant_diff_context_count(d, n)
        if context_count(base, cyclic=True) != expected:
            failures.append([d, n, expected, context_count(base, cyclic=True)])
    checks.append(_check("constant-difference-count", failures, n=n))
    return checks


def suite_classify(n: int = 3, **_: object) -> list[CheckResult]:
    """Classification tags agree with the extreme context counts."""
    m = 2 * n - 1
    top = m * (m - 1) // 2
    failures = []
    tallies: dict[str, int] = {}
    for perm in iter_max_pile(n):
        reduced = contract(perm)
        tag = classify(reduced)
        k = context_count(reduced, cyclic=True)
        tallies[tag] = tallies.get(tag, 0) + 1
        if (tag == MAX_CONTEXTS) != (k == top):
            failures.append([list(reduced), tag, k])
        if n >= 3 and (tag == MAX_MINUS_4) != (k == top - 4):
            failures.append([list(reduced), tag, k])
        if n >= 3 and (tag in (MIN_CONTEXTS_DESC, MIN_CONTEXTS_INTERLEAVED)) != (k == m):
            failures.append([list(reduced), tag, k])
        if not has_max_pile(uncontract(reduced)):
            failures.append([list(reduced), "not-max-pile"])
    return [_check("classification-consistency", failures, n=n, tallies=tallies)]


def suite_g2m(m: int = 4, n: int | None = None, **_: object) -> list[CheckResult]:
    """Recursive Grundy values of the symmetric families match the closed form."""
    from .taxonomy import evens_then_odds

    if n is not None:  # --n and --m are the same knob here
        m = n
    failures = []
    cache = GrundyCache()
    for mm in range(1, m + 1):
        perm = evens_then_odds(mm)
        pile = sorted(strategic_pile(perm).elements)
        if not is_excellent(perm, pile):
            failures.append([list(perm), "not-excellent"])
            continue
        if len(pile) % 2 != 1:
            failures.append([list(perm), "even-live-set"])
        for a in range(len(pile) + 1):
            values = {
                grundy(GameState(perm, frozenset(sub)), cache)
                for sub in combinations(pile, a)
            }
            if values != {grundy_closed_form(mm, a)}:
                failures.append([list(perm), a, sorted(values)])
    return [_check("grundy-closed-form", failures, max_m=m)]


def suite_coherence(n: int = 3, **_: object) -> list[CheckResult]:
    """Nonzero Grundy value iff the mover wins, across entire game trees."""
    failures = []
    cache = GrundyCache()
    memo: dict = {}
    states = 0

    def walk(state: GameState) -> None:
        nonlocal states
        states += 1
        if (grundy(state, cache) != 0) != minimax_wins(state, memo):
            failures.append([list(state.perm), sorted(state.targets)])
        for _, child in children(state):
            walk(child)

    for perm in iter_max_pile(n):
        pile = sorted(strategic_pile(perm).elements)
        for size in range(len(pile) + 1):
            for sub in combinations(pile, size):
                walk(GameState(perm, frozenset(sub)))
    return [_check("grundy-vs-minimax", failures, n=n, states=states)]


def suite_soundness(
    n: int = 4, seed: int = 0, samples: int = 500, **_: object
) -> list[CheckResult]:
    """Fired sufficient conditions always agree with the solved winner."""
    failures = []
    cache = GrundyCache()

    def examine(state: GameState) -> None:
        report = winning_conditions_report(state)
        who = winner(state, cache)
        if report["one_conditions_fired"] and who != "ONE":
            failures.append([list(state.perm), sorted(state.targets), report["one_conditions_fired"]])
        if report["two_small_target"] and who != "TWO":
            failures.append([list(state.perm), sorted(state.targets), "two_small_target"])

    for perm in iter_max_pile(3):
        pile = sorted(strategic_pile(perm).elements)
        for size in range(len(pile) + 1):
            for sub in combinations(pile, size):
                examine(GameState(perm, frozenset(sub)))
    exhaustive = _check("soundness-exhaustive-small", failures, n=3)
    failures = []
    if n >= 4:
        rng = random.Random(seed)
        pool = list(iter_max_pile(4))
        for _ in range(samples):
            perm = rng.choice(pool)
            pile = sorted(strategic_pile(perm).elements)
            size = rng.randrange(len(pile) + 1)
            sub = frozenset(rng.sample(pile, size))
            examine(GameState(perm, sub))
    sampled = _check("soundness-sampled", failures, n=n, samples=samples, seed=seed)
    return [exhaustive, sampled]


def suite_contraction(n: int = 4, **_: object) -> list[CheckResult]:
    """Round trips, count preservation, and the structural report."""
    failures = []
    for nn in range(2, n + 1):
        for perm in iter_max_pile(nn):
            reduced = contract(perm)
            if uncontract(reduced) != perm:
                failures.append([list(perm), "round-trip"])
            if context_count(perm) != context_count(reduced, cyclic=True):
                failures.append([list(perm), "count-preservation"])
            report = max_pile_report(perm)
            if not all(report.values()):
                failures.append([list(perm), report])
    return [_check("contraction-and-structure", failures, n=n)]


def suite_excellent_closure(n: int = 4, **_: object) -> list[CheckResult]:
    """Symmetry classes stay closed under every swap; live sets stay odd."""
    from .taxonomy import evens_then_odds

    failures = []
    for nn in range(2, n + 1):
        perm = evens_then_odds(nn)
        pile = strategic_pile(perm).elements
        if not is_excellent(perm, pile):
            failures.append([list(perm), "root-not-excellent"])
        stack = [(perm, pile)]
        seen = set()
        while stack:
            current, live = stack.pop()
            if current in seen:
                continue
            seen.add(current)
            if len(live) % 2 != 1:
                failures.append([list(current), "even-live-set"])
            for move in valid_contexts(current):
                child = apply_cds(current, move)
                child_live = live - set(move)
                if not is_excellent(child, child_live):
                    failures.append([list(child), "child-not-excellent"])
                if not is_good(child, child_live):
                    failures.append([list(child), "child-not-good"])
                if valid_contexts(child):
                    stack.append((child, child_live))
    excellent = _check("excellent-closure", failures, n=n)
    failures = []
    for nn in range(2, n + 1):
        for perm in iter_max_pile(nn):
            universal = universal_pointers(perm)
            if not is_good(perm, universal):
                failures.append([list(perm), "universal-not-good"])
                continue
            for move in valid_contexts(perm):
                child = apply_cds(perm, move)
                child_set = universal - set(move)
                if not is_good(child, child_set):
                    failures.append([list(perm), list(move)])
    good = _check("good-closure", failures, n=n)
    return [excellent, good]


SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "worked-examples": suite_worked_examples,
    "duration": suite_duration,
    "retention": suite_retention,
    "removal": suite_removal,
    "pile-bound": suite_pile_bound,
    "orbit-stabilizer": suite_orbit_stabilizer,
    "action": suite_action,
    "diff-seq": suite_diff_seq,
    "periodic-count": suite_periodic,
    "psi": suite_psi,
    "census-checks": suite_census_checks,
    "classify": suite_classify,
    "g2m": suite_g2m,
    "coherence": suite_coherence,
    "soundness": suite_soundness,
    "contraction": suite_contraction,
    "excellent-closure": suite_excellent_closure,
}


def run_suite(name: str, **kwargs: object) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    pruned = {k: v for k, v in kwargs.items() if v is not None}
    return SuiteResult(name, SUITES[name](**pruned))
