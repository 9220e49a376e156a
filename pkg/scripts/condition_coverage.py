#!/usr/bin/env python3
"""Measure how often each sufficient winning condition fires, and its slack.

Sweeps every game on max-pile permutations of length 6 and samples games
at length 8, then reports fire rates against the solved winner: a fired
condition must always agree (soundness), and the gap shows how much of
the ONE-win region the closed conditions actually explain.

Example:
    python scripts/condition_coverage.py --samples 2000 --seed 3
"""

from __future__ import annotations

import argparse
import random
from collections import Counter
from itertools import combinations

from cdsgame import GameState, GrundyCache, strategic_pile, winner, winning_conditions_report
from cdsgame.taxonomy import iter_max_pile

CONDITIONS = ("three_quarters", "excellent_majority", "good_margin", "deficit_bound")


def examine(state: GameState, cache: GrundyCache, stats: Counter) -> None:
    report = winning_conditions_report(state)
    who = winner(state, cache)
    stats["games"] += 1
    if who == "ONE":
        stats["one_wins"] += 1
    for name in CONDITIONS:
        if report[name]:
            stats[name] += 1
            if who != "ONE":
                stats[f"{name}:UNSOUND"] += 1
    if report["one_conditions_fired"] and who == "ONE":
        stats["explained"] += 1


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=1000, help="length-8 samples")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    cache = GrundyCache()
    stats: Counter = Counter()
    for perm in iter_max_pile(3):
        pile = sorted(strategic_pile(perm).elements)
        for a in range(len(pile) + 1):
            for sub in combinations(pile, a):
                examine(GameState(perm, frozenset(sub)), cache, stats)

    rng = random.Random(args.seed)
    pool = list(iter_max_pile(4))
    for _ in range(args.samples):
        perm = rng.choice(pool)
        pile = sorted(strategic_pile(perm).elements)
        size = rng.randrange(len(pile) + 1)
        examine(GameState(perm, frozenset(rng.sample(pile, size))), cache, stats)

    games = stats["games"]
    print(f"{games} games examined, {stats['one_wins']} first-player wins")
    for name in CONDITIONS:
        unsound = stats.get(f"{name}:UNSOUND", 0)
        print(
            f"  {name:20s} fired {stats[name]:6d}"
            + ("  UNSOUND!" if unsound else "")
        )
    if stats["one_wins"]:
        coverage = stats["explained"] / stats["one_wins"]
        print(f"  conditions explain {coverage:.1%} of the first-player wins")


if __name__ == "__main__":
    main()
