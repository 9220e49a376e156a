#!/usr/bin/env python3
"""Tabulate Grundy values of the symmetric family against the closed form.

For each family size the recursion is evaluated over every target set,
confirming the value depends only on the target count.

Example:
    python scripts/grundy_table.py --max-m 4
"""

from __future__ import annotations

import argparse
from itertools import combinations

from cdsgame import (
    GameState,
    GrundyCache,
    evens_then_odds,
    format_permutation,
    grundy,
    grundy_closed_form,
    strategic_pile,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=4)
    args = parser.parse_args()

    cache = GrundyCache()
    for m in range(1, args.max_m + 1):
        perm = evens_then_odds(m)
        pile = sorted(strategic_pile(perm).elements)
        print(f"\nfamily m={m}: {format_permutation(perm)}, live targets {pile}")
        print("   a  closed  recursive  sets")
        for a in range(len(pile) + 1):
            values = {
                grundy(GameState(perm, frozenset(sub)), cache)
                for sub in combinations(pile, a)
            }
            closed = grundy_closed_form(m, a)
            flat = values == {closed}
            print(
                f"  {a:2d}  {closed:6d}  {'/'.join(map(str, sorted(values))):>9s}"
                f"  {'ok' if flat else 'MISMATCH'}"
            )


if __name__ == "__main__":
    main()
