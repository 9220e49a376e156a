"""Strategic pile: cycle map, sortability, duration, contraction."""

from __future__ import annotations

import pytest

from cdsgame import (
    apply_cds,
    contract,
    cycle_count,
    cycle_map,
    cycles,
    duration,
    has_max_pile,
    identity,
    is_fixed_point,
    is_sortable,
    max_pile_report,
    max_pile_size,
    reachable_fixed_points,
    rotation,
    strategic_pile,
    uncontract,
    valid_contexts,
)
from cdsgame.taxonomy import iter_max_pile
from conftest import all_perms, playout_fixed_points


class TestCycleMap:
    def test_published_cycle(self, paper_pile_example):
        cmap = cycle_map(paper_pile_example)
        loop = next(c for c in cycles(cmap) if 0 in c)
        assert loop == (0, 8, 6, 3, 2, 4, 1, 5, 7)

    def test_identity_map_is_trivial(self):
        for n in range(1, 7):
            cmap = cycle_map(identity(n))
            assert all(cmap[x] == x for x in range(n + 1))

    def test_single_cycle_for_even_interleave(self):
        cmap = cycle_map((2, 4, 6, 1, 3, 5))
        assert len(cycles(cmap)) == 1

    def test_bijection(self):
        for perm in all_perms(5):
            assert sorted(cycle_map(perm)) == list(range(6))


class TestStrategicPile:
    def test_published_example(self, paper_pile_example):
        pile = strategic_pile(paper_pile_example)
        assert pile.trace == (6, 3, 2, 4, 1, 5, 7)
        assert pile.elements == frozenset(range(1, 8))

    def test_identity_empty(self):
        for n in range(1, 8):
            assert strategic_pile(identity(n)).elements == frozenset()

    def test_even_interleave(self):
        assert strategic_pile((2, 4, 6, 1, 3, 5)).elements == frozenset({1, 2, 3, 4, 5})

    def test_rotation_pile_is_its_index(self):
        for n in range(2, 8):
            for k in range(1, n):
                assert strategic_pile(rotation(n, k)).elements == {k}

    def test_json_shape(self, paper_pile_example):
        data = strategic_pile(paper_pile_example).to_json()
        assert data == {"elements": [1, 2, 3, 4, 5, 6, 7], "trace": [6, 3, 2, 4, 1, 5, 7]}


class TestSortability:
    def test_examples(self, paper_pile_example):
        assert not is_sortable(paper_pile_example)
        assert is_sortable(identity(5))
        assert is_sortable((1, 3, 2))

    def test_against_exhaustive_playouts(self):
        for m in range(1, 7):
            for perm in all_perms(m):
                reaches_identity = identity(m) in playout_fixed_points(perm)
                assert is_sortable(perm) == reaches_identity

    def test_reachable_fixed_points_against_playouts(self):
        for m in range(1, 7):
            for perm in all_perms(m):
                expected = playout_fixed_points(perm)
                got = set(reachable_fixed_points(perm))
                if is_fixed_point(perm):
                    assert expected == {perm}
                    # a fixed point reaches only itself; the pile names it
                    assert perm in got
                else:
                    assert got == set(expected)

    def test_published_reachable_rotations(self, paper_pile_example):
        got = reachable_fixed_points(paper_pile_example)
        assert got == tuple(rotation(8, p) for p in range(1, 8))


class TestPileLaws:
    def test_removal_law(self):
        # a swap removes exactly its two pointers from the pile
        for m in range(2, 7):
            for perm in all_perms(m):
                pile = strategic_pile(perm).elements
                for p, q in valid_contexts(perm):
                    child = apply_cds(perm, (p, q))
                    assert strategic_pile(child).elements == pile - {p, q}

    def test_retention(self):
        for m in range(2, 7):
            for perm in all_perms(m):
                pile = strategic_pile(perm).elements
                moves = valid_contexts(perm)
                if len(pile) > 1 and moves:
                    for x in pile:
                        assert any(x not in move for move in moves)

    def test_bounds(self):
        for m in range(2, 8):
            bound = max_pile_size(m)
            assert any(
                len(strategic_pile(perm)) == bound for perm in all_perms(m)
            )
            assert all(len(strategic_pile(perm)) <= bound for perm in all_perms(m))


class TestDuration:
    def test_published_example(self, paper_pile_example):
        assert cycle_count(paper_pile_example) == 1
        assert duration(paper_pile_example) == 3

    def test_sortable_one_mover(self):
        assert duration((1, 3, 2)) == 1

    def test_max_pile_even(self):
        for n in (2, 3, 4):
            for perm in iter_max_pile(n):
                assert duration(perm) == n - 1

    def test_fixed_point_rejected(self):
        with pytest.raises(ValueError):
            duration((1, 2, 3))

    def test_every_playout_length(self):
        from cdsgame import all_playout_lengths

        for m in range(2, 8):
            for perm in all_perms(m):
                if not is_fixed_point(perm):
                    assert all_playout_lengths(perm) == {duration(perm)}


class TestContraction:
    def test_published_example(self):
        assert contract((2, 4, 6, 1, 3, 5)) == (2, 4, 1, 3, 5)

    def test_pile_example(self, paper_pile_example):
        assert contract(paper_pile_example) == (1, 5, 2, 4, 3, 7, 6)

    def test_uncontract(self):
        assert uncontract((2, 4, 1, 3, 5)) == (2, 4, 6, 1, 3, 5)
        assert uncontract((1,)) == (2, 1)

    def test_round_trips(self):
        for n in (2, 3, 4):
            for perm in iter_max_pile(n):
                assert uncontract(contract(perm)) == perm
        for m in (1, 3, 5):
            for perm in all_perms(m):
                lifted = uncontract(perm)
                if has_max_pile(lifted):
                    assert contract(lifted) == perm

    def test_rejects_non_max_pile(self):
        with pytest.raises(ValueError):
            contract((1, 2, 3, 4))
        with pytest.raises(ValueError):
            contract((2, 1, 3, 4, 5))  # odd length

    def test_context_count_preserved(self):
        from cdsgame import context_count

        for n in (2, 3, 4):
            for perm in iter_max_pile(n):
                assert context_count(perm) == context_count(contract(perm), cyclic=True)


class TestMaxPileReport:
    def test_published_example_passes(self, paper_pile_example):
        report = max_pile_report(paper_pile_example)
        assert report == {f"item{i}": True for i in range(1, 6)}

    def test_even_interleave_passes(self):
        report = max_pile_report((2, 4, 6, 1, 3, 5))
        assert all(report.values())

    def test_odd_max_pile_single_adjacency(self):
        from cdsgame import adjacencies, reduce_adjacency

        found = False
        for perm in all_perms(5):
            if has_max_pile(perm):
                found = True
                assert max_pile_report(perm)["item3"]
                assert len(adjacencies(perm)) == 1
        assert found

    def test_every_max_pile_passes(self):
        for n in (2, 3):
            for perm in iter_max_pile(n):
                assert all(max_pile_report(perm).values())

    def test_rejects_non_max_pile(self):
        with pytest.raises(ValueError):
            max_pile_report((1, 2, 3, 4))
