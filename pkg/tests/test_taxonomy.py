"""Context counts, censuses, classification, and structural lemmas."""

from __future__ import annotations

import math

import pytest

from cdsgame import (
    census,
    classify,
    constant_diff_context_count,
    context_count,
    contract,
    descending,
    divisibility_report,
    evens_then_odds,
    four_two_swap,
    halved_interleave,
    has_max_pile,
    has_violating_subsequence,
    incompatibility_graph,
    parity_report,
    permutation_from_difference,
    strategic_pile,
    uncontract,
    universal_pointers,
)
from cdsgame.taxonomy import (
    MAX_CONTEXTS,
    MAX_MINUS_4,
    MIN_CONTEXTS_DESC,
    MIN_CONTEXTS_INTERLEAVED,
    OTHER,
    compatibility_degrees,
    iter_max_pile,
)
from conftest import all_perms, naive_valid_contexts


class TestContextCount:
    def test_contracted_full_count(self):
        assert context_count((2, 4, 1, 3, 5), cyclic=True) == 10

    def test_identity_zero(self):
        assert context_count((1, 2, 3, 4)) == 0

    def test_four_two_swap_contraction(self):
        reduced = contract(four_two_swap(4))
        assert reduced == (4, 2, 6, 1, 3, 5, 7)
        assert context_count(reduced, cyclic=True) == math.comb(7, 2) - 4 == 17

    def test_matches_naive(self):
        for m in range(2, 7):
            for perm in all_perms(m):
                assert context_count(perm) == len(naive_valid_contexts(perm))
                assert context_count(perm, cyclic=True) == len(
                    naive_valid_contexts(perm, cyclic=True)
                )


class TestUniversalPointers:
    def test_full_family(self):
        reduced = contract(evens_then_odds(3))
        assert universal_pointers(reduced, cyclic=True) == frozenset(range(1, 6))

    def test_identity_none(self):
        assert universal_pointers((1, 2, 3, 4)) == frozenset()

    def test_four_two_swap(self):
        reduced = contract(four_two_swap(4))
        universal = universal_pointers(reduced, cyclic=True)
        assert len(universal) == 7 - 4  # all but four pointers
        vertices, edges = incompatibility_graph(reduced, cyclic=True)
        assert len(vertices) == 4
        assert len(edges) == 4
        assert all(
            sum(1 for e in edges if v in e) % 2 == 0 and sum(1 for e in edges if v in e) >= 2
            for v in vertices
        )


class TestConstantDifferenceCount:
    def test_examples(self):
        assert constant_diff_context_count(2, 3) == 10
        assert constant_diff_context_count(2, 4) == 21
        assert constant_diff_context_count(1, 5) == 0

    def test_against_direct_count(self):
        for n in (3, 4):
            m = 2 * n - 1
            for d in range(2, m):
                if math.gcd(d, m) != 1:
                    continue
                reduced = permutation_from_difference((d,) * m, 1)
                assert constant_diff_context_count(d, n) == context_count(
                    reduced, cyclic=True
                )

    def test_rejects_non_invertible(self):
        with pytest.raises(ValueError):
            constant_diff_context_count(3, 5)  # gcd(3, 9) != 1


class TestFamilies:
    def test_shapes(self):
        assert evens_then_odds(3) == (2, 4, 6, 1, 3, 5)
        assert four_two_swap(3) == (4, 2, 6, 1, 3, 5)
        assert descending(3) == (5, 4, 3, 2, 6, 1)
        assert halved_interleave(3) == (6, 1, 4, 2, 5, 3)

    def test_all_have_max_pile(self):
        for n in (3, 4, 5):
            for family in (evens_then_odds, four_two_swap, descending, halved_interleave):
                assert has_max_pile(family(n)), family.__name__

    def test_context_counts(self):
        for n in (3, 4):
            m = 2 * n - 1
            top = m * (m - 1) // 2
            assert context_count(evens_then_odds(n)) == top
            assert context_count(four_two_swap(n)) == top - 4
            assert context_count(descending(n)) == m
            assert context_count(halved_interleave(n)) == m


class TestCensus:
    def test_tiny(self):
        report = census(2)
        assert report.total == 3
        assert report.histogram == {3: 3}

    def test_small_histogram(self):
        report = census(3)
        assert report.histogram == {10: 5, 6: 25, 5: 10}
        assert report.total == 40

    def test_orbit_decomposition_covers_total(self):
        report = census(3, include_orbits=True)
        assert sum(size for _, size, _ in report.orbits) == report.total
        assert len(report.orbits) == 4

    def test_threads_agree(self):
        solo = census(3)
        multi = census(3, threads=2)
        assert solo.histogram == multi.histogram

    def test_cap(self):
        with pytest.raises(ValueError):
            census(7, max_n=6)
        with pytest.raises(ValueError):
            census(1)

    def test_json_schema(self):
        data = census(3, include_orbits=True).to_json()
        assert set(data) == {"n", "total", "histogram", "orbits"}
        assert data["histogram"] == {"5": 10, "6": 25, "10": 5}
        assert all(set(o) == {"rep", "size", "k"} for o in data["orbits"])


class TestClassification:
    def test_representatives(self):
        assert classify((2, 4, 1, 3, 5)) == MAX_CONTEXTS
        assert classify((4, 3, 2, 1, 5)) == MIN_CONTEXTS_DESC
        assert classify(contract(four_two_swap(4))) == MAX_MINUS_4
        assert classify(contract(halved_interleave(3))) == MIN_CONTEXTS_INTERLEAVED

    def test_rejects_non_contracted(self):
        with pytest.raises(ValueError):
            classify((1, 2, 3, 4, 5))

    def test_tags_match_counts(self):
        for n in (3, 4):
            m = 2 * n - 1
            top = m * (m - 1) // 2
            seen = set()
            for perm in iter_max_pile(n):
                reduced = contract(perm)
                tag = classify(reduced)
                seen.add(tag)
                k = context_count(reduced, cyclic=True)
                if tag == MAX_CONTEXTS:
                    assert k == top
                elif tag == MAX_MINUS_4:
                    assert k == top - 4
                elif tag in (MIN_CONTEXTS_DESC, MIN_CONTEXTS_INTERLEAVED):
                    assert k == m
                assert (k == top) == (tag == MAX_CONTEXTS)
                assert (k == top - 4) == (tag == MAX_MINUS_4)
                assert (k == m) == (tag in (MIN_CONTEXTS_DESC, MIN_CONTEXTS_INTERLEAVED))
            assert seen >= {MAX_CONTEXTS, MAX_MINUS_4, MIN_CONTEXTS_DESC, MIN_CONTEXTS_INTERLEAVED}
            if n == 4:
                assert OTHER in seen


class TestViolatingWindows:
    def test_examples(self):
        assert has_violating_subsequence((1, 2, 3))
        assert not has_violating_subsequence((2, 4, 1, 3, 5))

    def test_max_pile_contractions_never_violate(self):
        for n in (2, 3, 4):
            for perm in iter_max_pile(n):
                assert not has_violating_subsequence(contract(perm))

    def test_against_brute_force(self):
        def brute(perm):
            m = len(perm)
            for k in range(m):
                for j in range(k + 1, m):
                    if j - k + 1 == m:
                        continue
                    window = perm[k : j + 1]
                    a = perm[k]
                    if perm[j] == a + (j - k) and sorted(window) == list(
                        range(a, a + j - k + 1)
                    ):
                        return True
            return False

        for perm in all_perms(6):
            assert has_violating_subsequence(perm) == brute(perm)


class TestStructuralLemmas:
    def test_degree_parity_and_graph_bounds(self):
        for n in (3, 4):
            m = 2 * n - 1
            top = m * (m - 1) // 2
            for perm in iter_max_pile(n):
                reduced = contract(perm)
                degrees = compatibility_degrees(reduced, cyclic=True)
                assert all(d % 2 == 0 for d in degrees.values())
                k = context_count(reduced, cyclic=True)
                c = top - k
                vertices, edges = incompatibility_graph(reduced, cyclic=True)
                assert len(edges) == c
                if c > 0:
                    a = len(vertices)
                    assert a <= c <= a * (a - 1) // 2

    def test_minimum_class_degree_two(self):
        for n in (3, 4):
            m = 2 * n - 1
            for perm in iter_max_pile(n):
                reduced = contract(perm)
                if context_count(reduced, cyclic=True) == m:
                    degrees = compatibility_degrees(reduced, cyclic=True)
                    assert all(d == 2 for d in degrees.values())

    def test_degree_two_blocks_are_consecutive(self):
        # entries strictly between p and p+1 form a consecutive value range;
        # values live in Z_m, so the range may wrap cyclically
        def is_cyclic_interval(values: set[int], m: int) -> bool:
            if not values or len(values) == m:
                return True
            runs = sum(1 for v in values if v % m + 1 not in values)
            return runs == 1

        for n in (3, 4):
            m = 2 * n - 1
            for perm in iter_max_pile(n):
                reduced = contract(perm)
                degrees = compatibility_degrees(reduced, cyclic=True)
                for p in range(1, m):
                    if degrees[p] != 2:
                        continue
                    a = reduced.index(p)
                    b = reduced.index(p + 1)
                    if not a < b:
                        continue
                    between = set(reduced[a + 1 : b])
                    assert is_cyclic_interval(between, m)

    def test_reports(self):
        report = census(3)
        div = divisibility_report(3, report)
        par = parity_report(3, report)
        assert div["periodic_multiple_ok"] and div["coprime_class_square_ok"]
        assert par["degrees_even"] and par["gap_ok"]
        assert par["forbidden_counts"] == [9, 8, 7]
