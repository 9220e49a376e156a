"""Group action, difference sequences, periodic triples, counting."""

from __future__ import annotations

import math
import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdsgame import (
    PeriodicTriple,
    act,
    build_periodic_permutation,
    contract,
    coprime_pair_count,
    count_periodic_max_pile,
    difference_sequence,
    has_max_pile,
    identity,
    is_valid_difference_sequence,
    orbit,
    orbit_size,
    periodic_has_max_pile,
    permutation_from_difference,
    recover_periodic_triple,
    reduce_mod,
    stabilizer,
    uncontract,
)
from cdsgame.taxonomy import context_count, iter_max_pile
from conftest import all_perms, brute_psi

perms_of = lambda m: st.permutations(list(range(1, m + 1))).map(tuple)


class TestAction:
    def test_published_example(self):
        assert act((2, 3), (5, 4, 1, 3, 2)) == (1, 5, 3, 2, 4)

    def test_identity_element(self):
        perm = (3, 1, 4, 2, 5)
        assert act((0, 0), perm) == perm

    @settings(max_examples=200)
    @given(perms_of(9), st.integers(0, 8), st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
    def test_composition(self, perm, a, b, c, d):
        assert act((c, d), act((a, b), perm)) == act(((a + c) % 9, (b + d) % 9), perm)

    @settings(max_examples=100)
    @given(perms_of(7), st.integers(0, 6), st.integers(0, 6))
    def test_shift_and_translate_commute(self, perm, a, b):
        assert act((a, 0), act((0, b), perm)) == act((0, b), act((a, 0), perm))


class TestDifferenceSequence:
    def test_published_example(self):
        diffs = difference_sequence((2, 4, 3, 8, 1, 9, 5, 7, 6))
        assert diffs.values == (2, 8, 5, 2, 8, 5, 2, 8, 5)
        assert diffs.period == 3

    def test_identity_constant(self):
        diffs = difference_sequence(identity(3))
        assert diffs.values == (1, 1, 1)
        assert diffs.period == 1

    def test_translation_invariance_and_shift_law(self):
        perm = (5, 4, 1, 3, 2)
        base = difference_sequence(perm).values
        shifted = difference_sequence(act((2, 3), perm)).values
        assert shifted == tuple(base[(k - 2) % 5] for k in range(5))
        assert difference_sequence(act((0, 4), perm)).values == base

    def test_period_divides_length(self):
        for perm in all_perms(6):
            p = difference_sequence(perm).period
            assert p is None or 6 % p == 0

    def test_telescoping(self):
        rng = random.Random(7)
        for _ in range(100):
            perm = tuple(rng.sample(range(1, 10), 9))
            diffs = difference_sequence(perm).values
            i, j = rng.randrange(9), rng.randrange(1, 9)
            total = sum(diffs[(i + k) % 9] for k in range(j)) % 9
            assert (perm[(i + j) % 9] - perm[i]) % 9 == total


class TestDifferenceCriterion:
    def test_published_example_is_valid(self):
        assert is_valid_difference_sequence((2, 8, 5, 2, 8, 5, 2, 8, 5))

    def test_zero_window_rejected(self):
        assert not is_valid_difference_sequence((1, 8, 3, 3, 3, 3, 3, 3, 3))

    def test_exhaustive_agreement_mod_5(self):
        realizable = {difference_sequence(p).values for p in all_perms(5)}
        for values in product(range(1, 6), repeat=5):
            assert is_valid_difference_sequence(values) == (values in realizable)

    def test_reconstruction_published(self):
        assert permutation_from_difference((2, 8, 5, 2, 8, 5, 2, 8, 5), 2) == (
            2, 4, 3, 8, 1, 9, 5, 7, 6,
        )

    def test_constant_one_gives_identity(self):
        assert permutation_from_difference((1, 1, 1, 1), 1) == (1, 2, 3, 4)

    @settings(max_examples=300)
    @given(perms_of(9))
    def test_round_trip(self, perm):
        diffs = difference_sequence(perm).values
        assert permutation_from_difference(diffs, perm[0]) == perm

    def test_invalid_rejected(self):
        with pytest.raises(ValueError):
            permutation_from_difference((1, 4, 1, 1, 1), 1)


class TestStabilizerOrbit:
    def brute_stabilizer(self, perm):
        m = len(perm)
        return {
            (a, b) for a in range(m) for b in range(m) if act((a, b), perm) == perm
        }

    def test_published_example(self):
        stab = stabilizer((2, 4, 3, 8, 1, 9, 5, 7, 6))
        assert stab.generator == (3, 6)
        assert stab.order == 3

    def test_brute_force_match(self):
        for m in (5, 7, 9):
            rng = random.Random(m)
            pool = [tuple(rng.sample(range(1, m + 1), m)) for _ in range(30)]
            pool.append(identity(m))
            for perm in pool:
                stab = stabilizer(perm)
                brute = self.brute_stabilizer(perm)
                a, b = stab.generator
                generated = {((k * a) % m, (k * b) % m) for k in range(m)}
                assert brute == generated
                assert len(brute) == stab.order

    def test_trivial_iff_non_periodic(self):
        for perm in all_perms(5):
            p = difference_sequence(perm).period
            stab = stabilizer(perm)
            if p is None:
                assert stab.order == 1
            else:
                assert stab.order == 5 // p

    def test_constant_difference_full_stabilizer(self):
        perm = permutation_from_difference((2,) * 5, 1)
        stab = stabilizer(perm)
        assert stab.generator == (1, 2)
        assert stab.order == 5

    def test_orbit_sizes(self):
        assert orbit_size((2, 4, 3, 8, 1, 9, 5, 7, 6)) == 27
        assert len(orbit((2, 4, 3, 8, 1, 9, 5, 7, 6))) == 27
        for perm in all_perms(5):
            members = orbit(perm)
            assert len(members) == orbit_size(perm)
            p = difference_sequence(perm).period
            assert len(members) == (5 * p if p is not None else 25)
            assert len(members) * stabilizer(perm).order == 25


class TestResidues:
    def test_published_example(self):
        assert reduce_mod((2, 4, 3, 8, 1, 9, 5, 7, 6), 3) == (2, 1, 3)

    def test_trivial(self):
        assert reduce_mod(identity(9), 1) == (1,)

    def test_residue_periodicity(self):
        perm = (2, 4, 3, 8, 1, 9, 5, 7, 6)
        for i in range(9):
            assert perm[i] % 3 == perm[(i + 3) % 9] % 3

    def test_rejects_bad_period(self):
        with pytest.raises(ValueError):
            reduce_mod((2, 4, 3, 8, 1, 9, 5, 7, 6), 1)  # period 3 does not divide 1
        with pytest.raises(ValueError):
            reduce_mod(identity(9), 2)  # 2 does not divide 9


class TestPeriodicTriples:
    def test_build_published(self):
        triple = PeriodicTriple((2, 1, 3), (0, 1, 0), 2)
        assert build_periodic_permutation(triple, 9) == (2, 4, 3, 8, 1, 9, 5, 7, 6)

    def test_collapse_p_equals_1(self):
        triple = PeriodicTriple((1,), (0,), 2)
        perm = build_periodic_permutation(triple, 5)
        assert difference_sequence(perm).period == 1
        assert perm[0] == 1

    def test_recover_published(self):
        triple = recover_periodic_triple((2, 4, 3, 8, 1, 9, 5, 7, 6), 3)
        assert triple == PeriodicTriple((2, 1, 3), (0, 1, 0), 2)

    def test_recover_identity(self):
        for m in (3, 5, 9):
            assert recover_periodic_triple(identity(m), 1) == PeriodicTriple((1,), (0,), 1)

    def test_round_trip_exhaustive_s9(self):
        for perm in all_perms(9):
            period = difference_sequence(perm).period
            if period not in (1, 3):
                continue
            for p in (1, 3):
                if p % period:
                    continue
                triple = recover_periodic_triple(perm, p)
                assert build_periodic_permutation(triple, 9) == perm
                assert math.gcd(triple.k, 9 // p) == 1

    def test_build_period_divides(self):
        for phi in ((1, 2), (2, 1)):
            for k in (1, 3):
                for offsets in product(range(4), repeat=2):
                    perm = build_periodic_permutation(PeriodicTriple(phi, offsets, k), 8)
                    period = difference_sequence(perm).period
                    assert period is not None and 2 % period == 0

    def test_gcd_guard(self):
        with pytest.raises(ValueError):
            build_periodic_permutation(PeriodicTriple((1,), (0,), 2), 8)


class TestPeriodicMaxPile:
    def test_constant_difference_two(self):
        perm = permutation_from_difference((2,) * 5, 2)
        assert periodic_has_max_pile(perm, 1)
        assert has_max_pile(uncontract(perm))

    def test_identity_like_fails(self):
        assert not periodic_has_max_pile(identity(5), 1)

    def test_agreement_with_direct_oracle(self):
        for m in (5, 7):
            for perm in all_perms(m):
                period = difference_sequence(perm).period
                if period is None:
                    continue
                assert periodic_has_max_pile(perm, period) == has_max_pile(
                    uncontract(perm)
                )


class TestCounting:
    def test_psi_examples(self):
        assert coprime_pair_count(1) == 1
        assert coprime_pair_count(5) == 3
        assert coprime_pair_count(15) == 3

    def test_psi_brute_force(self):
        for m in range(1, 500):
            assert coprime_pair_count(m) == brute_psi(m)

    def test_counts_against_census(self):
        for n, p, expected in ((3, 1, 15), (4, 1, 35), (5, 3, 81)):
            assert count_periodic_max_pile(n, p) == expected
        for n in (2, 3, 4):
            m = 2 * n - 1
            for p in (d for d in range(1, m + 1) if m % d == 0):
                brute = 0
                for perm in iter_max_pile(n):
                    reduced = contract(perm)
                    period = difference_sequence(reduced).period or m
                    if p % period == 0:
                        brute += 1
                assert count_periodic_max_pile(n, p) == brute

    def test_rejects_non_divisor(self):
        with pytest.raises(ValueError):
            count_periodic_max_pile(3, 2)


class TestClassPreservation:
    def test_action_preserves_contracted_max_pile_and_count(self):
        # every group element, every contracted max-pile permutation
        for n in (3, 4):
            for perm in iter_max_pile(n):
                reduced = contract(perm)
                k = context_count(reduced, cyclic=True)
                m = len(reduced)
                for a in range(m):
                    for b in range(m):
                        moved = act((a, b), reduced)
                        assert has_max_pile(uncontract(moved))
                        assert context_count(moved, cyclic=True) == k
