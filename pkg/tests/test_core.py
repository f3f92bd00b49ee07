"""Series validation, canonical forms, extended naturals, enumeration."""

from __future__ import annotations

import itertools

import pytest

from nakayama import (
    INFINITY,
    EmptySeries,
    ExtendedNat,
    InternalInconsistency,
    KupischSeries,
    NotAdmissible,
    enumerate_admissible,
)


class TestValidation:
    def test_golden_series_validate(self):
        a = KupischSeries.validate([3, 3, 4], True)
        assert a.lengths == (3, 3, 4) and a.cyclic
        b = KupischSeries.validate([3, 3, 3, 3, 2, 1], False)
        assert b.lengths == (3, 3, 3, 3, 2, 1) and not b.cyclic

    def test_cyclic_rotations_share_canonical_form(self):
        base = KupischSeries.validate([3, 3, 4], True)
        for rot in ([3, 4, 3], [4, 3, 3]):
            assert KupischSeries.validate(rot, True) == base

    def test_empty_series(self):
        with pytest.raises(EmptySeries):
            KupischSeries.validate([], True)
        with pytest.raises(EmptySeries):
            KupischSeries.validate([], False)

    def test_slope_violation_reports_index(self):
        with pytest.raises(NotAdmissible) as err:
            KupischSeries.validate([5, 2, 1], False)
        assert err.value.index == 1

    def test_linear_needs_terminal_one(self):
        with pytest.raises(NotAdmissible):
            KupischSeries.validate([3, 3, 2], False)

    def test_linear_interior_entries_at_least_two(self):
        with pytest.raises(NotAdmissible):
            KupischSeries.validate([1, 1], False)

    def test_cyclic_entries_at_least_two(self):
        with pytest.raises(NotAdmissible):
            KupischSeries.validate([2, 1], True)

    def test_cyclic_wraparound_slope(self):
        # c_1 must be >= c_v - 1
        with pytest.raises(NotAdmissible):
            KupischSeries.validate([2, 2, 4], True)

    def test_small_valid_series(self):
        assert KupischSeries.validate([1], False).lengths == (1,)
        assert KupischSeries.validate([2], True).lengths == (2,)
        with pytest.raises(NotAdmissible):
            KupischSeries.validate([1], True)

    def test_nonpositive_entries(self):
        with pytest.raises(NotAdmissible):
            KupischSeries.validate([0, 1], False)
        with pytest.raises(NotAdmissible):
            KupischSeries.validate([-2, -1], False)


class TestExtendedNat:
    def test_ordering(self):
        assert ExtendedNat(0) < ExtendedNat(1) < INFINITY
        assert ExtendedNat(2) <= 2 and ExtendedNat(2) >= 2
        assert 3 <= INFINITY and not INFINITY <= 3
        assert INFINITY == INFINITY and not INFINITY.is_finite

    def test_arithmetic(self):
        assert ExtendedNat(2) + 3 == 5
        assert INFINITY + 7 == INFINITY

    def test_hash_matches_int(self):
        assert hash(ExtendedNat(4)) == hash(4)
        assert len({ExtendedNat(1), 1}) == 1

    def test_json_round_trip(self):
        assert ExtendedNat(5).to_json() == 5
        assert INFINITY.to_json() == "infinity"
        assert ExtendedNat.from_json(5) == ExtendedNat(5)
        assert ExtendedNat.from_json("infinity") == INFINITY

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            ExtendedNat(-1)


class TestInjectiveLengths:
    def test_cyclic_golden(self):
        a = KupischSeries.validate([3, 3, 4], True)
        assert a.injective_lengths() == (3, 3, 4)

    def test_linear_golden(self):
        b = KupischSeries.validate([3, 3, 3, 3, 2, 1], False)
        assert b.injective_lengths() == (1, 2, 3, 3, 3, 3)

    def test_staircase(self):
        assert KupischSeries.validate([3, 2, 1], False).injective_lengths() == (1, 2, 3)


class TestOpposite:
    def test_golden_series_are_self_opposite(self):
        a = KupischSeries.validate([3, 3, 4], True)
        assert a.opposite() == a
        b = KupischSeries.validate([3, 3, 3, 3, 2, 1], False)
        assert b.opposite() == b

    def test_asymmetric_linear(self):
        alg = KupischSeries.validate([2, 3, 2, 1], False)
        assert alg.opposite().lengths == (3, 2, 2, 1)

    def test_involution_and_dimension_over_family(self):
        for alg in enumerate_admissible(4, 5):
            opp = alg.opposite()
            assert opp.opposite() == alg
            assert opp.total_dim == alg.total_dim
            assert opp.cyclic == alg.cyclic


class TestShift:
    def test_cyclic_wraps(self):
        a = KupischSeries.validate([3, 3, 4], True)
        assert a.shift(3, 1) == 1
        assert a.shift(1, -1) == 3
        assert a.shift(2, 7) == 3

    def test_linear_out_of_range_is_a_bug_signal(self):
        b = KupischSeries.validate([3, 2, 1], False)
        assert b.shift(1, 2) == 3
        with pytest.raises(InternalInconsistency):
            b.shift(3, 1)
        with pytest.raises(InternalInconsistency):
            b.shift(1, -1)


class TestEnumeration:
    def _brute_force(self, v_max, c_max):
        found = set()
        for v in range(1, v_max + 1):
            for raw in itertools.product(range(1, c_max + 1), repeat=v):
                for cyclic in (False, True):
                    try:
                        alg = KupischSeries.validate(list(raw), cyclic)
                    except NotAdmissible:
                        continue
                    found.add((alg.lengths, alg.cyclic))
        return found

    def test_matches_brute_force(self):
        algs = enumerate_admissible(4, 5)
        got = {(a.lengths, a.cyclic) for a in algs}
        assert got == self._brute_force(4, 5)
        assert len(got) == len(algs), "no duplicates"

    def test_linear_counts_are_catalan(self):
        by_v = {}
        for alg in enumerate_admissible(6, 8, shapes=("linear",)):
            by_v[alg.num_vertices] = by_v.get(alg.num_vertices, 0) + 1
        assert by_v == {1: 1, 2: 1, 3: 2, 4: 5, 5: 14, 6: 42}

    def test_order_is_deterministic(self):
        assert enumerate_admissible(5, 6) == enumerate_admissible(5, 6)

    def test_max_length_one_leaves_only_the_semisimple_point(self):
        algs = enumerate_admissible(6, 1)
        assert [(a.lengths, a.cyclic) for a in algs] == [((1,), False)]

    def test_cyclic_results_are_canonical(self):
        for alg in enumerate_admissible(5, 6, shapes=("cyclic",)):
            assert KupischSeries.validate(list(alg.lengths), True) == alg


class TestBasics:
    def test_loewy_and_dim(self):
        a = KupischSeries.validate([3, 3, 4], True)
        assert [a.loewy_length(i) for i in a.vertices()] == [3, 3, 4]
        assert a.total_dim == 10
        assert list(a.vertices()) == [1, 2, 3]

    def test_series_is_hashable_value(self):
        a1 = KupischSeries.validate([3, 3, 4], True)
        a2 = KupischSeries.validate([4, 3, 3], True)
        assert a1 == a2 and hash(a1) == hash(a2)
        assert len({a1, a2}) == 1
