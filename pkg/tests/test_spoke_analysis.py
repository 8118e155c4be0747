import math
import random
from fractions import Fraction

import pytest

from cyclecount.cycle_engine import cycles_from_subset
from cyclecount.graph_core import GraphError, build_chorded, random_chorded
from cyclecount.h2n_family import construct_h2n
from cyclecount.spoke_analysis import (
    arc_characterization,
    check_claim_3_1,
    check_claim_3_2,
    consecutive_in_set,
    count_below_theorem3_bound,
    find_sparse_spoke_set,
    spokes_intersect,
    theorem3_bound,
    theorem3_bound_exact,
)

K4 = build_chorded(4, [(1, 3), (0, 2)])
H6 = construct_h2n(3).graph


class TestSpokesIntersect:
    def test_k4_chords_cross(self):
        assert spokes_intersect(K4, (1, 3), (0, 2))

    def test_disjoint_arcs_parallel(self):
        g = build_chorded(8, [(0, 2), (4, 6), (1, 3), (5, 7)])
        assert not spokes_intersect(g, (0, 2), (4, 6))

    def test_h16_first_two_cross(self):
        g = construct_h2n(8).graph
        assert spokes_intersect(g, (1, 15), (0, 13))

    def test_symmetry(self):
        rng = random.Random(19)
        for _ in range(30):
            g = random_chorded(10, rng)
            i, j = rng.sample(range(5), 2)
            assert spokes_intersect(g, g.spokes[i], g.spokes[j]) == spokes_intersect(
                g, g.spokes[j], g.spokes[i]
            )

    def test_family_crossing_structure(self):
        # spokes e_i, e_j of a family member cross exactly when |i-j| = 1
        for n in range(2, 21):
            h = construct_h2n(n)
            for i in range(n):
                for j in range(i + 1, n):
                    got = spokes_intersect(h.graph, h.spokes[i], h.spokes[j])
                    assert got == (j - i == 1), (n, i, j)

    def test_identical_rejected(self):
        with pytest.raises(GraphError):
            spokes_intersect(K4, (1, 3), (1, 3))

    def test_non_spoke_rejected(self):
        with pytest.raises(GraphError):
            spokes_intersect(K4, (0, 1), (1, 3))


class TestConsecutiveInSet:
    def test_vacuous_pair(self):
        g = build_chorded(8, [(0, 2), (4, 6), (1, 3), (5, 7)])
        assert consecutive_in_set(g, {0, 1}, 0, 1)

    def test_h6_full_set(self):
        # in the prism member the crossing graph is the path e0-e1-e2, so
        # e1 crosses e0 but e2 does not: (e0,e1) is not consecutive in the
        # full spoke set, while (e0,e2) is (e1 crosses both)
        full = {0, 1, 2}
        assert not consecutive_in_set(H6, full, 0, 1)
        assert consecutive_in_set(H6, full, 0, 2)

    def test_nested_triple_outermost_pair(self):
        # three pairwise-parallel nested spokes: the middle one is parallel
        # to both outer ones, so the definitional predicate holds; the arc
        # form holds too, through the innermost+outermost arc pair
        g = build_chorded(12, [(0, 7), (1, 6), (2, 5), (3, 10), (4, 8), (9, 11)])
        assert consecutive_in_set(g, {0, 1, 2}, 0, 2)
        assert arc_characterization(g, {0, 1, 2}, 0, 2)

    def test_arc_form_strictly_stronger(self):
        # four pairwise-crossing diameters: every other spoke crosses both,
        # so the definition holds, but each opposite arc pair is occupied
        g = build_chorded(8, [(0, 4), (2, 6), (1, 5), (3, 7)])
        full = {0, 1, 2, 3}
        assert consecutive_in_set(g, full, 0, 1)
        assert not arc_characterization(g, full, 0, 1)

    def test_arc_implies_definition(self):
        rng = random.Random(43)
        hits = 0
        for _ in range(300):
            g = random_chorded(rng.choice([8, 10, 12]), rng)
            size = rng.randint(2, g.spoke_count)
            subset = rng.sample(range(g.spoke_count), size)
            e, f = sorted(rng.sample(subset, 2))
            if arc_characterization(g, subset, e, f):
                hits += 1
                assert consecutive_in_set(g, subset, e, f)
        assert hits > 20

    def test_membership_required(self):
        with pytest.raises(GraphError):
            consecutive_in_set(H6, {0, 1}, 0, 2)


class TestClaim31:
    def test_h6_parallel_pair_holds(self):
        verdict = check_claim_3_1(H6, {0, 2})
        assert verdict.applicable
        assert verdict.holds
        assert verdict.cycle_count == 1
        assert verdict.witness == (0, 2)

    def test_k4_crossing_pair_inapplicable(self):
        # the two chords of K4 form two cycles; the hypotheses exclude a
        # bare crossing pair, so the verdict is inapplicable, not a failure
        verdict = check_claim_3_1(K4, {0, 1})
        assert not verdict.applicable
        assert verdict.holds is None

    def test_singleton_inapplicable(self):
        assert not check_claim_3_1(H6, {1}).applicable

    def test_random_sweep_no_violations(self):
        rng = random.Random(47)
        applicable = 0
        for _ in range(800):
            g = random_chorded(rng.choice([8, 10, 12]), rng)
            size = rng.randint(2, g.spoke_count)
            verdict = check_claim_3_1(g, rng.sample(range(g.spoke_count), size))
            if verdict.applicable:
                applicable += 1
                assert verdict.holds, (g.spokes, verdict)
        assert applicable > 100


class TestClaim32:
    def test_disjoint_pair(self):
        g = build_chorded(8, [(0, 2), (4, 6), (1, 3), (5, 7)])
        verdict = check_claim_3_2(g, {0, 1})
        assert verdict.applicable
        assert verdict.holds
        assert verdict.cycle_count == 1

    def test_nested_pair(self):
        g = build_chorded(8, [(0, 2), (3, 6), (1, 4), (5, 7)])
        verdict = check_claim_3_2(g, {0, 1})
        assert verdict.applicable
        assert verdict.holds
        assert verdict.cycle_count == 1

    def test_all_crossed_inapplicable(self):
        verdict = check_claim_3_2(K4, {0, 1})
        assert not verdict.applicable

    def test_singleton_inapplicable(self):
        assert not check_claim_3_2(H6, {0}).applicable

    def test_random_sweep_no_violations(self):
        rng = random.Random(53)
        applicable = 0
        for _ in range(800):
            g = random_chorded(rng.choice([8, 10, 12]), rng)
            size = rng.randint(2, g.spoke_count)
            verdict = check_claim_3_2(g, rng.sample(range(g.spoke_count), size))
            if verdict.applicable:
                applicable += 1
                assert verdict.holds, (g.spokes, verdict)
        assert applicable > 100


def assert_sparse_set_contract(g, result):
    n = g.vertex_count
    k = math.isqrt(n)
    assert len(result.spoke_indices) >= n // 2 - 2 * k
    sizes = [hi - lo + 1 for lo, hi in result.blocks]
    assert all(k <= s <= k + 2 for s in sizes)
    assert sum(sizes) == n
    members = result.spoke_indices
    if result.case == "unintersected_spoke":
        (e,) = result.witness
        assert e in members
        assert not any(
            spokes_intersect(g, g.spokes[o], g.spokes[e])
            for o in members
            if o != e
        )
    else:
        e, f = result.witness
        assert e in members and f in members
        assert consecutive_in_set(g, members, e, f)


class TestSparseSpokeSet:
    def test_k4(self):
        result = find_sparse_spoke_set(K4)
        assert_sparse_set_contract(K4, result)

    def test_h16(self):
        g = construct_h2n(8).graph
        result = find_sparse_spoke_set(g)
        assert result.case == "consecutive_pair"
        assert_sparse_set_contract(g, result)

    def test_random_members(self):
        rng = random.Random(59)
        for _ in range(40):
            g = random_chorded(rng.choice([16, 36]), rng)
            assert_sparse_set_contract(g, find_sparse_spoke_set(g))

    def test_deterministic(self):
        g = construct_h2n(10).graph
        assert find_sparse_spoke_set(g) == find_sparse_spoke_set(g)

    def test_intra_block_spoke_goes_to_case_1(self):
        # (0,2) lies inside the first block of 0..7
        g = build_chorded(8, [(0, 2), (3, 6), (1, 4), (5, 7)])
        result = find_sparse_spoke_set(g)
        assert result.case == "unintersected_spoke"
        assert_sparse_set_contract(g, result)


class TestTheorem3Bound:
    def test_v16(self):
        assert theorem3_bound(16) == 511.875

    def test_v4(self):
        assert theorem3_bound(4) == 7.96875
        assert count_below_theorem3_bound(7, 4)  # K4's 7 cycles
        assert not count_below_theorem3_bound(8, 4)

    def test_exact_form_is_conservative(self):
        for v in range(4, 40, 2):
            assert theorem3_bound_exact(v) <= Fraction(theorem3_bound(v)).limit_denominator(1 << 40) + Fraction(1, 1000)
            # integer part + fractional flag: the exact form never exceeds
            # the float evaluation by more than the rounding slack
            assert float(theorem3_bound_exact(v)) <= theorem3_bound(v) + 1e-9

    def test_odd_vertex_count_rejected(self):
        with pytest.raises(GraphError):
            theorem3_bound(7)
