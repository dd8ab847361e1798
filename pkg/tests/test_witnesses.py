"""Witness constructors: shape, exact extremal statistics, determinism."""

import pytest

from leafdiam import (
    EmptySpider,
    Infeasible,
    Spider,
    build_tree,
    diameter_and_path,
    feasible_leaf_diameter,
    feasible_order_leaves,
    leaves,
    max_diameter,
    max_diameter_tree,
    max_leaf_tree,
    max_leaves,
    min_diameter,
    min_diameter_spider,
    min_leaf_spider,
    min_leaves,
    spider_to_tree,
    write_tree,
)


class TestSpiderType:
    def test_needs_a_leg(self):
        with pytest.raises(EmptySpider):
            Spider(())

    def test_rejects_nonpositive_legs(self):
        with pytest.raises(ValueError):
            Spider((2, 0))

    def test_normalizes_order(self):
        assert Spider((1, 3, 2)).leg_lengths == (3, 2, 1)

    def test_derived_quantities(self):
        s = Spider((3, 2, 1))
        assert s.order == 7
        assert s.leaf_count == 3
        assert s.diameter == 5

    def test_single_leg_diameter(self):
        assert Spider((4,)).diameter == 4


class TestSpiderToTree:
    def test_unit_legs_make_a_star(self):
        t = spider_to_tree(Spider((1, 1, 1)))
        assert t.n == 4
        assert t.adj[0] == (1, 2, 3)

    def test_two_equal_legs_make_a_path(self):
        t = spider_to_tree(Spider((2, 2)))
        d, _ = diameter_and_path(t)
        assert t.n == 5
        assert d == 4
        assert max(len(a) for a in t.adj) == 2

    def test_one_long_leg_profile(self):
        for k in (1, 2, 4):
            for f in (3, 5):
                t = spider_to_tree(Spider((k + 1,) + (k,) * (f - 1)))
                assert t.n == k * f + 2
                assert diameter_and_path(t)[0] == 2 * k + 1

    def test_numbering_contract(self):
        # branch 0, legs consecutive outward, longest first
        t = spider_to_tree(Spider((2, 1)))
        assert t.edges() == [(0, 1), (0, 3), (1, 2)]


class TestMinLeafSpider:
    def test_headline_profile(self):
        s = min_leaf_spider(21, 3)
        assert s.leg_lengths == (2,) + (1,) * 18
        assert s.order == 21 and s.leaf_count == 19

    def test_path_case(self):
        s = min_leaf_spider(9, 8)
        assert s.leaf_count == 2
        assert spider_to_tree(s).n == 9

    def test_even_case(self):
        assert min_leaf_spider(7, 4).leg_lengths == (2, 2, 2)

    def test_k2(self):
        s = min_leaf_spider(2, 1)
        t = spider_to_tree(s)
        assert t.n == 2 and len(leaves(t)) == 2

    def test_leg_profile_well_formed(self):
        for n in range(3, 120):
            for d in range(2, n):
                s = min_leaf_spider(n, d)
                c = d // 2
                legs = s.leg_lengths
                assert legs[0] + legs[1] == d
                if d % 2 == 1:
                    assert legs[0] == c + 1
                    assert all(x <= c for x in legs[1:])
                else:
                    assert all(x <= c for x in legs)

    def test_infeasible(self):
        with pytest.raises(Infeasible):
            min_leaf_spider(5, 5)
        with pytest.raises(Infeasible):
            min_leaf_spider(3, 1)


class TestMinDiameterSpider:
    def test_star(self):
        assert min_diameter_spider(6, 5).leg_lengths == (1, 1, 1, 1, 1)

    def test_one_long_leg(self):
        assert min_diameter_spider(3 * 4 + 2, 4).leg_lengths == (4, 3, 3, 3)

    def test_enumerated_case(self):
        assert min_diameter_spider(6, 3).leg_lengths == (2, 2, 1)

    def test_exact_leg_count(self):
        for f in range(2, 30):
            for n in range(f + 1, 5 * f):
                assert min_diameter_spider(n, f).leaf_count == f

    def test_infeasible(self):
        with pytest.raises(Infeasible):
            min_diameter_spider(4, 4)


def _stats(t):
    return t.n, diameter_and_path(t)[0], len(leaves(t))


class TestTightness:
    # the acceptance suite runs the same check to n = 200
    def test_min_leaf_spider(self):
        for n in range(2, 50):
            for d in range(1, n):
                if feasible_leaf_diameter(n, d):
                    t = spider_to_tree(min_leaf_spider(n, d))
                    assert _stats(t) == (n, d, min_leaves(n, d))

    def test_max_leaf_tree(self):
        for n in range(2, 50):
            for d in range(1, n):
                if feasible_leaf_diameter(n, d):
                    assert _stats(max_leaf_tree(n, d)) == (n, d, max_leaves(n, d))

    def test_min_diameter_spider(self):
        for n in range(3, 50):
            for f in range(2, n):
                if feasible_order_leaves(n, f):
                    t = spider_to_tree(min_diameter_spider(n, f))
                    assert _stats(t) == (n, min_diameter(n, f), f)

    def test_max_diameter_tree(self):
        for n in range(3, 50):
            for f in range(2, n):
                if feasible_order_leaves(n, f):
                    assert _stats(max_diameter_tree(n, f)) == (n, max_diameter(n, f), f)


class TestMaxConstructions:
    def test_star_for_diameter_two(self):
        t = max_leaf_tree(7, 2)
        assert len(leaves(t)) == 6

    def test_pendant_on_center(self):
        t = max_leaf_tree(6, 4)
        assert len(leaves(t)) == 3
        assert 5 in t.adj[2]  # spare vertex hangs on the path center

    def test_max_diameter_pendants_near_end(self):
        t = max_diameter_tree(6, 3)
        assert _stats(t) == (6, 4, 3)
        assert 5 in t.adj[1]

    def test_path_for_two_leaves(self):
        t = max_diameter_tree(8, 2)
        assert diameter_and_path(t)[0] == 7


class TestDeterminism:
    def test_bit_identical_output(self):
        pairs = [(33, 7), (100, 13), (14, 4)]
        for n, d in pairs:
            a = write_tree(spider_to_tree(min_leaf_spider(n, d)))
            b = write_tree(spider_to_tree(min_leaf_spider(n, d)))
            assert a == b
        assert write_tree(max_diameter_tree(20, 6)) == write_tree(max_diameter_tree(20, 6))
