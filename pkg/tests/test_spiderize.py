"""Rewiring to a spider: fixpoint shape, conservation, termination potential."""

import random

import pytest

from conftest import naive_all_pairs, naive_diameter, naive_leaf_set, random_tree
from leafdiam import (
    Spider,
    StemNotDiametral,
    TreePath,
    build_tree,
    decompose,
    is_diametral_by_lemma1,
    is_spider,
    rewire_once,
    spider_to_tree,
    spiderize,
)


def path_graph(n):
    return build_tree(n, [(i, i + 1) for i in range(n - 1)])


class TestIsSpider:
    def test_star(self):
        t = build_tree(5, [(0, i) for i in range(1, 5)])
        assert is_spider(t) == (True, 0)

    def test_path_reports_canonical_center(self):
        assert is_spider(path_graph(5)) == (True, 2)
        # even-length choice: the two central vertices are 2 and 3
        assert is_spider(path_graph(6)) == (True, 2)

    def test_h_shape(self):
        t = build_tree(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)])
        assert is_spider(t) == (False, None)

    def test_single_vertex_and_k2(self):
        assert is_spider(build_tree(1, [])) == (True, 0)
        assert is_spider(build_tree(2, [(0, 1)])) == (True, 0)

    def test_real_spider_branch(self):
        t = spider_to_tree(Spider((3, 2, 2)))
        assert is_spider(t) == (True, 0)


class TestRewireOnce:
    def test_spider_needs_no_action(self):
        t = spider_to_tree(Spider((2, 2, 1)))
        d, stem = 4, None
        from leafdiam import diameter_and_path

        d, stem = diameter_and_path(t)
        dec = decompose(t, stem)
        z = stem.vertices[d // 2]
        assert rewire_once(t, dec, z) is None

    def test_hand_worked_pendant(self):
        # stem 0..4 with pendant 5 on vertex 1: u=5, b=1, w=5, reattach at z=2
        t = build_tree(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)])
        stem = TreePath((0, 1, 2, 3, 4))
        dec = decompose(t, stem)
        out = rewire_once(t, dec, 2)
        assert out is not None
        new_t, step = out
        assert (step.leaf, step.big, step.w, step.z) == (5, 1, 5, 2)
        assert 5 in new_t.adj[2] and 5 not in new_t.adj[1]
        assert naive_leaf_set(new_t) == {0, 4, 5}
        assert is_diametral_by_lemma1(new_t, stem)

    def test_potential_recorded_exactly(self):
        t = build_tree(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)])
        stem = TreePath((0, 1, 2, 3, 4))
        out = rewire_once(t, decompose(t, stem), 2)
        assert out is not None
        new_t, step = out
        assert step.potential_before == sum(naive_all_pairs(t)[2])
        assert step.potential_after == sum(naive_all_pairs(new_t)[2])
        assert step.potential_after == step.potential_before - 1

    def test_rejects_non_diametral_stem(self):
        t = path_graph(5)
        dec = decompose(t, TreePath((1, 2, 3)))
        with pytest.raises(StemNotDiametral):
            rewire_once(t, dec, 2)


class TestSpiderize:
    def test_path_fixed_point(self):
        t = path_graph(7)
        trace = spiderize(t)
        assert trace.steps == ()
        assert trace.result == t

    def test_spider_fixed_point(self):
        # branch sits at index floor(d/2) of a diametral path, so nothing moves
        for legs in [(3, 2, 1, 1), (2, 2, 1), (1, 1, 1, 1), (4, 4, 3, 2)]:
            t = spider_to_tree(Spider(legs))
            trace = spiderize(t)
            assert trace.steps == ()
            assert trace.result == t

    def test_off_center_spider_recenters(self):
        # legs (3,1,1,1): every diametral path has the branch at index 3 or 1,
        # never at 2 = floor(4/2), so the procedure must shift the side legs
        # onto the middle of the long leg; shape becomes (2,2,1,1)
        t = spider_to_tree(Spider((3, 1, 1, 1)))
        trace = spiderize(t)
        assert len(trace.steps) > 0
        ok, branch = is_spider(trace.result)
        assert ok
        assert naive_diameter(trace.result) == 4
        assert naive_leaf_set(trace.result) == naive_leaf_set(t)
        z = trace.stem.vertices[trace.z_index]
        assert branch == z
        assert len(trace.result.adj[z]) == 4

    def test_single_vertex_and_k2(self):
        assert spiderize(build_tree(1, [])).steps == ()
        assert spiderize(build_tree(2, [(0, 1)])).steps == ()

    def test_z_is_stem_center(self):
        rng = random.Random(21)
        for _ in range(30):
            t = random_tree(rng, rng.randint(3, 30))
            trace = spiderize(t)
            assert trace.z_index == trace.stem.length // 2

    def test_conservation_suite(self):
        # the acceptance suite runs 1000 trees; keep a fast slice here
        rng = random.Random(22)
        for _ in range(150):
            t = random_tree(rng, rng.randint(4, 40))
            before = (t.n, naive_diameter(t), naive_leaf_set(t))
            trace = spiderize(t)  # validate=True checks per-step invariants
            r = trace.result
            assert (r.n, naive_diameter(r), naive_leaf_set(r)) == before
            ok, branch = is_spider(r)
            assert ok
            pots = [s.potential_before for s in trace.steps] + (
                [trace.steps[-1].potential_after] if trace.steps else []
            )
            assert all(a > b for a, b in zip(pots, pots[1:]))
            if trace.steps:
                assert len(trace.steps) <= trace.steps[0].potential_before

    def test_consecutive_potentials_chain(self):
        rng = random.Random(23)
        for _ in range(20):
            t = random_tree(rng, rng.randint(8, 30))
            trace = spiderize(t)
            for a, b in zip(trace.steps, trace.steps[1:]):
                assert a.potential_after == b.potential_before

    def test_idempotent(self):
        rng = random.Random(24)
        for _ in range(40):
            t = random_tree(rng, rng.randint(4, 32))
            once = spiderize(t).result
            again = spiderize(once)
            assert again.steps == ()
            assert again.result == once

    def test_stem_survives_every_step(self):
        # replay the trace by hand and re-check diametrality after each step
        rng = random.Random(25)
        for _ in range(20):
            t = random_tree(rng, rng.randint(6, 24))
            trace = spiderize(t)
            cur = t
            for step in trace.steps:
                edges = [e for e in cur.edges()
                         if e != tuple(sorted((step.w, step.big)))]
                edges.append(tuple(sorted((step.w, step.z))))
                cur = build_tree(cur.n, edges)
                assert is_diametral_by_lemma1(cur, trace.stem)
            assert cur == trace.result

    def test_branch_is_z_when_forced(self):
        rng = random.Random(26)
        for _ in range(40):
            t = random_tree(rng, rng.randint(6, 40))
            trace = spiderize(t)
            ok, branch = is_spider(trace.result)
            assert ok
            z = trace.stem.vertices[trace.z_index]
            if max(len(a) for a in trace.result.adj) >= 3:
                assert branch == z
