import numpy as np
import pytest

import mstratio as mr
from conftest import (all_spanning_tree_weights, heaviest_internal_path_oracle,
                      prufer_decode, random_tree)


def test_tri3_mst_weight(tri3):
    t = mr.mst(mr.distance_graph(tri3))
    assert t.total_weight == pytest.approx(2.0, rel=1e-12)


def test_sq4_mst_against_spanning_tree_enumeration(sq4):
    g = mr.distance_graph(sq4)
    oracle = min(all_spanning_tree_weights(g.matrix()))  # 16 labeled trees of K4
    assert oracle == pytest.approx(3.0, rel=1e-12)
    assert mr.mst(g).total_weight == pytest.approx(oracle, rel=1e-12)


def test_chain_mst_is_the_path():
    k, delta = 5, 1e-3
    g = mr.distance_graph(mr.gen_triangular_chain(k, delta))
    t = mr.mst(g)
    assert tuple((i, j) for i, j, _ in t.edges) == tuple((i, i + 1) for i in range(2 * k))
    assert 2 * k <= t.total_weight <= 2 * k * (1 + delta)


def test_mst_matches_bruteforce_on_random_instances():
    for seed in range(8):
        n = 5 + seed % 3
        g = mr.random_weight_graph(n, seed)
        oracle = min(all_spanning_tree_weights(g.matrix()))
        assert mr.mst(g).total_weight == pytest.approx(oracle, rel=1e-12)


def test_mst_not_beaten_by_random_spanning_trees():
    rng = np.random.default_rng(11)
    for seed in range(3):
        n = 12
        g = mr.random_weight_graph(n, 100 + seed)
        m = g.matrix()
        best = mr.mst(g).total_weight
        for _ in range(1000):
            seq = list(rng.integers(0, n, size=n - 2))
            w = sum(m[i, j] for i, j in prufer_decode(seq, n))
            assert best <= w + 1e-12


def test_mst_determinism():
    g = mr.random_weight_graph(10, 3)
    g2 = mr.WeightedCompleteGraph(10, np.array(g.weights))
    assert mr.mst(g).edges == mr.mst(g2).edges


def test_mst_tie_breaking_unit_weights():
    # complete graph with all-equal weights: the (w, i, j) order makes the
    # star at vertex 0 the unique minimum
    g = mr.WeightedCompleteGraph(5, np.ones(10))
    assert mr.mst(g).edges == tuple((0, j, 1.0) for j in range(1, 5))


def test_singleton_and_small_trees():
    g = mr.WeightedCompleteGraph(1, [])
    t = mr.mst(g)
    assert t.n == 1 and t.edges == () and t.total_weight == 0.0


def test_mst_of_subset_examples(sq4):
    g = mr.distance_graph(sq4)
    diag = mr.mst_of_subset(g, [0, 2])
    assert diag.total_weight == pytest.approx(np.sqrt(2.0), rel=1e-12)
    corners = mr.mst_of_subset(g, [0, 1, 2])
    oracle = min(all_spanning_tree_weights(g.matrix()[np.ix_([0, 1, 2], [0, 1, 2])]))
    assert corners.total_weight == pytest.approx(oracle, rel=1e-12) == pytest.approx(2.0)
    single = mr.mst_of_subset(g, [3])
    assert single.edges == () and single.total_weight == 0.0
    with pytest.raises(mr.DegenerateInstanceError):
        mr.mst_of_subset(g, [])


def test_subset_table_matches_subset_mst():
    for seed in range(4):
        g = mr.random_weight_graph(8, 40 + seed)
        table = mr.subset_mst_table(g)
        rng = np.random.default_rng(seed)
        for _ in range(40):
            mask = int(rng.integers(1, 1 << 8))
            verts = [v for v in range(8) if mask >> v & 1]
            assert table[mask] == pytest.approx(
                mr.mst_of_subset(g, verts).total_weight, rel=1e-12, abs=1e-15)


def test_path_double_cover_path3():
    t = mr.Tree([(0, 1, 1.0), (1, 2, 1.0)], vertices=range(3))
    paths = mr.path_double_cover(t)
    assert len(paths) == 2
    assert sorted(map(tuple, paths)) == [(0, 1, 2), (2, 1, 0)]


def test_path_double_cover_star():
    t = mr.Tree([(3, 0, 1.0), (3, 1, 1.0), (3, 2, 1.0)], vertices=range(4))
    paths = mr.path_double_cover(t)
    assert len(paths) == 3
    cover = {}
    for p in paths:
        for u, v in zip(p, p[1:]):
            e = (min(u, v), max(u, v))
            cover[e] = cover.get(e, 0) + 1
    assert cover == {(0, 3): 2, (1, 3): 2, (2, 3): 2}


@pytest.mark.parametrize("seed", range(10))
def test_path_double_cover_random(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 16))
    t = random_tree(n, rng)
    paths = mr.path_double_cover(t)
    assert len(paths) == len(t.leaf_vertices())
    cover = {(i, j): 0 for i, j, _ in t.edges}
    for p in paths:
        for u, v in zip(p, p[1:]):
            cover[(min(u, v), max(u, v))] += 1
    assert set(cover.values()) == {2}


def test_heaviest_internal_path_examples():
    path5 = mr.Tree([(i, i + 1, 1.0) for i in range(4)], vertices=range(5))
    p, w = mr.heaviest_internal_path(path5)
    assert p == [1, 2, 3] and w == pytest.approx(2.0)
    star = mr.Tree([(0, j, 1.0) for j in range(1, 5)], vertices=range(5))
    p, w = mr.heaviest_internal_path(star)
    assert p == [0] and w == 0.0
    with pytest.raises(mr.DegenerateInstanceError):
        mr.heaviest_internal_path(mr.Tree([(0, 1, 1.0)], vertices=range(2)))


@pytest.mark.parametrize("seed", range(8))
def test_heaviest_internal_path_against_oracle(seed):
    rng = np.random.default_rng(100 + seed)
    t = random_tree(12, rng)
    p, w = mr.heaviest_internal_path(t)
    if len(p) == 1:
        deg = t.degrees()
        assert sum(1 for v in t.vertices if deg[v] >= 2) == 1
        return
    ow, (oa, ob) = heaviest_internal_path_oracle(t)
    assert w == pytest.approx(ow, rel=1e-12)
    assert (min(p[0], p[-1]), max(p[0], p[-1])) == (oa, ob)


def test_rooted_view_invariants():
    rng = np.random.default_rng(7)
    t = random_tree(14, rng)
    view = mr.rooted_view(t, 0)
    assert view.parent[0] is None
    assert sorted(view.dfs_start_time.values()) == list(range(14))
    for v in t.vertices:
        for u in view.children[v]:
            assert view.parent[u] == v
            assert view.dfs_start_time[u] > view.dfs_start_time[v]
