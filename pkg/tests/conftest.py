"""Shared fixtures and independent oracles.

The oracles deliberately avoid the library's own code paths: spanning trees
are enumerated through Prufer sequences, tree paths are recovered by BFS
parent walks, and segment crossings are decided in exact rational
arithmetic on the float coordinates.
"""

from fractions import Fraction
from itertools import product

import numpy as np
import pytest

import mstratio as mr


@pytest.fixture
def tri3():
    """Equilateral triangle of side 1."""
    return mr.PointSet([[0.0, 0.0], [1.0, 0.0], [0.5, np.sqrt(3.0) / 2.0]])


@pytest.fixture
def sq4():
    """Unit square corners in cyclic order."""
    return mr.PointSet([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])


# ---------------------------------------------------------------------------
# Prufer machinery: decodes sequences into labeled trees and enumerates all
# n^(n-2) of them, giving a brute-force MST oracle for small n.


def prufer_decode(seq, n):
    """Edge list of the labeled tree with the given Prufer sequence."""
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    for v in seq:
        leaf = leaves.pop(0)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            # keep the leaf pool sorted so decoding is deterministic
            import bisect
            bisect.insort(leaves, v)
    a, b = leaves[0], leaves[1]
    edges.append((min(a, b), max(a, b)))
    return edges


def all_spanning_tree_weights(matrix):
    """Total weight of every labeled spanning tree (n <= 7 sensible)."""
    n = matrix.shape[0]
    if n == 1:
        return [0.0]
    if n == 2:
        return [float(matrix[0, 1])]
    weights = []
    for seq in product(range(n), repeat=n - 2):
        weights.append(float(sum(matrix[i, j] for i, j in prufer_decode(list(seq), n))))
    return weights


def random_tree(n, rng, low=0.2, high=2.0):
    """Uniform random labeled tree with random weights, via Prufer."""
    if n == 2:
        edges = [(0, 1)]
    else:
        seq = list(rng.integers(0, n, size=n - 2))
        edges = prufer_decode(seq, n)
    return mr.Tree([(i, j, float(rng.uniform(low, high))) for i, j in edges],
                   vertices=range(n))


def tree_path_weight_oracle(tree, a, b):
    """Weight of the a-b path by an independent BFS parent walk."""
    adj = {v: [] for v in tree.vertices}
    for i, j, w in tree.edges:
        adj[i].append((j, w))
        adj[j].append((i, w))
    parent = {a: None}
    queue = [a]
    while queue:
        v = queue.pop(0)
        for u, w in adj[v]:
            if u not in parent:
                parent[u] = (v, w)
                queue.append(u)
    total = 0.0
    v = b
    while parent[v] is not None:
        v, w = parent[v]
        total += w
    return total


def heaviest_internal_path_oracle(tree):
    """(weight, (a, b)) maximized over non-leaf pairs, smallest pair on ties."""
    deg = tree.degrees()
    internal = [v for v in tree.vertices if deg[v] >= 2]
    best = None
    for i, a in enumerate(internal):
        for b in internal[i + 1:]:
            w = tree_path_weight_oracle(tree, a, b)
            cand = (w, (min(a, b), max(a, b)))
            if best is None or cand[0] > best[0] or (cand[0] == best[0] and cand[1] < best[1]):
                best = cand
    return best


# ---------------------------------------------------------------------------
# Exact rational segment-crossing oracle.


def _orient_exact(p, q, r):
    px, py = map(Fraction, p)
    qx, qy = map(Fraction, q)
    rx, ry = map(Fraction, r)
    val = (qx - px) * (ry - py) - (rx - px) * (qy - py)
    return (val > 0) - (val < 0)


def crossing_count_oracle(points, red_edges, blue_edges):
    """Exact count of strict interior crossings between the two edge sets."""
    count = 0
    for i, j in red_edges:
        for k, l in blue_edges:
            o1 = _orient_exact(points[i], points[j], points[k])
            o2 = _orient_exact(points[i], points[j], points[l])
            o3 = _orient_exact(points[k], points[l], points[i])
            o4 = _orient_exact(points[k], points[l], points[j])
            if o1 * o2 < 0 and o3 * o4 < 0:
                count += 1
    return count


def emst_class_edges(ps, coloring):
    """(red_edges, blue_edges) of the class EMSTs as index pairs."""
    g = mr.distance_graph(ps)
    red = [(i, j) for i, j, _ in mr.mst_of_subset(g, coloring.red_indices()).edges]
    blue = [(i, j) for i, j, _ in mr.mst_of_subset(g, coloring.blue_indices()).edges]
    return red, blue
