"""Clique machinery: the value-preserving reduction and its decoder, plus
the uniform weight lift that turns any positive-weight instance into a
realizable one with an explicit Euclidean embedding.

The reduction maps a simple graph on n vertices to a complete graph with
weights in {1, n}: source edges become weight n, non-edges weight 1.  A
clique of size l encodes as a coloring whose combined class-MST value k
satisfies floor(k/n) >= l - 2, and any coloring of value k decodes back to
a verified clique of size at least floor(k/n)/2 + 1.

Realizability is decided numerically: a weighted complete graph embeds in
R^(n-1) exactly when the double-centered squared-distance Gram matrix is
positive semidefinite, so the lift searches for the smallest uniform shift
that passes that test and then factors the Gram matrix into coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np
from scipy.spatial.distance import pdist

from .core import (Coloring, DecodeError, DegenerateInstanceError,
                   EnumerationGuardError, PointSet, RealizationError,
                   WeightedCompleteGraph)
from .mst import mst_of_subset
from .ratio import subset_mst_table

CLIQUE_GUARD = 16
ARGMAX_GUARD = 16
PSD_REL_TOL = 1e-9
EMBED_REL_TOL = 1e-6


@dataclass(frozen=True)
class SimpleGraph:
    """Unweighted simple graph as a sorted tuple of (i, j) pairs, i < j."""

    n: int
    edges: tuple

    def __init__(self, n: int, edges: Iterable[tuple]):
        n = int(n)
        es = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise DegenerateInstanceError(f"bad edge ({i},{j}) for n={n}")
            es.add((min(i, j), max(i, j)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(es)))

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in set(self.edges)

    def adjacency_masks(self) -> list:
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return adj

    def degrees(self) -> list:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def is_clique(self, verts: Iterable[int]) -> bool:
        vs = sorted(set(verts))
        edge_set = set(self.edges)
        return all((a, b) in edge_set for k, a in enumerate(vs) for b in vs[k + 1:])

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, obj: dict) -> "SimpleGraph":
        return cls(int(obj["n"]), [tuple(e) for e in obj["edges"]])


@dataclass(frozen=True)
class ReductionInstance:
    source: SimpleGraph
    reduced: WeightedCompleteGraph


def reduce_clique(graph: SimpleGraph) -> ReductionInstance:
    """Weights: n on source edges, 1 elsewhere."""
    n = graph.n
    if n < 3:
        raise DegenerateInstanceError("the reduction needs n >= 3")
    w = np.ones(n * (n - 1) // 2)
    edge_set = set(graph.edges)
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) in edge_set:
                w[k] = float(n)
            k += 1
    return ReductionInstance(graph, WeightedCompleteGraph(n, w))


def coloring_value(g: WeightedCompleteGraph, c: Coloring) -> float:
    """|MST(red)| + |MST(blue)| in g (the numerator of the ratio)."""
    return (mst_of_subset(g, c.red_indices()).total_weight
            + mst_of_subset(g, c.blue_indices()).total_weight)


def clique_to_coloring(ri: ReductionInstance, clique: Iterable[int]):
    """Encode a clique as a coloring of the reduced instance.

    All clique vertices but the largest go red, everything else blue; for
    cliques of size below 3 any proper coloring does.  Returns
    (coloring, value).
    """
    verts = sorted(set(int(v) for v in clique))
    n = ri.source.n
    if not ri.source.is_clique(verts):
        raise DegenerateInstanceError("the given vertex set is not a clique")
    if len(verts) < 3:
        c = Coloring(n, [0])
    else:
        c = Coloring(n, verts[:-1])
    return c, coloring_value(ri.reduced, c)


def coloring_to_clique(ri: ReductionInstance, c: Coloring) -> tuple:
    """Decode a coloring of the reduced instance into a clique of the source.

    The class whose MST carries more weight-n edges is kept; contracting its
    weight-1 edges leaves one representative per component, and any two
    representatives must be joined by a weight-n edge (otherwise the MST
    could be improved), i.e. a source edge.  The result is re-verified and a
    failure raises, since it would mean the decoder itself is broken.
    """
    g = ri.reduced
    n = g.n
    red_t = mst_of_subset(g, c.red_indices())
    blue_t = mst_of_subset(g, c.blue_indices())
    heavy = float(n)
    red_n = sum(1 for _, _, w in red_t.edges if w > 0.5 * (1.0 + heavy))
    blue_n = sum(1 for _, _, w in blue_t.edges if w > 0.5 * (1.0 + heavy))
    total_n = red_n + blue_n
    t = red_t if red_n >= blue_n else blue_t
    light = [(i, j) for i, j, w in t.edges if w <= 0.5 * (1.0 + heavy)]
    parent = {v: v for v in t.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in light:
        parent[find(i)] = find(j)
    reps: dict = {}
    for v in t.vertices:
        root = find(v)
        reps[root] = min(reps.get(root, v), v)
    clique = tuple(sorted(reps.values()))
    if not ri.source.is_clique(clique):
        raise DecodeError("decoded representatives are not a clique")
    if 2 * (len(clique) - 1) < total_n:
        raise DecodeError("decoded clique is smaller than the value guarantees")
    return clique


def max_clique_bruteforce(graph: SimpleGraph) -> tuple:
    """Exact maximum clique by bitmask enumeration with degree pruning.

    A greedy clique seeds the size bound, vertices of too-small degree are
    peeled, and the remaining subsets are scanned in increasing mask order,
    so the reported clique is deterministic.
    """
    n = graph.n
    if n > CLIQUE_GUARD:
        raise EnumerationGuardError(f"brute-force clique supports n <= {CLIQUE_GUARD}")
    if n == 0:
        return ()
    adj = graph.adjacency_masks()
    deg = graph.degrees()
    # greedy seed: repeatedly add the smallest compatible vertex, trying
    # high-degree anchors first
    best: tuple = (min(range(n)),)
    for v0 in sorted(range(n), key=lambda v: (-deg[v], v)):
        cl = [v0]
        allowed = adj[v0]
        for u in range(n):
            if allowed >> u & 1:
                cl.append(u)
                allowed &= adj[u]
        if len(cl) > len(best):
            best = tuple(sorted(cl))
    # peel vertices that cannot reach a clique larger than the current best
    alive = [v for v in range(n) if deg[v] >= len(best)]
    changed = True
    while changed:
        keep_mask = 0
        for v in alive:
            keep_mask |= 1 << v
        changed = False
        nxt = []
        for v in alive:
            if (adj[v] & keep_mask).bit_count() >= len(best):
                nxt.append(v)
            else:
                changed = True
        alive = nxt
    m = len(alive)
    sub_adj = [0] * m
    for a, v in enumerate(alive):
        for b, u in enumerate(alive):
            if adj[v] >> u & 1:
                sub_adj[a] |= 1 << b
    for mask in range(1, 1 << m):
        if mask.bit_count() <= len(best):
            continue
        ok = True
        mm = mask
        while mm:
            b = (mm & -mm).bit_length() - 1
            if mask & ~(sub_adj[b] | (1 << b)):
                ok = False
                break
            mm &= mm - 1
        if ok:
            best = tuple(sorted(alive[b] for b in range(m) if mask >> b & 1))
    return best


@dataclass(frozen=True)
class RealizationLift:
    original: WeightedCompleteGraph
    shift: float
    lifted: WeightedCompleteGraph
    embedding: PointSet
    max_relative_distance_error: float

    def to_json(self) -> dict:
        return {
            "shift": self.shift,
            "max_relative_distance_error": self.max_relative_distance_error,
            "embedding": self.embedding.to_json(),
            "lifted": self.lifted.to_json(),
        }


def _gram_eigs(g: WeightedCompleteGraph, shift: float):
    n = g.n
    w = g.weights + shift
    d2 = np.zeros((n, n))
    iu = np.triu_indices(n, 1)
    d2[iu] = w * w
    d2 += d2.T
    j = np.eye(n) - np.full((n, n), 1.0 / n)
    b = -0.5 * j @ d2 @ j
    evals, evecs = np.linalg.eigh(b)
    return evals, evecs


def _is_feasible(evals: np.ndarray) -> bool:
    trace = float(np.sum(evals))
    return float(evals.min()) >= -PSD_REL_TOL * max(trace, 0.0)


def _embed(g: WeightedCompleteGraph, shift: float):
    n = g.n
    evals, evecs = _gram_eigs(g, shift)
    if not _is_feasible(evals):
        return None
    evals = np.clip(evals, 0.0, None)
    order = np.argsort(evals)[::-1][: n - 1]
    coords = evecs[:, order] * np.sqrt(evals[order])
    pts = PointSet(coords)
    target = g.weights + shift
    err = float(np.max(np.abs(pdist(coords) - target) / target))
    return pts, err


def lift_and_realize(g: WeightedCompleteGraph) -> RealizationLift:
    """Smallest uniform weight shift (to ~3 significant digits) that makes
    the instance realizable in R^(n-1), with the embedding itself.

    Zero shift is tried first; otherwise the shift doubles from the maximum
    weight until the Gram test passes and is then bisected down.
    """
    n = g.n
    if n < 2:
        raise DegenerateInstanceError("realization needs n >= 2")
    w2 = float(np.max(g.weights))
    lo, hi = 0.0, 0.0
    if _embed(g, 0.0) is None:
        hi = -1.0
        for t in range(41):
            cand = w2 * (1 << t)
            if _embed(g, cand) is not None:
                hi = cand
                lo = 0.0 if t == 0 else w2 * (1 << (t - 1))
                break
        if hi < 0:
            raise RealizationError("no feasible shift up to 2^40 times the max weight")
        while hi - lo > 1e-3 * hi:
            mid = 0.5 * (lo + hi)
            if _embed(g, mid) is not None:
                hi = mid
            else:
                lo = mid
    shift = hi
    if shift > 64.0 * n * n * w2:
        raise RealizationError(f"shift {shift} is out of the O(n^2 max-weight) envelope")
    pts, err = _embed(g, shift)
    if err > EMBED_REL_TOL:
        raise RealizationError(f"embedding error {err} exceeds {EMBED_REL_TOL}")
    lifted = WeightedCompleteGraph(n, g.weights + shift)
    return RealizationLift(g, shift, lifted, pts, err)


def lift_preserves_argmax(g: WeightedCompleteGraph, lifted: WeightedCompleteGraph,
                          *, override_guard: bool = False) -> bool:
    """Check that a uniform lift moves every coloring's value by exactly
    (n-2) * shift and leaves the set of value-maximizing colorings intact."""
    n = g.n
    if lifted.n != n:
        raise DegenerateInstanceError("instances differ in size")
    if n > ARGMAX_GUARD and not override_guard:
        raise EnumerationGuardError(f"argmax verification supports n <= {ARGMAX_GUARD}")
    diffs = lifted.weights - g.weights
    shift = float(diffs[0]) if diffs.size else 0.0
    if np.max(np.abs(diffs - shift)) > 1e-9 * max(1.0, abs(shift)):
        raise DegenerateInstanceError("the two instances do not differ by a uniform shift")
    t1 = subset_mst_table(g)
    t2 = subset_mst_table(lifted)
    full = (1 << n) - 1
    masks = 2 * np.arange((1 << (n - 1)) - 1, dtype=np.int64) + 1
    v1 = t1[masks] + t1[full - masks]
    v2 = t2[masks] + t2[full - masks]
    expected = (n - 2) * shift
    if np.max(np.abs((v2 - v1) - expected)) > 1e-9 * max(1.0, abs(expected)):
        return False
    tol1 = 1e-9 * max(1.0, float(np.max(v1)))
    tol2 = 1e-9 * max(1.0, float(np.max(v2)))
    arg1 = masks[v1 >= np.max(v1) - tol1]
    arg2 = masks[v2 >= np.max(v2) - tol2]
    return arg1.shape == arg2.shape and bool(np.all(arg1 == arg2))
