"""Minimum spanning trees and tree combinatorics.

The MST routine is a dense O(n^2) Prim scan, which is the right tool for
complete graphs at the scales handled here.  Ties between equal-weight
candidate edges are broken by the lexicographically smallest normalized
(i, j) pair, so identical inputs always produce identical edge lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .core import DegenerateInstanceError, Tree, WeightedCompleteGraph


def _prim_edges(m: np.ndarray, verts: Sequence[int]) -> list:
    """Prim over the given vertex labels; returns (i, j, w) edges, i < j."""
    cnt = len(verts)
    if cnt <= 1:
        return []
    vs = list(verts)
    in_tree = [False] * cnt
    dist = [float(m[vs[0], vs[k]]) for k in range(cnt)]
    par = [0] * cnt
    in_tree[0] = True
    edges = []
    for _ in range(cnt - 1):
        best = -1
        bw = np.inf
        bpair = (np.inf, np.inf)
        for k in range(cnt):
            if in_tree[k]:
                continue
            pair = (min(vs[par[k]], vs[k]), max(vs[par[k]], vs[k]))
            if dist[k] < bw or (dist[k] == bw and pair < bpair):
                bw = dist[k]
                bpair = pair
                best = k
        in_tree[best] = True
        edges.append((bpair[0], bpair[1], bw))
        vb = vs[best]
        for k in range(cnt):
            if in_tree[k]:
                continue
            w = float(m[vb, vs[k]])
            if w < dist[k]:
                dist[k] = w
                par[k] = best
            elif w == dist[k]:
                old = (min(vs[par[k]], vs[k]), max(vs[par[k]], vs[k]))
                new = (min(vb, vs[k]), max(vb, vs[k]))
                if new < old:
                    par[k] = best
    return edges


def mst(g: WeightedCompleteGraph) -> Tree:
    """Deterministic minimum spanning tree of the whole instance."""
    if g.n == 1:
        return Tree([], vertices=[0])
    return Tree(_prim_edges(g.matrix(), range(g.n)), vertices=range(g.n))


def mst_of_subset(g: WeightedCompleteGraph, s: Iterable[int]) -> Tree:
    """MST of the induced complete subgraph; vertex labels are preserved."""
    verts = sorted(set(int(v) for v in s))
    if not verts:
        raise DegenerateInstanceError("subset MST needs a nonempty subset")
    if verts[0] < 0 or verts[-1] >= g.n:
        raise DegenerateInstanceError("subset contains out-of-range vertices")
    if len(verts) == 1:
        return Tree([], vertices=verts)
    return Tree(_prim_edges(g.matrix(), verts), vertices=verts)


@dataclass(frozen=True)
class RootedTreeView:
    """A tree hung from a root: parents, DFS start times, ordered children.

    ``order`` lists the vertices by start time (order[0] is the root) and
    ``children[v]`` is in exactly the order DFS visited them.
    """

    tree: Tree
    root: int
    parent: dict
    dfs_start_time: dict
    children: dict
    order: tuple


def rooted_view(t: Tree, root: int, prefer: Optional[set] = None) -> RootedTreeView:
    """Iterative DFS from ``root``; ``prefer`` vertices are explored first
    among each vertex's children, remaining ties by ascending label."""
    if root not in t.vertices:
        raise DegenerateInstanceError(f"root {root} is not a vertex of the tree")
    prefer = prefer or set()
    adj = t.adjacency()
    parent = {root: None}
    start = {}
    children: dict = {v: [] for v in t.vertices}
    order = []
    stack = [root]
    seen = {root}
    while stack:
        v = stack.pop()
        start[v] = len(order)
        order.append(v)
        nbrs = sorted((u for u, _ in adj[v] if u not in seen),
                      key=lambda u: (u not in prefer, u))
        children[v] = nbrs
        for u in nbrs:
            seen.add(u)
            parent[u] = v
        # push in reverse so the preferred child is popped first
        stack.extend(reversed(nbrs))
    return RootedTreeView(t, root, parent, start, children, tuple(order))


def path_double_cover(t: Tree) -> list:
    """Leaf-to-leaf paths covering every tree edge exactly twice.

    The leaves are taken in DFS first-visit order from the smallest vertex;
    consecutive leaves (cyclically) are joined by their tree paths.  Every
    edge separates the leaf sequence into two cyclic arcs and is therefore
    crossed by exactly two consecutive pairs.
    """
    if t.n < 2:
        raise DegenerateInstanceError("path double cover needs at least one edge")
    view = rooted_view(t, t.vertices[0])
    deg = t.degrees()
    leaf_order = [v for v in view.order if deg[v] == 1]
    ell = len(leaf_order)
    return [tree_path(view, leaf_order[i], leaf_order[(i + 1) % ell])
            for i in range(ell)]


def tree_path(view: RootedTreeView, a: int, b: int) -> list:
    """Vertex sequence of the unique a-b path, via the rooted ancestor walk."""
    start = view.dfs_start_time
    up_a = [a]
    up_b = [b]
    x, y = a, b
    while x != y:
        if start[x] >= start[y]:
            x = view.parent[x]
            up_a.append(x)
        else:
            y = view.parent[y]
            up_b.append(y)
    return up_a + up_b[-2::-1]


def path_weight(t: Tree, path: Sequence[int]) -> float:
    wmap = {(i, j): w for i, j, w in t.edges}
    return float(sum(wmap[(min(u, v), max(u, v))] for u, v in zip(path, path[1:])))


def heaviest_internal_path(t: Tree):
    """Maximum-weight path whose two endpoints are both non-leaves.

    Returns (vertex_path, weight).  A star has a single non-leaf, which is
    returned as a length-zero path of weight 0.  Ties go to the smallest
    normalized endpoint pair.
    """
    if t.n < 3:
        raise DegenerateInstanceError("no non-leaf endpoints exist for n <= 2")
    deg = t.degrees()
    internal = [v for v in t.vertices if deg[v] >= 2]
    if len(internal) == 1:
        return [internal[0]], 0.0
    adj = t.adjacency()
    internal_set = set(internal)
    best = None  # (weight, (a, b))
    dists = {}
    for a in internal:
        dist = {a: 0.0}
        stack = [a]
        while stack:
            v = stack.pop()
            for u, w in adj[v]:
                if u not in dist:
                    dist[u] = dist[v] + w
                    stack.append(u)
        dists[a] = dist
        for b in internal:
            if b <= a:
                continue
            cand = (dist[b], (a, b))
            if best is None or cand[0] > best[0] or (cand[0] == best[0] and cand[1] < best[1]):
                best = cand
    weight, (a, b) = best
    view = rooted_view(t, a)
    return tree_path(view, a, b), float(weight)
