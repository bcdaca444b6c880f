"""Polynomial-time colorings and the constructive metric upper bound.

Two cheap colorings are provided: splitting the MST at its shortest edge
(which already guarantees a ratio of (n-2)/(n-1) and hence a factor-3
approximation of the maximum on metric instances), and the bipartite
coloring that 2-colors a fixed MST so every tree edge is colorful.

The certifier turns the upper-bound argument into an executable object:
for any coloring of a metric instance with n >= 5 it builds explicit
spanning trees of both color classes whose combined weight never exceeds
(3 - 4/(n-1)) times the MST weight.  Since each constructed tree spans its
class, the combined weight also dominates |MST(red)| + |MST(blue)|, which
pins the maximum ratio below the same bound.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import (Coloring, DegenerateInstanceError, NotMetricError, Tree,
                   WeightedCompleteGraph, validate_metric)
from .mst import heaviest_internal_path, mst, mst_of_subset, rooted_view
from .ratio import RatioEvaluation, metric_max_ratio_bound, mst_ratio

CERT_REL_TOL = 1e-9


def approx_coloring(g: WeightedCompleteGraph):
    """Color the two components left by deleting the shortest MST edge.

    Returns (coloring, evaluation).  The removed edge is the minimum under
    the (weight, i, j) order, so the output is deterministic.
    """
    if g.n < 3:
        raise DegenerateInstanceError("the split coloring needs n >= 3")
    t = mst(g)
    cut = min(t.edges, key=lambda e: (e[2], e[0], e[1]))
    adj = {v: [] for v in t.vertices}
    for i, j, _ in t.edges:
        if (i, j) == (cut[0], cut[1]):
            continue
        adj[i].append(j)
        adj[j].append(i)
    comp = {cut[0]}
    stack = [cut[0]]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in comp:
                comp.add(u)
                stack.append(u)
    c = Coloring(g.n, comp)
    return c, mst_ratio(g, c, base_weight=t.total_weight)


def bipartite_coloring(g: WeightedCompleteGraph):
    """2-color the deterministic MST by depth parity from vertex 0.

    Every MST edge joins vertices of opposite depth parity, so the whole
    tree is colorful under the returned coloring.
    """
    if g.n < 2:
        raise DegenerateInstanceError("a bipartite coloring needs n >= 2")
    t = mst(g)
    view = rooted_view(t, 0)
    depth = {0: 0}
    for v in view.order[1:]:
        depth[v] = depth[view.parent[v]] + 1
    c = Coloring(g.n, [v for v in t.vertices if depth[v] % 2 == 0])
    return c, mst_ratio(g, c, base_weight=t.total_weight)


@dataclass(frozen=True)
class CertificateReport:
    tree: Tree
    pstar_path: tuple
    pstar_weight: float
    leaf_weight: float
    red_tree: Tree
    blue_tree: Tree
    combined_weight: float
    bound: float

    def to_json(self) -> dict:
        return {
            "tree": self.tree.to_json(),
            "pstar_path": list(self.pstar_path),
            "pstar_weight": self.pstar_weight,
            "leaf_weight": self.leaf_weight,
            "red_tree": self.red_tree.to_json(),
            "blue_tree": self.blue_tree.to_json(),
            "combined_weight": self.combined_weight,
            "bound": self.bound,
        }


class Certifier:
    """Coloring-independent preprocessing for the upper-bound construction.

    Hangs the MST from one endpoint of the heaviest path between non-leaf
    vertices, with DFS exploring that path's vertices first.  The rooted
    arrays are shared by the per-coloring construction and by the compiled
    all-colorings run.
    """

    def __init__(self, g: WeightedCompleteGraph):
        if g.n < 5:
            raise DegenerateInstanceError("the upper-bound certificate needs n >= 5")
        ok, triple = validate_metric(g)
        if not ok:
            raise NotMetricError(f"instance violates the triangle inequality at {triple}")
        self.g = g
        self.tree = mst(g)
        path, pw = heaviest_internal_path(self.tree)
        self.pstar_path = tuple(path)
        self.pstar_weight = pw
        deg = self.tree.degrees()
        self.leaf_weight = float(sum(w for i, j, w in self.tree.edges
                                     if deg[i] == 1 or deg[j] == 1))
        self.root = path[0]
        self.view = rooted_view(self.tree, self.root, prefer=set(path))
        self.bound = metric_max_ratio_bound(g.n) * self.tree.total_weight
        slack = CERT_REL_TOL * self.tree.total_weight
        if self.pstar_weight + self.leaf_weight < (
                4.0 / (g.n - 1)) * self.tree.total_weight - slack:
            raise AssertionError("heaviest path + leaf edges fell below 4/(n-1) of the tree")
        # flat arrays for the compiled path
        n = g.n
        self._parent = np.full(n, -1, dtype=np.int64)
        self._wpar = np.zeros(n, dtype=np.float64)
        wmap = {(i, j): w for i, j, w in self.tree.edges}
        for v in self.tree.vertices:
            p = self.view.parent[v]
            if p is not None:
                self._parent[v] = p
                self._wpar[v] = wmap[(min(v, p), max(v, p))]
        self._order = np.array(self.view.order, dtype=np.int64)

    def class_trees(self, c: Coloring):
        """Build the two spanning trees of the construction for one coloring."""
        if c.n != self.g.n:
            raise DegenerateInstanceError("coloring size does not match the instance")
        color = c.red_mask
        parent = self.view.parent
        m = self.g.matrix()
        region_top: dict = {}
        groups: dict = {}
        edges = ([], [])  # blue, red
        for v in self.view.order:
            p = parent[v]
            if p is None:
                region_top[v] = v
                continue
            cv = color >> v & 1
            if cv == color >> p & 1:
                region_top[v] = region_top[p]
                edges[cv].append((v, p, float(m[v, p])))
            else:
                region_top[v] = v
                groups.setdefault(region_top[p], []).append(v)
        for key, members in groups.items():
            cv = color >> members[0] & 1
            for a, b in zip(members, members[1:]):
                edges[cv].append((a, b, float(m[a, b])))
            if key != self.root:
                edges[cv].append((members[-1], parent[key], float(m[members[-1], parent[key]])))
        red = Tree(edges[1], vertices=c.red_indices())
        blue = Tree(edges[0], vertices=c.blue_indices())
        return red, blue

    def certify(self, c: Coloring) -> CertificateReport:
        red, blue = self.class_trees(c)
        combined = red.total_weight + blue.total_weight
        slack = CERT_REL_TOL * self.tree.total_weight
        if combined > self.bound + slack:
            raise AssertionError(
                f"constructed trees weigh {combined}, above the bound {self.bound}")
        return CertificateReport(self.tree, self.pstar_path, self.pstar_weight,
                                 self.leaf_weight, red, blue, combined, self.bound)

    def certify_all(self):
        """Combined weight and validity for every proper coloring at once.

        Returns (combined, ok): slot j is the coloring with red mask 2j+1;
        the last slot (the improper all-red pattern) is unused.
        """
        combined, ok = _kernels.certify_all_colorings(
            np.ascontiguousarray(self.g.matrix()), self._parent, self._order,
            self._wpar)
        return combined, ok


def certify_upper_bound(g: WeightedCompleteGraph, c: Coloring) -> CertificateReport:
    """One-shot certificate; use Certifier directly to amortize the setup."""
    return Certifier(g).certify(c)
