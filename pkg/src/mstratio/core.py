"""Instances and colorings shared by every other module.

Two kinds of instances exist: geometric point sets and abstract weighted
complete graphs.  A coloring is a proper red/blue bipartition of the vertex
indices, kept in a canonical form (index 0 is always red) because every
quantity we compute is symmetric under swapping the two colors.

All objects are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np
from scipy.spatial.distance import pdist

METRIC_REL_TOL = 1e-9


class MstRatioError(ValueError):
    """Base class for domain errors.  ``code`` is a stable machine token."""

    code = "domain_error"


class DegenerateInstanceError(MstRatioError):
    code = "degenerate_instance"


class NotMetricError(MstRatioError):
    code = "not_metric"


class ImproperColoringError(MstRatioError):
    code = "improper_coloring"


class EnumerationGuardError(MstRatioError):
    code = "enumeration_guard"


class DegenerateGeometryError(MstRatioError):
    code = "degenerate_geometry"


class RealizationError(MstRatioError):
    code = "realization_failure"


class DecodeError(MstRatioError):
    code = "decode_failure"


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.float64)
    a.flags.writeable = False
    return a


class PointSet:
    """n points in R^d, stored as an (n, dim) float array."""

    def __init__(self, points: Sequence[Sequence[float]] | np.ndarray):
        arr = np.asarray(points, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DegenerateInstanceError("point set must be a nonempty n x d array")
        if not np.all(np.isfinite(arr)):
            raise DegenerateInstanceError("point coordinates must be finite")
        self._points = _freeze(arr)

    @property
    def points(self) -> np.ndarray:
        return self._points

    @property
    def n(self) -> int:
        return self._points.shape[0]

    @property
    def dim(self) -> int:
        return self._points.shape[1]

    def to_json(self) -> dict:
        return {"dim": self.dim, "points": self._points.tolist()}

    @classmethod
    def from_json(cls, obj: dict) -> "PointSet":
        ps = cls(obj["points"])
        if int(obj.get("dim", ps.dim)) != ps.dim:
            raise DegenerateInstanceError("declared dim does not match point data")
        return ps

    def __repr__(self) -> str:
        return f"PointSet(n={self.n}, dim={self.dim})"


class WeightedCompleteGraph:
    """Complete graph with positive weights in condensed upper-triangular order.

    ``weights[k]`` is the weight of (i, j) for pairs enumerated row-major:
    (0,1), (0,2), ..., (0,n-1), (1,2), ...  The metric flag is a cached
    tri-state: None until checked, then True/False.
    """

    def __init__(self, n: int, weights: Sequence[float] | np.ndarray,
                 is_metric: Optional[bool] = None):
        n = int(n)
        if n < 1:
            raise DegenerateInstanceError("graph needs at least one vertex")
        w = np.asarray(weights, dtype=np.float64).ravel()
        if w.shape[0] != n * (n - 1) // 2:
            raise DegenerateInstanceError(
                f"expected {n * (n - 1) // 2} weights for n={n}, got {w.shape[0]}")
        if w.size and (not np.all(np.isfinite(w)) or np.min(w) <= 0.0):
            raise DegenerateInstanceError("all weights must be positive and finite")
        self._n = n
        self._weights = _freeze(w)
        self._is_metric: Optional[bool] = is_metric
        self._matrix: Optional[np.ndarray] = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def weights(self) -> np.ndarray:
        return self._weights

    @property
    def is_metric(self) -> Optional[bool]:
        return self._is_metric

    def matrix(self) -> np.ndarray:
        """Dense symmetric weight matrix with zero diagonal (cached)."""
        if self._matrix is None:
            m = np.zeros((self._n, self._n))
            iu = np.triu_indices(self._n, 1)
            m[iu] = self._weights
            m += m.T
            self._matrix = _freeze(m)
        return self._matrix

    def weight(self, i: int, j: int) -> float:
        if i == j:
            raise IndexError("no self loops in a complete graph")
        if i > j:
            i, j = j, i
        return float(self._weights[i * (2 * self._n - i - 1) // 2 + (j - i - 1)])

    def scaled(self, factor: float) -> "WeightedCompleteGraph":
        return WeightedCompleteGraph(self._n, self._weights * factor,
                                     is_metric=self._is_metric)

    def to_json(self) -> dict:
        return {"n": self._n, "weights": self._weights.tolist()}

    @classmethod
    def from_json(cls, obj: dict) -> "WeightedCompleteGraph":
        return cls(int(obj["n"]), obj["weights"])

    def __repr__(self) -> str:
        return f"WeightedCompleteGraph(n={self._n}, is_metric={self._is_metric})"


@dataclass(frozen=True)
class Coloring:
    """Proper red/blue bipartition of {0..n-1}, canonicalized so 0 is red.

    Construction with 0 on the blue side silently swaps the colors; the
    ratio and every other statistic are symmetric under the swap.
    """

    n: int
    red_mask: int

    def __init__(self, n: int, red: Iterable[int] | int):
        n = int(n)
        if n < 2:
            raise ImproperColoringError("a proper coloring needs n >= 2")
        if isinstance(red, (int, np.integer)):
            mask = int(red)
        else:
            mask = 0
            for v in red:
                v = int(v)
                if not 0 <= v < n:
                    raise ImproperColoringError(f"vertex {v} out of range for n={n}")
                mask |= 1 << v
        full = (1 << n) - 1
        if mask & ~full:
            raise ImproperColoringError("red set contains out-of-range vertices")
        if mask == 0 or mask == full:
            raise ImproperColoringError("both color classes must be nonempty")
        if not mask & 1:
            mask = full ^ mask
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "red_mask", mask)

    @property
    def red_set(self) -> frozenset:
        return frozenset(self.red_indices())

    def red_indices(self) -> tuple:
        return tuple(v for v in range(self.n) if self.red_mask >> v & 1)

    def blue_indices(self) -> tuple:
        return tuple(v for v in range(self.n) if not self.red_mask >> v & 1)

    def swapped(self) -> "Coloring":
        return Coloring(self.n, ((1 << self.n) - 1) ^ self.red_mask)

    def to_string(self) -> str:
        return "".join("R" if self.red_mask >> v & 1 else "B" for v in range(self.n))

    def to_bits(self) -> list:
        return [(self.red_mask >> v) & 1 for v in range(self.n)]

    @classmethod
    def from_string(cls, s: str) -> "Coloring":
        s = s.strip().upper()
        if set(s) - {"R", "B"}:
            raise ImproperColoringError("coloring string must use only R and B")
        return cls(len(s), [i for i, ch in enumerate(s) if ch == "R"])


@dataclass(frozen=True)
class Tree:
    """Explicit spanning tree: edge list with weights plus the total weight.

    ``vertices`` carries the vertex labels being spanned; for whole-instance
    trees it is simply (0..n-1), for subset trees it keeps the original
    labels of the subset.
    """

    n: int
    edges: tuple
    total_weight: float
    vertices: tuple

    def __init__(self, edges: Iterable[tuple], vertices: Iterable[int] | None = None,
                 n: Optional[int] = None):
        es = tuple(sorted((min(i, j), max(i, j), float(w)) for i, j, w in edges))
        if vertices is None:
            if n is None:
                n = len(es) + 1
            verts = tuple(range(n))
        else:
            verts = tuple(sorted(int(v) for v in vertices))
        if len(es) != len(verts) - 1:
            raise DegenerateInstanceError(
                f"{len(verts)} vertices need {len(verts) - 1} tree edges, got {len(es)}")
        _check_spanning(es, verts)
        object.__setattr__(self, "n", len(verts))
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "total_weight",
                           float(np.sum([w for _, _, w in es])) if es else 0.0)
        object.__setattr__(self, "vertices", verts)

    def adjacency(self) -> dict:
        adj: dict = {v: [] for v in self.vertices}
        for i, j, w in self.edges:
            adj[i].append((j, w))
            adj[j].append((i, w))
        return adj

    def degrees(self) -> dict:
        deg = {v: 0 for v in self.vertices}
        for i, j, _ in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def leaf_vertices(self) -> list:
        if self.n == 1:
            return list(self.vertices)
        deg = self.degrees()
        return [v for v in self.vertices if deg[v] == 1]

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[i, j, w] for i, j, w in self.edges]}

    @classmethod
    def from_json(cls, obj: dict) -> "Tree":
        edges = [(int(i), int(j), float(w)) for i, j, w in obj["edges"]]
        verts = sorted({v for i, j, _ in edges for v in (i, j)})
        if not edges:
            verts = list(range(int(obj["n"])))
        return cls(edges, vertices=verts)


def _check_spanning(edges: Sequence[tuple], vertices: Sequence[int]) -> None:
    index = {v: k for k, v in enumerate(vertices)}
    parent = list(range(len(vertices)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j, _ in edges:
        if i not in index or j not in index:
            raise DegenerateInstanceError(f"edge ({i},{j}) leaves the vertex set")
        a, b = find(index[i]), find(index[j])
        if a == b:
            raise DegenerateInstanceError("edge list contains a cycle")
        parent[a] = b


def distance_graph(ps: PointSet) -> WeightedCompleteGraph:
    """Complete graph weighted by pairwise Euclidean distances.

    Coincident points would produce a zero weight, which no instance is
    allowed to carry; they are rejected rather than perturbed.
    """
    if ps.n < 2:
        raise DegenerateInstanceError("distance graph needs at least two points")
    w = pdist(ps.points)
    if np.min(w) <= 0.0:
        raise DegenerateInstanceError("degenerate instance: coincident points")
    return WeightedCompleteGraph(ps.n, w, is_metric=True)


def validate_metric(g: WeightedCompleteGraph):
    """Check every triangle inequality; returns (ok, first_violating_triple).

    The violating triple (i, j, k) means w(i,k) > w(i,j) + w(j,k) beyond the
    relative tolerance.  Pairs (i, k) are scanned in lexicographic order and
    the middle vertex j ascending, so the reported triple is deterministic.
    The verdict is cached on the graph.
    """
    if g.is_metric is not None and g.is_metric:
        return True, None
    n = g.n
    if n < 3:
        g._is_metric = True
        return True, None
    m = g.matrix()
    tol = METRIC_REL_TOL * float(np.max(g.weights))
    # min over middle vertices j of w(i,j) + w(j,k); the j=i / j=k columns
    # contribute w(i,k) itself and can never flag a violation.
    if n <= 128:
        best = np.min(m[:, :, None] + m[None, :, :], axis=1)
    else:
        best = np.empty_like(m)
        for i in range(n):
            best[i] = np.min(m[i][:, None] + m, axis=0)
    viol = m > best + tol
    if not viol.any():
        g._is_metric = True
        return True, None
    g._is_metric = False
    for i in range(n):
        ks = np.flatnonzero(viol[i, i + 1:])
        if ks.size:
            k = int(ks[0]) + i + 1
            for j in range(n):
                if j != i and j != k and m[i, k] > m[i, j] + m[j, k] + tol:
                    return False, (i, j, k)
    # violations only below the diagonal would contradict symmetry
    raise AssertionError("inconsistent metric violation scan")


def enumerate_proper_colorings(n: int) -> Iterator[Coloring]:
    """Yield each unordered proper bipartition exactly once.

    There are 2^(n-1) - 1 of them; vertex 0 is pinned red and the remaining
    bits run through every pattern except all-red, in increasing order.
    """
    if not 2 <= n <= 30:
        raise EnumerationGuardError(f"coloring enumeration supports 2 <= n <= 30, got {n}")
    for rest in range((1 << (n - 1)) - 1):
        yield Coloring(n, 1 | (rest << 1))


def proper_coloring_count(n: int) -> int:
    return (1 << (n - 1)) - 1


# ---------------------------------------------------------------------------
# File formats


def load_point_set(path_or_text: str, *, is_text: bool = False) -> PointSet:
    """Read a point set from JSON ({"dim":, "points":}) or headerless CSV."""
    text = path_or_text if is_text else open(path_or_text).read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return PointSet.from_json(json.loads(text))
    rows = [
        [float(tok) for tok in line.replace(",", " ").split()]
        for line in text.splitlines() if line.strip()
    ]
    return PointSet(rows)


def load_graph(path_or_text: str, *, is_text: bool = False) -> WeightedCompleteGraph:
    text = path_or_text if is_text else open(path_or_text).read()
    return WeightedCompleteGraph.from_json(json.loads(text))


def parse_coloring(spec: str, n: int) -> Coloring:
    """Coloring from an R/B string or a JSON array of 0/1 (1 = red)."""
    spec = spec.strip()
    if spec.startswith("["):
        bits = json.loads(spec)
        if len(bits) != n:
            raise ImproperColoringError(f"coloring length {len(bits)} != n={n}")
        return Coloring(n, [i for i, b in enumerate(bits) if b])
    if len(spec) != n:
        raise ImproperColoringError(f"coloring length {len(spec)} != n={n}")
    return Coloring.from_string(spec)
