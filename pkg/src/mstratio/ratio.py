"""The MST-ratio of a coloring and its exact, averaged and sampled extremes.

For a bipartition into red and blue, the ratio is

    (|MST of red| + |MST of blue|) / |MST of everything|,

with a singleton class contributing 0.  Exhaustive maximization/averaging
enumerates every unordered proper coloring; since the ratio is symmetric
under swapping the colors this loses nothing against the ordered average.
The enumeration is backed by a compiled table holding the MST weight of
every vertex subset, recomputed from scratch per subset.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import (Coloring, DegenerateInstanceError, EnumerationGuardError,
                   Tree, WeightedCompleteGraph)
from .mst import mst, mst_of_subset

ENUM_GUARD = 24
SUBSET_GUARD = 20
RATIO_ABS_TOL = 1e-9


def metric_max_ratio_bound(n: int) -> float:
    """Upper bound 3 - 4/(n-1) for the maximum ratio of metric instances, n >= 5."""
    return 3.0 - 4.0 / (n - 1)


def average_ratio_floor(n: int) -> float:
    """Universal lower bound (n-2)/(n-1) for the average ratio."""
    return (n - 2.0) / (n - 1.0)


@dataclass(frozen=True)
class RatioEvaluation:
    coloring: Coloring
    red_weight: float
    blue_weight: float
    base_weight: float
    ratio: float

    def to_json(self) -> dict:
        return {
            "coloring": self.coloring.to_string(),
            "red_weight": self.red_weight,
            "blue_weight": self.blue_weight,
            "base_weight": self.base_weight,
            "ratio": self.ratio,
        }


@dataclass(frozen=True)
class MaxRatioResult:
    best: RatioEvaluation
    colorings_examined: int
    method: str

    def to_json(self) -> dict:
        out = self.best.to_json()
        out["method"] = self.method
        out["examined"] = self.colorings_examined
        return out


def mst_ratio(g: WeightedCompleteGraph, c: Coloring,
              base_weight: float | None = None) -> RatioEvaluation:
    """Exact ratio of one coloring, via the subset MSTs of both classes."""
    if c.n != g.n:
        raise DegenerateInstanceError(f"coloring has n={c.n}, instance has n={g.n}")
    red = mst_of_subset(g, c.red_indices()).total_weight
    blue = mst_of_subset(g, c.blue_indices()).total_weight
    if base_weight is None:
        base_weight = mst(g).total_weight
    return RatioEvaluation(c, red, blue, base_weight, (red + blue) / base_weight)


def subset_mst_table(g: WeightedCompleteGraph) -> np.ndarray:
    """MST weight of every vertex subset, indexed by bitmask (length 2^n)."""
    return _kernels.subset_mst_weight_table(np.ascontiguousarray(g.matrix()))


def _guard(n: int, limit: int, override: bool, what: str) -> None:
    if n < 2:
        raise DegenerateInstanceError(f"{what} needs n >= 2")
    if n > limit and not override:
        raise EnumerationGuardError(
            f"{what} is exponential; n={n} exceeds the guard {limit} "
            f"(pass override_guard=True to force)")


def _proper_values(table: np.ndarray, n: int):
    """Combined class-MST weight for every unordered proper coloring.

    Entry j corresponds to red mask 2j+1, i.e. the colorings enumerated by
    enumerate_proper_colorings in the same order.
    """
    full = (1 << n) - 1
    masks = 2 * np.arange((1 << (n - 1)) - 1, dtype=np.int64) + 1
    return masks, table[masks] + table[full - masks]


def max_ratio_exact(g: WeightedCompleteGraph, *, override_guard: bool = False) -> MaxRatioResult:
    """Exhaustive maximum ratio; the argmax reported is the first maximizer
    in increasing red-mask order."""
    n = g.n
    _guard(n, ENUM_GUARD, override_guard, "exact maximization")
    table = subset_mst_table(g)
    masks, values = _proper_values(table, n)
    base = float(table[(1 << n) - 1])
    j = int(np.argmax(values))
    c = Coloring(n, int(masks[j]))
    best = RatioEvaluation(c, float(table[masks[j]]),
                           float(table[(1 << n) - 1 - masks[j]]),
                           base, float(values[j]) / base)
    return MaxRatioResult(best, len(values), "exact")


def average_ratio_exact(g: WeightedCompleteGraph, *, override_guard: bool = False) -> float:
    """Arithmetic mean of the ratio over all proper colorings."""
    n = g.n
    _guard(n, ENUM_GUARD, override_guard, "exact averaging")
    table = subset_mst_table(g)
    _, values = _proper_values(table, n)
    base = float(table[(1 << n) - 1])
    return float(np.mean(values / base))


def average_ratio_sampled(g: WeightedCompleteGraph, samples: int, seed: int = 0):
    """Monte-Carlo mean of the ratio over uniform proper colorings.

    Colorings are drawn uniformly over all 2^n - 2 ordered proper ones by
    redrawing any monochromatic row.  Returns (mean, standard_error); the
    result depends only on (instance, samples, seed).
    """
    samples = int(samples)
    if samples < 1:
        raise DegenerateInstanceError("need at least one sample")
    n = g.n
    if n < 2:
        raise DegenerateInstanceError("sampling needs n >= 2")
    rng = np.random.Generator(np.random.PCG64(seed))
    bits = rng.integers(0, 2, size=(samples, n), dtype=np.int8)
    while True:
        rowsum = bits.sum(axis=1)
        bad = np.flatnonzero((rowsum == 0) | (rowsum == n))
        if bad.size == 0:
            break
        bits[bad] = rng.integers(0, 2, size=(bad.size, n), dtype=np.int8)

    d = np.ascontiguousarray(g.matrix())
    if n <= SUBSET_GUARD:
        table = subset_mst_table(g)
        powers = (np.int64(1) << np.arange(n, dtype=np.int64))
        masks = bits.astype(np.int64) @ powers
        values = table[masks] + table[(1 << n) - 1 - masks]
        base = float(table[(1 << n) - 1])
    else:
        idx = np.arange(n)
        values = np.empty(samples)
        for s in range(samples):
            red = np.ascontiguousarray(idx[bits[s] == 1])
            blue = np.ascontiguousarray(idx[bits[s] == 0])
            values[s] = (_kernels.prim_weight_of(d, red)
                         + _kernels.prim_weight_of(d, blue))
        base = _kernels.prim_weight_of(d, np.arange(n))
    ratios = values / base
    mean = float(np.mean(ratios))
    stderr = float(np.std(ratios, ddof=1) / np.sqrt(samples)) if samples > 1 else 0.0
    return mean, stderr


def average_lower_bound(t: Tree) -> float:
    """Closed-form floor for the average ratio from the MST edge weights.

    With the tree weights sorted ascending, the average cannot fall below
    1 - sum_i 2^(n-i) w_i / ((2^n - 2) |T|), which itself is at least
    (n-2)/(n-1) because the geometric weights sum to 2^n - 2.
    """
    n = t.n
    if n < 3:
        raise DegenerateInstanceError("the average bound needs n >= 3")
    ws = np.sort(np.array([w for _, _, w in t.edges]))
    geo = np.power(2.0, -np.arange(1, n, dtype=np.float64))
    return 1.0 - float(np.sum(ws * geo)) / ((1.0 - 2.0 ** (1 - n)) * t.total_weight)


def max_subset_mst_exact(g: WeightedCompleteGraph, *, override_guard: bool = False):
    """Subset whose induced MST is heaviest, by exhaustive enumeration.

    Returns (vertices, weight); the first maximizer in increasing bitmask
    order wins ties.
    """
    n = g.n
    if n == 1:
        return (0,), 0.0
    _guard(n, SUBSET_GUARD, override_guard, "subset maximization")
    table = subset_mst_table(g)
    mask = 1 + int(np.argmax(table[1:]))
    verts = tuple(v for v in range(n) if mask >> v & 1)
    return verts, float(table[mask])
