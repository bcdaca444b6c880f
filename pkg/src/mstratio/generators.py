"""Deterministic construction of the named instance families plus seeded
random clouds, graphs and weight matrices.

Randomness policy: everything runs on PCG64.  Independent streams for
trial-indexed work are derived with numpy's SeedSequence spawn keys, i.e.
``child_rng(seed, n, trial)`` is the stream for that (n, trial) cell no
matter in which order or on how many workers the cells execute.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .core import DegenerateInstanceError, PointSet, WeightedCompleteGraph
from .hardness import ReductionInstance, SimpleGraph, reduce_clique

SeedLike = Union[int, np.random.SeedSequence]


def make_rng(seed: SeedLike) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def child_rng(seed: int, *key: int) -> np.random.Generator:
    """Stream for one cell of a seeded experiment grid."""
    return make_rng(np.random.SeedSequence(seed, spawn_key=tuple(key)))


def gen_uniform(n: int, d: int, seed: SeedLike = 0) -> PointSet:
    """n i.i.d. uniform points in the unit cube [0,1]^d."""
    if n < 1 or d < 1:
        raise DegenerateInstanceError("need n >= 1 and d >= 1")
    return PointSet(make_rng(seed).random((n, d)))


def gen_triangular_chain(k: int, delta: float = 1e-3) -> PointSet:
    """Zigzag of 2k+1 points on the unit triangular grid, stretched by delta.

    Stretching keeps consecutive points (distance about 1 + delta/4) strictly
    closer than second neighbours (distance 1 + delta), so the chain path is
    the unique MST.
    """
    if k < 1:
        raise DegenerateInstanceError("need k >= 1")
    if not 0.0 < delta <= 1e-2:
        raise DegenerateInstanceError("delta must lie in (0, 1e-2]; 0 loses MST uniqueness")
    i = np.arange(1, 2 * k + 2)
    x = (i - 1) * (1.0 + delta) / 2.0
    y = np.where(i % 2 == 0, math.sqrt(3.0) / 2.0, 0.0)
    return PointSet(np.column_stack([x, y]))


def gen_pentagon_core(n: int, eps: float = 1e-12) -> PointSet:
    """n-5 points on a tiny circle at the origin plus a unit-circle pentagon.

    The core radius is small enough that core-core distances are negligible
    against the pentagon side 2*sin(36 deg) and diagonal, which is what
    drags the average ratio below 1.
    """
    if n < 10:
        raise DegenerateInstanceError("need n >= 10")
    if not 0.0 < eps <= 1e-10:
        raise DegenerateInstanceError("eps must lie in (0, 1e-10]")
    m = n - 5
    core_ang = 2.0 * np.pi * np.arange(m) / m
    core = eps * np.column_stack([np.cos(core_ang), np.sin(core_ang)])
    pent_ang = 2.0 * np.pi * np.arange(5) / 5
    pent = np.column_stack([np.cos(pent_ang), np.sin(pent_ang)])
    return PointSet(np.vstack([core, pent]))


def gen_tripod(m: int, eps: float = 1e-4, seed: SeedLike = 0) -> PointSet:
    """Three eps-clusters of m points at the corners of an inscribed
    equilateral triangle, plus the origin (n = 3m + 1)."""
    if m < 1:
        raise DegenerateInstanceError("need m >= 1")
    if not 0.0 < eps <= 1e-3:
        raise DegenerateInstanceError("eps must lie in (0, 1e-3]")
    rng = make_rng(seed)
    ang = 2.0 * np.pi * np.arange(3) / 3
    anchors = np.column_stack([np.cos(ang), np.sin(ang)])
    pts = []
    for a in anchors:
        r = eps * np.sqrt(rng.random(m))
        th = 2.0 * np.pi * rng.random(m)
        pts.append(a + np.column_stack([r * np.cos(th), r * np.sin(th)]))
    pts.append(np.zeros((1, 2)))
    return PointSet(np.vstack(pts))


def gen_metric_extremal(k: int, eps: float = 1e-4) -> WeightedCompleteGraph:
    """The 2k+1 point metric family whose maximum ratio presses against the
    3 - 4/(n-1) bound as eps shrinks.

    Vertex 2k is joined to everything at weight 1, vertices (0,1), (2,3),
    ... pair up at weight eps, and every other distance is 2.
    """
    if k < 2:
        raise DegenerateInstanceError("need k >= 2")
    if not 0.0 < eps < 1.0:
        raise DegenerateInstanceError("eps must lie in (0, 1)")
    n = 2 * k + 1
    m = np.full((n, n), 2.0)
    m[n - 1, :] = 1.0
    m[:, n - 1] = 1.0
    for t in range(k):
        m[2 * t, 2 * t + 1] = m[2 * t + 1, 2 * t] = eps
    np.fill_diagonal(m, 0.0)
    return WeightedCompleteGraph(n, m[np.triu_indices(n, 1)])


def random_metric_graph(n: int, seed: SeedLike = 0, low: float = 1.0,
                        high: float = 2.0) -> WeightedCompleteGraph:
    """Random metric instance: i.i.d. weights in [low, high] with
    high <= 2*low, which makes every triangle inequality automatic."""
    if n < 2:
        raise DegenerateInstanceError("need n >= 2")
    if not 0.0 < low <= high <= 2.0 * low:
        raise DegenerateInstanceError("need 0 < low <= high <= 2*low for a metric")
    w = make_rng(seed).uniform(low, high, n * (n - 1) // 2)
    return WeightedCompleteGraph(n, w, is_metric=True)


def random_weight_graph(n: int, seed: SeedLike = 0, low: float = 0.1,
                        high: float = 2.0) -> WeightedCompleteGraph:
    """Random positive weights with no metric promise."""
    if n < 2:
        raise DegenerateInstanceError("need n >= 2")
    if not 0.0 < low <= high:
        raise DegenerateInstanceError("need 0 < low <= high")
    w = make_rng(seed).uniform(low, high, n * (n - 1) // 2)
    return WeightedCompleteGraph(n, w)


def random_graph(n: int, p: float, seed: SeedLike = 0) -> SimpleGraph:
    """Erdos-Renyi G(n, p) with a reproducible edge order."""
    if n < 1:
        raise DegenerateInstanceError("need n >= 1")
    if not 0.0 <= p <= 1.0:
        raise DegenerateInstanceError("p must lie in [0, 1]")
    rng = make_rng(seed)
    draws = rng.random(n * (n - 1) // 2)
    edges = []
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if draws[k] < p:
                edges.append((i, j))
            k += 1
    return SimpleGraph(n, edges)


FAMILIES = ("uniform_cube", "triangular_chain", "pentagon_core", "tripod",
            "metric_extremal", "clique_reduction")


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    n: Optional[int] = None
    d: int = 2
    k: Optional[int] = None
    m: Optional[int] = None
    eps: Optional[float] = None
    delta: Optional[float] = None
    p: float = 0.5
    seed: int = 0


def generate(spec: GeneratorSpec):
    """Dispatch a GeneratorSpec to its family; returns a PointSet or a
    WeightedCompleteGraph depending on the family."""
    fam = spec.family
    if fam == "uniform_cube":
        if spec.n is None:
            raise DegenerateInstanceError("uniform_cube needs n")
        return gen_uniform(spec.n, spec.d, spec.seed)
    if fam == "triangular_chain":
        if spec.k is None:
            raise DegenerateInstanceError("triangular_chain needs k")
        return gen_triangular_chain(spec.k, spec.delta if spec.delta is not None else 1e-3)
    if fam == "pentagon_core":
        if spec.n is None:
            raise DegenerateInstanceError("pentagon_core needs n")
        return gen_pentagon_core(spec.n, spec.eps if spec.eps is not None else 1e-12)
    if fam == "tripod":
        if spec.m is None:
            raise DegenerateInstanceError("tripod needs m")
        return gen_tripod(spec.m, spec.eps if spec.eps is not None else 1e-4, spec.seed)
    if fam == "metric_extremal":
        if spec.k is None:
            raise DegenerateInstanceError("metric_extremal needs k")
        return gen_metric_extremal(spec.k, spec.eps if spec.eps is not None else 1e-4)
    if fam == "clique_reduction":
        if spec.n is None:
            raise DegenerateInstanceError("clique_reduction needs n")
        return reduce_clique(random_graph(spec.n, spec.p, spec.seed)).reduced
    raise DegenerateInstanceError(f"unknown family {fam!r}; choose from {FAMILIES}")
