"""Compiled inner loops for whole-enumeration workloads.

Each kernel writes per-item results into preallocated arrays (one slot per
subset or per coloring), so the output is identical no matter how many
threads execute the parallel chunks.  Reductions over those arrays happen
in the callers, in plain numpy, to keep them deterministic as well.
"""

from __future__ import annotations

import numpy as np
from numba import config, njit, prange

# prefer OpenMP outright instead of letting numba probe (and warn about) TBB
config.THREADING_LAYER = "omp"


@njit(cache=True)
def _prim_weight(D, verts, cnt, dist, used):
    """MST weight of the complete subgraph on verts[:cnt] (dense Prim)."""
    if cnt < 2:
        return 0.0
    for i in range(1, cnt):
        dist[i] = D[verts[0], verts[i]]
        used[i] = False
    total = 0.0
    for _ in range(cnt - 1):
        best = -1
        bd = np.inf
        for i in range(1, cnt):
            if not used[i] and dist[i] < bd:
                bd = dist[i]
                best = i
        used[best] = True
        total += bd
        bv = verts[best]
        for i in range(1, cnt):
            if not used[i]:
                d2 = D[bv, verts[i]]
                if d2 < dist[i]:
                    dist[i] = d2
    return total


@njit(parallel=True, cache=True)
def subset_mst_weight_table(D):
    """MST weight of the induced subgraph for every vertex subset.

    Returns an array of length 2^n indexed by the subset bitmask; empty and
    singleton subsets get weight 0.
    """
    n = D.shape[0]
    size = 1 << n
    out = np.zeros(size, np.float64)
    nchunks = 1024 if size >= 1024 else 1
    chunk = size // nchunks
    for c in prange(nchunks):
        verts = np.empty(n, np.int64)
        dist = np.empty(n, np.float64)
        used = np.empty(n, np.bool_)
        lo = c * chunk
        hi = lo + chunk
        if lo == 0:
            lo = 1
        for mask in range(lo, hi):
            cnt = 0
            for v in range(n):
                if mask & (1 << v):
                    verts[cnt] = v
                    cnt += 1
            if cnt >= 2:
                out[mask] = _prim_weight(D, verts, cnt, dist, used)
    return out


@njit(cache=True)
def prim_weight_of(D, verts):
    """MST weight of one vertex subset given as an index array."""
    n = D.shape[0]
    dist = np.empty(n, np.float64)
    used = np.empty(n, np.bool_)
    return _prim_weight(D, verts, verts.shape[0], dist, used)


@njit(cache=True)
def emst_weight(pts):
    """Euclidean MST weight of a point array, O(n^2) without storing distances."""
    n, d = pts.shape
    if n < 2:
        return 0.0
    dist2 = np.full(n, np.inf)
    used = np.zeros(n, np.bool_)
    used[0] = True
    cur = 0
    total = 0.0
    for _ in range(n - 1):
        best = -1
        bd = np.inf
        for i in range(n):
            if used[i]:
                continue
            s = 0.0
            for k in range(d):
                diff = pts[cur, k] - pts[i, k]
                s += diff * diff
            if s < dist2[i]:
                dist2[i] = s
            if dist2[i] < bd:
                bd = dist2[i]
                best = i
        used[best] = True
        total += np.sqrt(bd)
        cur = best
    return total


@njit(cache=True)
def _uf_find(uf, x):
    while uf[x] != x:
        uf[x] = uf[uf[x]]
        x = uf[x]
    return x


@njit(cache=True)
def _certify_one(W, parent, order, wpar, mask, region_top, head, last, nxt, uf):
    """Build both class trees for one coloring; return (weight, valid).

    The construction keys off the rooted tree only: monochromatic parent
    edges are kept; every maximal same-colored downward region hanging below
    an opposite-colored parent contributes its top vertex to a chain grouped
    under the region top of that parent; chains are wired in DFS start-time
    order and attached to the group key's parent (except for the group keyed
    by the root, which stays an unattached chain).  Validity means each color
    class receives exactly (class size - 1) monochromatic edges forming a
    single acyclic component.
    """
    n = W.shape[0]
    r = order[0]
    for v in range(n):
        head[v] = -1
        uf[v] = v
    total = 0.0
    cnt0 = 0
    cnt1 = 0
    size1 = 0
    valid = True
    # pre-order pass: region tops, monochromatic edges, chain membership
    for t in range(n):
        v = order[t]
        size1 += (mask >> v) & 1
        p = parent[v]
        if p < 0:
            region_top[v] = v
            continue
        cv = (mask >> v) & 1
        if cv == (mask >> p) & 1:
            region_top[v] = region_top[p]
            total += wpar[v]
            if cv == 1:
                cnt1 += 1
            else:
                cnt0 += 1
            a = _uf_find(uf, v)
            b = _uf_find(uf, p)
            if a == b:
                valid = False
            else:
                uf[a] = b
        else:
            region_top[v] = v
            w = region_top[p]
            if head[w] < 0:
                head[w] = v
            else:
                nxt[last[w]] = v
            last[w] = v
            nxt[v] = -1
    # chain pass
    for w in range(n):
        z = head[w]
        if z < 0:
            continue
        cz = (mask >> z) & 1
        prev = -1
        while z >= 0:
            if prev >= 0:
                total += W[prev, z]
                if cz == 1:
                    cnt1 += 1
                else:
                    cnt0 += 1
                a = _uf_find(uf, prev)
                b = _uf_find(uf, z)
                if a == b:
                    valid = False
                else:
                    uf[a] = b
            prev = z
            z = nxt[z]
        if w != r:
            p = parent[w]
            if ((mask >> p) & 1) != cz:
                valid = False
            total += W[prev, p]
            if cz == 1:
                cnt1 += 1
            else:
                cnt0 += 1
            a = _uf_find(uf, prev)
            b = _uf_find(uf, p)
            if a == b:
                valid = False
            else:
                uf[a] = b
    if cnt1 != size1 - 1 or cnt0 != (n - size1) - 1:
        valid = False
    return total, valid


@njit(parallel=True, cache=True)
def certify_all_colorings(W, parent, order, wpar):
    """Run the two-tree construction for every proper coloring.

    Slot j holds the coloring with red mask 2j+1 (vertex 0 red); the final
    slot would be the all-red improper coloring and is left as (0, False).
    """
    n = W.shape[0]
    half = 1 << (n - 1)
    combined = np.zeros(half, np.float64)
    ok = np.zeros(half, np.bool_)
    nchunks = 256 if half >= 256 else 1
    chunk = half // nchunks
    for c in prange(nchunks):
        region_top = np.empty(n, np.int64)
        head = np.empty(n, np.int64)
        last = np.empty(n, np.int64)
        nxt = np.empty(n, np.int64)
        uf = np.empty(n, np.int64)
        lo = c * chunk
        hi = lo + chunk
        for j in range(lo, hi):
            if j == half - 1:
                continue
            mask = 2 * j + 1
            total, valid = _certify_one(W, parent, order, wpar, mask,
                                        region_top, head, last, nxt, uf)
            combined[j] = total
            ok[j] = valid
    return combined, ok
