"""Tour of the ratio itself: evaluate one coloring, then maximize and
average over all of them, on the instance families with known answers.

Run:  python demos/01_ratios_and_extremes.py
"""

import numpy as np

import mstratio as mr

# ── a single coloring ────────────────────────────────────────────────

square = mr.PointSet([[0, 0], [1, 0], [1, 1], [0, 1]])
g = mr.distance_graph(square)

diagonal = mr.Coloring(4, [0, 2])
ev = mr.mst_ratio(g, diagonal)
print("unit square, diagonal pair vs diagonal pair:")
print(f"  red MST {ev.red_weight:.6f} + blue MST {ev.blue_weight:.6f} "
      f"over base {ev.base_weight:.6f} -> ratio {ev.ratio:.6f}")
print(f"  (2*sqrt(2)/3 = {2 * np.sqrt(2) / 3:.6f})")

# ── exhaustive maximum and average ───────────────────────────────────

res = mr.max_ratio_exact(g)
print(f"\nexhaustive max over {res.colorings_examined} proper colorings: "
      f"{res.best.ratio:.6f} at {res.best.coloring.to_string()}")
print(f"average over all colorings: {mr.average_ratio_exact(g):.6f}")

# ── the stretched zigzag chain ───────────────────────────────────────
# Its best coloring beats the alternating one by a factor approaching 1.5.

print("\ntriangular chains (delta = 1e-3):")
for k in (2, 3, 4, 5):
    chain = mr.distance_graph(mr.gen_triangular_chain(k, 1e-3))
    best = mr.max_ratio_exact(chain).best
    _, bip = mr.bipartite_coloring(chain)
    print(f"  k={k}: max value {best.ratio * best.base_weight:7.4f} (target {3 * k - 2}), "
          f"bipartite value {bip.ratio * bip.base_weight:7.4f} (target {2 * k - 1}), "
          f"max/bipartite ratio {best.ratio / bip.ratio:.4f}")

# ── the metric family that almost reaches the 3 - 4/(n-1) ceiling ────

print("\nextremal metric family (eps = 1e-4):")
for k in (2, 4, 6):
    n = 2 * k + 1
    gext = mr.gen_metric_extremal(k, 1e-4)
    gamma = mr.max_ratio_exact(gext).best.ratio
    print(f"  k={k} (n={n}): gamma = {gamma:.6f}, ceiling = "
          f"{mr.metric_max_ratio_bound(n):.6f}")

# ── point sets with average below 1 and far above it ─────────────────

pent = mr.distance_graph(mr.gen_pentagon_core(12, 1e-12))
tripod = mr.distance_graph(mr.gen_tripod(6, 1e-4))
print(f"\npentagon with a tight core (n=12): average = "
      f"{mr.average_ratio_exact(pent):.6f}  (< 1)")
print(f"three clusters plus origin (m=6, n=19): average = "
      f"{mr.average_ratio_exact(tripod):.6f}  (approaches (3+2*sqrt(3))/3 = "
      f"{(3 + 2 * np.sqrt(3)) / 3:.6f})")
