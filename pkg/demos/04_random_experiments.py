"""Random point clouds: the averaged asymptotics and the crossing counter.

Run:  python demos/04_random_experiments.py
(takes about a minute: it runs a reduced sweep)
"""

import numpy as np

import mstratio as mr

# ── the limit the average ratio chases ───────────────────────────────

print("binomially weighted split-size sum vs 2^(1/d):")
for d in (1, 2, 3):
    for n in (100, 10_000):
        v = mr.bernstein_average_limit(n, d)
        print(f"  d={d}, n={n:>6}: {v:.6f}   (limit {2 ** (1 / d):.6f})")

# ── the EMST growth constant ─────────────────────────────────────────

beta, err = mr.estimate_beta(10_000, 2, trials=5, seed=0)
print(f"\n|EMST|/sqrt(n) for uniform clouds: {beta:.4f} +- {err:.4f} "
      f"(known bracket [{mr.CONSTANTS.beta2_lower}, {mr.CONSTANTS.beta2_upper}])")

# ── a reduced version of the three-curve experiment ──────────────────

records = mr.run_sweep(5, 12, trials=40, d=2, seed=0)
print("\nn   mean_max   mean_avg   mean_bipartite")
for r in records:
    print(f"{r.n:<3} {r.mean_max:.4f}     {r.mean_avg:.4f}     {r.mean_bipartite:.4f}")
print("(write a full CSV with:  mstratio sweep --n-min 5 --n-max 20 --trials 500)")

# ── how often does the maximum beat the bipartite coloring, and by how much ──

rows = mr.scatter_pairs(200, (5, 12), "max_vs_bipartite", seed=1)
summary = mr.scatter_summary(rows, "max_vs_bipartite")
print(f"\nover {summary['trials']} clouds: max > 1.1 * bipartite in "
      f"{summary['frac_max_above_1.1x_bipartite']:.1%} of cases, "
      f"> 1.3 * bipartite in {summary['frac_max_above_1.3x_bipartite']:.1%}")

# ── chromatic crossings ──────────────────────────────────────────────

rng = np.random.default_rng(3)
cloud = mr.PointSet(rng.random((9, 2)))
c, crossings = mr.max_crossing_exact(cloud)
print(f"\nrandom 9-point cloud: maximum red-blue MST crossings = {crossings} "
      f"at coloring {c.to_string()}")
