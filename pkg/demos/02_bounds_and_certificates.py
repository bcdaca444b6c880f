"""Upper and lower bounds with certificates you can inspect.

The two-tree construction proves mu <= 3 - 4/(n-1) on metric instances;
the shortest-edge split proves mu >= (n-2)/(n-1); the sorted-weight formula
floors the average.  This script builds all three on concrete instances.

Run:  python demos/02_bounds_and_certificates.py
"""

import numpy as np

import mstratio as mr

g = mr.random_metric_graph(10, seed=8)
n = g.n

# ── constructive upper bound for one coloring ────────────────────────

c = mr.Coloring(n, [0, 2, 3, 7, 8])
report = mr.certify_upper_bound(g, c)
print("certificate for one coloring of a random metric instance (n=10):")
print(f"  heaviest internal path {report.pstar_path} of weight {report.pstar_weight:.4f}")
print(f"  leaf-edge weight {report.leaf_weight:.4f}, MST weight {report.tree.total_weight:.4f}")
print(f"  |R_Q| + |B_Q| = {report.combined_weight:.4f} <= bound {report.bound:.4f}")
print(f"  red tree edges: {[(i, j) for i, j, _ in report.red_tree.edges]}")
print(f"  blue tree edges: {[(i, j) for i, j, _ in report.blue_tree.edges]}")

# ── the same construction over every coloring at once ────────────────

cert = mr.Certifier(g)
combined, ok = cert.certify_all()
combined = combined[:-1]
print(f"\nall {combined.size} proper colorings: constructions valid = {bool(ok[:-1].all())}, "
      f"worst combined/|T| = {np.max(combined) / cert.tree.total_weight:.4f} "
      f"(ceiling {mr.metric_max_ratio_bound(n):.4f})")

gamma = mr.max_ratio_exact(g).best.ratio
print(f"so gamma = {gamma:.4f} stays below {mr.metric_max_ratio_bound(n):.4f}")

# ── cheap colorings with guarantees ──────────────────────────────────

c_approx, ev_approx = mr.approx_coloring(g)
c_bip, ev_bip = mr.bipartite_coloring(g)
print(f"\nshortest-edge split: ratio {ev_approx.ratio:.4f} "
      f">= (n-2)/(n-1) = {mr.average_ratio_floor(n):.4f}; "
      f"3 * {ev_approx.ratio:.4f} = {3 * ev_approx.ratio:.4f} >= gamma")
print(f"bipartite coloring:  ratio {ev_bip.ratio:.4f} (every MST edge colorful)")

# ── the average never falls below the sorted-weight floor ────────────

avg = mr.average_ratio_exact(g)
floor = mr.average_lower_bound(mr.mst(g))
print(f"\naverage ratio {avg:.4f} >= weight floor {floor:.4f} "
      f">= (n-2)/(n-1) = {mr.average_ratio_floor(n):.4f}")
