"""Why maximizing the ratio is hard: cliques hide inside colorings.

A simple graph becomes a {1, n}-weighted complete graph; good colorings of
the weighted instance decode back into cliques.  A uniform weight shift
then embeds the abstract instance into Euclidean space without moving the
optimum, carrying the hardness into geometry.

Run:  python demos/03_clique_reduction_and_realization.py
"""

import numpy as np

import mstratio as mr

src = mr.random_graph(10, 0.55, seed=14)
print(f"source graph: n={src.n}, {len(src.edges)} edges")

best_clique = mr.max_clique_bruteforce(src)
print(f"maximum clique (brute force): {best_clique} (size {len(best_clique)})")

# ── encode the clique as a coloring, decode it back ──────────────────

ri = mr.reduce_clique(src)
c, value = mr.clique_to_coloring(ri, best_clique)
print(f"\nencoded coloring {c.to_string()} has value {value:.0f}, "
      f"floor(value/n) = {int(value // src.n)}")

decoded = mr.coloring_to_clique(ri, c)
print(f"decoded clique: {decoded} (size {len(decoded)} >= floor/2 + 1)")

# ── the best coloring of the reduced instance bounds the clique size ──

res = mr.max_ratio_exact(ri.reduced)
kstar = res.best.ratio * res.best.base_weight
print(f"\nbest coloring value k* = {kstar:.0f}; "
      f"clique number {len(best_clique)} <= floor(k*/n) + 2 = {int(kstar // src.n) + 2}")

# ── lift to a Euclidean instance ─────────────────────────────────────

lift = mr.lift_and_realize(ri.reduced)
print(f"\nuniform shift N = {lift.shift:.4f} makes the instance realizable in "
      f"R^{lift.embedding.dim}")
print(f"max relative distance error of the embedding: "
      f"{lift.max_relative_distance_error:.2e}")
print(f"value-argmax colorings unchanged by the lift: "
      f"{mr.lift_preserves_argmax(ri.reduced, lift.lifted)}")

v0 = mr.coloring_value(ri.reduced, c)
v1 = mr.coloring_value(lift.lifted, c)
print(f"value shift for the encoded coloring: {v1 - v0:.4f} "
      f"= (n-2) * N = {(src.n - 2) * lift.shift:.4f}")
