"""Grow disk-like patches of hyperbolic tessellations and inspect them.

Counts explode with the generation number for hyperbolic pairs; the flat
pairs grow quadratically.  Coordinates live in the Poincare disk (or the
plane for flat pairs), so we can also check edge lengths are uniform.
"""

import math

from ycube import SchlafliPair, build_patch, canonical_signature


def hdist(a, b):
    # hyperbolic distance between two points of the unit disk
    num = abs(a - b)
    den = abs(1 - a.conjugate() * b)
    return 2 * math.atanh(num / den)


for p, q in [(5, 4), (4, 6), (6, 4), (3, 6), (4, 4)]:
    pq = SchlafliPair(p, q)
    print(f"\n{{{p},{q}}}  ({'flat' if pq.is_flat else 'hyperbolic'})")
    for gen in range(3):
        t = build_patch(pq, gen)
        interior = sum(t.interior_vertex)
        print(
            f"  gen {gen}: {t.n_vertices:4d} vertices "
            f"({interior:3d} interior), {t.n_edges:4d} edges, "
            f"{t.n_faces:3d} faces"
        )

# every edge of a patch has the same length in the appropriate metric
t = build_patch(SchlafliPair(5, 4), 2)
lengths = sorted(hdist(t.coords[a], t.coords[b]) for a, b in t.edges)
print(f"\n(5,4) edge lengths: min {lengths[0]:.12f} max {lengths[-1]:.12f}")
print(f"expected arccosh(golden ratio) = {math.acosh((1 + 5 ** 0.5) / 2):.12f}")

# congruent patches built in different orders serialize identically
a = canonical_signature(build_patch(SchlafliPair(4, 6), 2))
b = canonical_signature(build_patch(SchlafliPair(4, 6), 2, traversal="reversed"))
print(f"\ncanonical signatures agree across build orders: {a == b}")
