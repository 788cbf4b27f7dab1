"""Where can an excitation go?  Exhaustive reachability under local moves.

Strict accounting: a move that would create or convert particles at the
patch rim is not free motion, so it is only admitted when it strictly
lowers the excitation count.  What remains is the honest orbit of each
species.
"""

from ycube import (
    MobilityQuery,
    SchlafliPair,
    build_code,
    build_patch,
    geodesic_ray,
    mobility_table,
    reachable,
    stack,
)
from ycube.operators import x_truncated_geodesic, z_string


def survey(code, op, moves, label):
    q = MobilityQuery(code, op, move_alphabet=moves)
    rep = reachable(q)
    parts = sorted({p.ptype for p in rep.initial_particles})
    print(
        f"  {label:<24} species {parts}  "
        f"{len(rep.reachable_states)} states, "
        f"{len(rep.reachable_positions)} distinct positions"
    )
    return rep


print("pentagonal patch (5,4), 2 coronas, 3 layers")
code = build_code(stack(build_patch(SchlafliPair(5, 4), 2), 3))
t = code.lattice.base

# lineon: the composite pair at the ends of an in-plane Z string; it can
# slide along its geodesic (and off the ends) but never leave the line
line = geodesic_ray(t, 0, 0)
survey(code, z_string(code.lattice, "geodesic", line, 1), "z", "lineon pair")

# fracton dipole: the two prisms behind a truncated geodesic; for q=4 the
# pair slides one-dimensionally along the transverse geodesic
ray = geodesic_ray(t, 0, 0)
survey(code, x_truncated_geodesic(code, ray, 1), "x", "fracton dipole")

# a single fracton has nowhere to go at fixed excitation count
fid = next(tm.id for tm in code.terms if tm.kind == "prism_z")
q = MobilityQuery(code, [fid], move_alphabet="x")
print(f"  {'lone fracton':<24} orbit size {len(reachable(q).reachable_states)}")

print("\nqualitative summary per tessellation class")
for row in mobility_table([(5, 4), (4, 6), (6, 4), (3, 6), (4, 4)]):
    p, q = row["pq"]
    print(
        f"  ({p},{q}) {row['curvature']:<11} in-plane particle: "
        f"{row['in_plane_particle']:<8} rides a {row['in_plane_carrier']}"
    )
