"""The flat (3,6) model: three planeon flavors, mobile charges, flux loops.

Triangular vertices 3-color; each planeon flavor lives on one two-color
hexagonal sublattice.  Charges sit at triangle corners, carry a color, and
hop by rhombus moves that preserve it.  With hexagon detectors on, a
zigzag membrane of X links shows its boundary as two stacks of hexagon
loops.
"""

from ycube import (
    MobilityQuery,
    SchlafliPair,
    build_code,
    build_periodic_flat,
    classify_excitations,
    hexagonal_sublattice,
    reachable,
    stack,
    triangular_color,
)
from ycube.operators import flat36_ops

L = 6
t = build_periodic_flat(SchlafliPair(3, 6), L)
code = build_code(stack(t, 3), include_hexagon=True)
ops = flat36_ops(code.lattice)
print(f"(3,6) torus L={L}, 3 layers, hexagons on: n={code.n_qubits}, terms={len(code.terms)}")

# color census
for c in range(3):
    cls = [v for v in range(t.n_vertices) if triangular_color(t, v) == c]
    sub = hexagonal_sublattice(t, c)
    print(f"  color {c}: {len(cls)} vertices; flavor-{c} sublattice has {len(sub)} sites")

# a triangle of Z makes three charges, one of each color, at the corners
tri = ops.z_triangle(0, 1)
charges = classify_excitations(code, code.syndrome(tri))
corners = sorted(p.location for p in charges)
colors = sorted(triangular_color(t, v) for v, _ in corners)
print(f"\nz_triangle(0,1): {len(charges)} charges at {corners}, colors {colors}")

# the rhombus move carries a charge two steps without changing its color
hop = ops.charge_move_inplane(0, 0, 1)
tgt = ops.charge_target(0, 0)
print(
    f"rhombus hop from vertex 0: weight {hop.weight()}, lands on vertex {tgt}, "
    f"color {triangular_color(t, 0)} -> {triangular_color(t, tgt)}"
)

# full orbit of one charge (both type-1 variants at a site): its whole
# color class in-plane, every layer vertically, via rhombus moves
rhombi = [
    ops.charge_move_inplane(v, s, layer)
    for v in range(t.n_vertices)
    for s in range(6)
    for layer in range(code.lattice.layers)
]
charge = frozenset(
    tm.id
    for tm in code.terms
    if tm.kind == "vertex_type1_x" and tm.location == (0, 1)
)
rep = reachable(MobilityQuery(code, charge, move_alphabet="z", extra_moves=rhombi))
cls0 = {v for v in range(t.n_vertices) if triangular_color(t, v) == triangular_color(t, 0)}
expected = len(cls0) * code.lattice.layers
print(f"charge orbit: {len(rep.reachable_positions)} positions (= color class x layers = {expected})")

# flux membrane: X on a stack of zigzag links; only the hexagons at the two
# chain ends see it
mem = ops.x_flux_membrane(0, 0, 4)
ends = sorted(ops.flux_boundary_vertices(0, 0, 4))
syn = code.syndrome(mem)
print(f"\nflux membrane (length 4): weight {mem.weight()}, boundary hexagons at vertices {ends}")
print(f"  excites {len(syn)} hexagon terms over {code.lattice.layers} layers")
