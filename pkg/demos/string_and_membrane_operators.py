"""Build the named X and Z operators on open hyperbolic patches.

Each constructor checks its own residual excitation pattern and raises
ConstructionError rather than hand back something with the wrong syndrome.
"""

from ycube import build_patch, build_code, stack, SchlafliPair
from ycube import fractal_tree, geodesic_ray, in_stabilizer_group
from ycube.operators import (
    build_wedge,
    find_pruned_tree_series,
    find_stacked_geodesics,
    x_fractal_tree_logical,
    x_pruned_tree,
    x_pruned_tree_series,
    x_stacked_truncated_geodesics,
    x_truncated_geodesic,
    x_wedge_intersection,
    x_wedge_membrane,
    z_string,
)


def show(name, code, op):
    syn = code.syndrome(op)
    def tag(t):
        term = code.terms[t]
        var = "" if term.variant is None else f"#{term.variant}"
        return f"{term.kind}{var}@{term.location}"

    hits = sorted(tag(t) for t in syn.excited)
    print(f"  {name:<26} weight {op.weight():>3}   excites {len(syn)}: {hits}")


# ---- q=4: geodesics carry everything --------------------------------------
print("pentagonal patch (5,4), 2 coronas, 3 layers")
code = build_code(stack(build_patch(SchlafliPair(5, 4), 2), 3))
t = code.lattice.base

ray = geodesic_ray(t, 0, 0)
show("truncated geodesic", code, x_truncated_geodesic(code, ray, 1))

rays = find_stacked_geodesics(code, 0, 1)
show(f"stack of {len(rays)} geodesics", code, x_stacked_truncated_geodesics(code, rays, 1))

print("  (wedge membranes refuse odd p: every interior prism would meet")
print("   the membrane an odd number of times)")

print()

# ---- q=6: fractal trees take over -----------------------------------------
print("square patch (4,6), 2 coronas, 3 layers")
code6 = build_code(stack(build_patch(SchlafliPair(4, 6), 2), 3))
t6 = code6.lattice.base

tree = fractal_tree(t6, 0, 0)
logical = x_fractal_tree_logical(code6, tree, 1)
show(f"tree logical ({len(tree.vertices)} sites)", code6, logical)
print(f"    in stabilizer group: {in_stabilizer_group(code6, logical)}")

branch_tip = next(v for v in tree.vertices if v != 0 and t6.interior_vertex[v])
show("pruned tree", code6, x_pruned_tree(code6, tree, branch_tip, 1))

items = find_pruned_tree_series(code6, 0, 1)
show(f"series of {len(items)} pruned trees", code6, x_pruned_tree_series(code6, items, 1))

# a wedge between two extremal tree branches is a logical membrane; a
# transverse pair (opposite parity, adjacent lead slots) overlaps in a
# sector whose membrane leaves a single fracton at the shared corner
wa = build_wedge(t6, 0, 0, 0)
wb = build_wedge(t6, 0, 1, 1)
show("wedge membrane", code6, x_wedge_membrane(code6, wa, 1))
show("wedge intersection", code6, x_wedge_intersection(code6, wa, wb, 1))

print()

# ---- Z strings make the composite (vertex) excitations --------------------
print("Z strings on the pentagonal patch")
show("vertical Z, one interval", code, z_string(code.lattice, "vertical", 0, 1))
winding = z_string(code.lattice, "vertical", 0, None)
show("vertical Z, full winding", code, winding)
short = geodesic_ray(t, 0, 0, max_steps=1)
show("in-plane Z, one link", code, z_string(code.lattice, "geodesic", short, 1))
