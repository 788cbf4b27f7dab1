"""Ground state degeneracy of the layered models on flat tori.

k = n - rank(X checks) - rank(Z checks).  On the triangular torus the
optional hexagon detectors knock the degeneracy down; on the square torus
the count grows linearly with the torus size.
"""

from ycube import SchlafliPair, build_periodic_flat, build_code, gsd_exponent, stack
from ycube import gf2

print(f"{'model':<28} {'n':>5} {'rank_x':>7} {'rank_z':>7} {'k':>4}")

for p, q, L, layers, hexagon in [
    (3, 6, 3, 3, False),
    (3, 6, 3, 3, True),
    (3, 6, 6, 3, True),
    (3, 6, 3, 6, True),
    (4, 4, 3, 3, False),
    (4, 4, 4, 3, False),
    (4, 4, 5, 3, False),
]:
    t = build_periodic_flat(SchlafliPair(p, q), L)
    code = build_code(stack(t, layers), include_hexagon=hexagon)
    rank_x = gf2.rank(code.x_rows())
    rank_z = gf2.rank(code.z_rows())
    k = gsd_exponent(code)
    label = f"({p},{q}) L={L} h={layers}" + (" +hexagon" if hexagon else "")
    print(f"{label:<28} {code.n_qubits:>5} {rank_x:>7} {rank_z:>7} {k:>4}")

print()
print("with hexagons the triangular count is 6 + 2*(height) for heights that")
print("are multiples of 3, and does not grow with the torus size at all")
