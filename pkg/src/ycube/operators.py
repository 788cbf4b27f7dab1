"""Constructors for the geometric operators of the layered models.

Everything here returns a PauliString.  Constructors whose contract includes
a residual-excitation count (single-fracton stacks, pruned trees, wedges)
verify the syndrome against the expected set and raise ConstructionError
rather than returning a wrong operator; the check is cheap because syndromes
compose linearly under operator products.

Boundary conventions: "sending a particle to infinity" means terminating a
support on boundary vertices, where no term can see it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .code import StabilizerCode
from .errors import ConstructionError, UnsupportedLatticeError
from .lattice import Lattice3D
from .pauli import PauliString, product, x_on, z_on
from .tess import (
    FractalTree,
    Path,
    Region,
    Tessellation,
    fractal_tree,
    geodesic_ray,
    link_cycle,
    tree_branch,
    wedge_region,
)


@dataclass(frozen=True)
class LayerInterface:
    """A vertical interval (gap between layers `interval` and `interval+1`).

    `side` records which side of an in-plane structure the vertical edges sit
    on; use at_layer() to resolve layer+side into the interval.
    """

    interval: int
    side: str = "top"

    def __post_init__(self):
        if self.side not in ("top", "bottom"):
            raise ValueError("side must be 'top' or 'bottom'")

    @classmethod
    def at_layer(cls, layer: int, side: str, layers: int) -> "LayerInterface":
        interval = layer % layers if side == "top" else (layer - 1) % layers
        return cls(interval, side)


def _iface(x) -> LayerInterface:
    return x if isinstance(x, LayerInterface) else LayerInterface(int(x))


def _vertical_xs(l: Lattice3D, vertices: Iterable[int], interval: int) -> PauliString:
    return x_on(l.n_qubits, [l.vertical_id(v, interval) for v in set(vertices)])


def _expect_syndrome(code: StabilizerCode, op: PauliString, expected: Set[int], what: str) -> PauliString:
    got = set(code.syndrome(op).excited)
    if got != expected:
        locs = sorted(code.terms[t].location for t in got ^ expected)
        raise ConstructionError(f"{what}: unexpected residual excitations", offending=locs)
    return op


def _expect_count(code: StabilizerCode, op: PauliString, count: int, what: str) -> PauliString:
    got = code.syndrome(op).excited
    if len(got) != count:
        locs = sorted(code.terms[t].location for t in got)
        raise ConstructionError(
            f"{what}: expected {count} excitations, found {len(got)}", offending=locs
        )
    return op


# ---------------------------------------------------------------------------
# q = 4: truncated geodesics


def x_truncated_geodesic(code: StabilizerCode, ray: Path, layer: int) -> PauliString:
    """X on the vertical edge at every ray vertex.  A boundary-terminated ray
    leaves the two prisms tucked behind its start; a closed torus geodesic
    leaves nothing; a bare vertex (zero-length ray) makes the full q-pattern."""
    l = code.lattice
    if l.base.q != 4:
        raise UnsupportedLatticeError("truncated geodesics are a q=4 construction")
    if len(ray.vertices) > 1 and not ray.closed:
        if l.base.interior_vertex[ray.vertices[-1]]:
            raise ConstructionError("ray must terminate on the patch boundary")
    return _vertical_xs(l, ray.vertices, _iface(layer).interval)


def x_stacked_truncated_geodesics(
    code: StabilizerCode, rays: Sequence[Path], layer: int
) -> PauliString:
    op = product(
        [x_truncated_geodesic(code, r, layer) for r in rays], n=code.n_qubits
    )
    expected = {0: 0, 1: 2}.get(len(rays), 1)
    return _expect_count(code, op, expected, "stacked truncated geodesics")


def find_stacked_geodesics(
    code: StabilizerCode, face: int, layer: int
) -> List[Path]:
    """Greedy ray stack leaving a single fracton at (face, layer).

    Walks the partner fracton face-by-face to a non-interior face; each hop is
    one boundary-terminated ray whose two behind-prisms straddle the hop edge.
    """
    t = code.lattice.base
    if t.q != 4:
        raise UnsupportedLatticeError("geodesic stacks are a q=4 construction")
    if not t.faces[face].interior:
        raise ConstructionError("target face must carry a prism term")
    hops = _face_escape_path(t, face)
    rays = []
    for edge in hops:
        u = t.edges[edge][0]
        start_slot = (t.slot_of(u, edge) + 2) % 4
        ray = geodesic_ray(t, u, start_slot)
        rays.append(ray)
    return rays


def _face_escape_path(t: Tessellation, face: int) -> List[int]:
    """Edges of a shortest face path from `face` to any non-interior face."""
    prev: Dict[int, Tuple[int, int]] = {face: (-1, -1)}
    queue = [face]
    head = 0
    goal = -1
    while head < len(queue):
        f = queue[head]
        head += 1
        if not t.faces[f].interior:
            goal = f
            break
        for e in t.faces[f].edges:
            for g in t.edge_faces(e):
                if g not in prev:
                    prev[g] = (f, e)
                    queue.append(g)
    if goal < 0:
        raise ConstructionError("no escape path to the boundary exists")
    hops = []
    f = goal
    while f != face:
        pf, pe = prev[f]
        hops.append(pe)
        f = pf
    hops.reverse()
    return hops


# ---------------------------------------------------------------------------
# fractal-tree operators (q >= 6; q = 4 degenerates to geodesics)


def _check_leaves_on_boundary(t: Tessellation, tree: FractalTree):
    for v in tree.leaves():
        if t.interior_vertex[v]:
            raise ConstructionError(
                "tree is truncated in the bulk; grow it to the boundary first"
            )


def x_fractal_tree_logical(code: StabilizerCode, tree: FractalTree, iface) -> PauliString:
    """T_X: X on one out-of-plane side of every tree vertex.  Logical."""
    l = code.lattice
    iface = _iface(iface)
    _check_leaves_on_boundary(l.base, tree)
    op = _vertical_xs(l, tree.vertices, iface.interval)
    return _expect_syndrome(code, op, set(), "fractal-tree logical")


def _prune(tree: FractalTree, prune_vertex: int) -> Tuple[Set[int], List[int]]:
    """Vertices kept after deleting prune_vertex and everything beyond it,
    plus the cut edges joining the kept part to the removed part."""
    if prune_vertex == tree.root:
        raise ConstructionError("pruning at the root removes the whole tree")
    if prune_vertex not in tree.vertices:
        raise ValueError("prune vertex is not on the tree")
    kept: Set[int] = set()
    stack = [tree.root]
    while stack:
        v = stack.pop()
        if v in kept or v == prune_vertex:
            continue
        kept.add(v)
        for _, w in tree.adj.get(v, ()):
            if w not in kept and w != prune_vertex:
                stack.append(w)
    cut = [
        e
        for v in kept
        for e, w in tree.adj.get(v, ())
        if w not in kept
    ]
    return kept, cut


def x_pruned_tree(
    code: StabilizerCode, tree: FractalTree, prune_vertex: int, iface
) -> PauliString:
    """Fracton pair: the tree logical minus the subtree hanging at prune_vertex.

    The residual excitations are exactly the interior prisms beside the cut
    edge (two in the bulk, fewer when the cut grazes the boundary)."""
    l = code.lattice
    iface = _iface(iface)
    _check_leaves_on_boundary(l.base, tree)
    kept, cut = _prune(tree, prune_vertex)
    op = _vertical_xs(l, kept, iface.interval)
    expected = set()
    for e in cut:
        for f in l.base.edge_faces(e):
            if l.base.faces[f].interior:
                expected ^= {_prism_term_id(code, f, iface.interval)}
    return _expect_syndrome(code, op, expected, "pruned tree")


def _prism_term_id(code: StabilizerCode, face: int, interval: int) -> int:
    key = (face, interval)
    cache = getattr(code, "_prism_ids", None)
    if cache is None:
        cache = {
            t.location: t.id for t in code.terms if t.kind == "prism_z"
        }
        code._prism_ids = cache
    return cache[key]


def x_pruned_tree_series(
    code: StabilizerCode, items: Sequence[Tuple[FractalTree, int]], iface
) -> PauliString:
    op = product(
        [x_pruned_tree(code, tree, pv, iface) for tree, pv in items], n=code.n_qubits
    )
    expected = {0: 0, 1: 2}.get(len(items), 1)
    return _expect_count(code, op, expected, "pruned-tree series")


def find_pruned_tree_series(
    code: StabilizerCode, face: int, iface
) -> List[Tuple[FractalTree, int]]:
    """Chain of pruned trees leaving one fracton at (face, interval): hop the
    partner across a face path to a non-interior face; each hop's cut edge is
    the shared edge, realized by a tree rooted at one endpoint pruned at the
    other."""
    t = code.lattice.base
    if not t.faces[face].interior:
        raise ConstructionError("target face must carry a prism term")
    items = []
    for edge in _face_escape_path(t, face):
        root, other = t.edges[edge]
        parity = t.slot_of(root, edge) % 2
        tree = fractal_tree(t, root, parity)
        items.append((tree, other))
    return items


# ---------------------------------------------------------------------------
# wedge membranes (even p)


def _even_p_only(l: Lattice3D, what: str):
    if l.base.p % 2 != 0:
        raise UnsupportedLatticeError(
            f"{what} needs even p: with odd p every interior prism meets the"
            " membrane in an odd number of vertical edges"
        )


def build_wedge(t: Tessellation, root: int, parity: int, slot: int) -> Region:
    """Wedge between the two extremal tree branches leaving the root at `slot`
    (counterclockwise wall) and at slot-2 (clockwise wall); the swept side
    contains every other branch.  For q=4 this is a geodesic half-plane."""
    slot %= t.q
    if slot % 2 != parity:
        raise ValueError("slot must belong to the tree's parity class")
    tree = fractal_tree(t, root, parity)
    branch_a = tree_branch(t, tree, slot, "ccw")
    branch_b = tree_branch(t, tree, (slot - 2) % t.q, "cw")
    return wedge_region(t, tree, branch_a, branch_b)


def x_wedge_membrane(code: StabilizerCode, region: Region, iface) -> PauliString:
    """Logical membrane: X on all vertical edges of a wedge region."""
    l = code.lattice
    _even_p_only(l, "a wedge membrane")
    iface = _iface(iface)
    op = _vertical_xs(l, region.vertices, iface.interval)
    return _expect_syndrome(code, op, set(), "wedge membrane")


def x_wedge_intersection(
    code: StabilizerCode, region_a: Region, region_b: Region, iface
) -> PauliString:
    """Membrane on the overlap of two wedges: a single fracton at the corner
    (or the full logical again if the wedges coincide)."""
    l = code.lattice
    _even_p_only(l, "a wedge intersection")
    iface = _iface(iface)
    overlap = region_a.vertices & region_b.vertices
    op = _vertical_xs(l, overlap, iface.interval)
    expected = 0 if region_a.vertices == region_b.vertices else 1
    return _expect_count(code, op, expected, "wedge intersection")


# ---------------------------------------------------------------------------
# Z strings


def z_string(l: Lattice3D, kind: str, path, layer: Optional[int]) -> PauliString:
    """Z strings: `vertical` at one vertex (layer=None means every interval,
    the winding logical), `geodesic`/`tree_path` on the in-plane edges of a
    precomputed path at one layer."""
    if kind == "vertical":
        v = int(path)
        intervals = range(l.layers) if layer is None else [layer]
        return z_on(l.n_qubits, [l.vertical_id(v, i) for i in intervals])
    if kind in ("geodesic", "tree_path"):
        edges = path.edges if isinstance(path, Path) else list(path)
        if layer is None:
            raise ValueError("in-plane strings need a layer")
        return z_on(l.n_qubits, [l.inplane_id(e, layer) for e in edges])
    raise ValueError(f"unknown z_string kind {kind!r}")


# ---------------------------------------------------------------------------
# flat (3,6) named operators


def _common_neighbors(t: Tessellation, a: int, b: int) -> List[int]:
    return sorted(set(t.rot_nbrs[a]) & set(t.rot_nbrs[b]))


class Flat36Ops:
    """Named constructors specific to the flat (3,6) lattice: triangular
    charges, their hexagon loops and rhombus hops, zigzag flux membranes,
    and planeon moves."""

    def __init__(self, l: Lattice3D):
        if (l.base.p, l.base.q) != (3, 6):
            raise UnsupportedLatticeError("these operators live on (3,6) only")
        self.l = l
        self.t = l.base

    def z_hexagon(self, vertex: int, layer: int) -> PauliString:
        _, ring = link_cycle(self.t, vertex)
        return z_on(self.l.n_qubits, [self.l.inplane_id(e, layer) for e in ring])

    def z_triangle(self, face: int, layer: int) -> PauliString:
        es = self.t.faces[face].edges
        return z_on(self.l.n_qubits, [self.l.inplane_id(e, layer) for e in es])

    def charge_move_inplane(self, vertex: int, slot: int, layer: int) -> PauliString:
        """Rhombus of four Z's hopping a charge from `vertex` across the edge
        between its slot and slot+1 neighbours (a color-preserving step)."""
        t = self.t
        a = t.rot_nbrs[vertex][slot % 6]
        b = t.rot_nbrs[vertex][(slot + 1) % 6]
        far = [w for w in _common_neighbors(t, a, b) if w != vertex]
        if len(far) != 1:
            raise ConstructionError(f"no unique far vertex across slots {slot},{slot+1}")
        w = far[0]
        edges = [
            t.edge_at(vertex, slot % 6),
            t.edge_at(vertex, (slot + 1) % 6),
            t.edge_at(a, t.rot_nbrs[a].index(w)),
            t.edge_at(b, t.rot_nbrs[b].index(w)),
        ]
        return z_on(self.l.n_qubits, [self.l.inplane_id(e, layer) for e in edges])

    def charge_target(self, vertex: int, slot: int) -> int:
        t = self.t
        a = t.rot_nbrs[vertex][slot % 6]
        b = t.rot_nbrs[vertex][(slot + 1) % 6]
        return [w for w in _common_neighbors(t, a, b) if w != vertex][0]

    def charge_move_vertical(self, vertex: int, interval: int) -> PauliString:
        return z_on(self.l.n_qubits, [self.l.vertical_id(vertex, interval)])

    def zigzag_links(self, vertex: int, slot: int, length: int) -> List[int]:
        """In-plane edges of a zigzag walk alternating between two adjacent
        directions; consecutive links share a hexagon detector, so only the
        two chain-end detectors survive mod 2."""
        if length < 1:
            raise ValueError("zigzag length must be >= 1")
        t = self.t
        links = []
        v, s = vertex, slot % 6
        for i in range(length):
            e = t.edge_at(v, s)
            w = t.rot_nbrs[v][s]
            links.append(e)
            if i + 1 == length:
                break
            back = t.slot_of(w, e)
            s = (back - 2) % 6 if i % 2 == 0 else (back + 2) % 6
            v = w
        return links

    def x_flux_membrane(self, vertex: int, slot: int, length: int) -> PauliString:
        """Out-of-plane stack of X on every zigzag link, over all layers.
        Every prism meets the stack twice per link, so with hexagon terms on,
        the syndrome is the two vertical loops of hexagons at the chain ends."""
        links = self.zigzag_links(vertex, slot, length)
        ids = [
            self.l.inplane_id(e, layer)
            for e in links
            for layer in range(self.l.layers)
        ]
        return x_on(self.l.n_qubits, ids)

    def flux_boundary_vertices(self, vertex: int, slot: int, length: int) -> Set[int]:
        """Hexagon centres with odd zigzag overlap (the expected loop ends)."""
        odd: Set[int] = set()
        for e in self.zigzag_links(vertex, slot, length):
            a, b = self.t.edges[e]
            for w in _common_neighbors(self.t, a, b):
                odd ^= {w}
        return odd

    def x_planeon_move(self, edge: int, layer: int) -> PauliString:
        return x_on(self.l.n_qubits, [self.l.inplane_id(edge, layer)])


def flat36_ops(l: Lattice3D) -> Flat36Ops:
    return Flat36Ops(l)
