"""Regular {p,q} tessellations as combinatorial maps with disk coordinates.

Conventions used throughout the package:

* Every vertex carries a rotation: the cyclic counterclockwise order of its
  incident edges.  For an interior vertex the rotation is a full cycle of
  length q; for a boundary vertex of an open patch it is a contiguous arc.
* Slot i at a vertex means position i in that rotation.  The face sitting in
  the corner between slots i and i+1 is ``corner_face[v][i]`` (-1 if absent).
* Face boundaries are stored counterclockwise, so a face is on the left of
  each of its darts.  ``faces[f].vertices[k]`` and ``faces[f].edges[k]`` are
  aligned: edge k joins vertex k to vertex k+1 (cyclically).

Open patches are grown face by face from a central seed polygon.  Growth is
purely combinatorial (dart bookkeeping with closure when a vertex reaches q
faces); floating-point coordinates are produced alongside by reflecting the
neighbouring polygon across the shared edge, but they are never consulted for
identification.  Generation 0 is the seed face; generation n consists of every
face sharing at least one vertex with generation n-1.

Periodic quotients exist for the two flat pairs only: the square torus (4,4)
and the triangular torus (3,6), both on an L x L fundamental domain (L >= 2).
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .errors import (
    BudgetExceededError,
    ConstructionError,
    SphericalPairError,
    UnsupportedLatticeError,
    YcubeError,
)

DEFAULT_VERTEX_BUDGET = 20000
VERTEX_BUDGET_ENV = "YCUBE_VERTEX_BUDGET"


def vertex_budget() -> int:
    raw = os.environ.get(VERTEX_BUDGET_ENV)
    if raw is None:
        return DEFAULT_VERTEX_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise YcubeError(f"{VERTEX_BUDGET_ENV} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise YcubeError(f"{VERTEX_BUDGET_ENV} must be positive")
    return value


@dataclass(frozen=True)
class SchlafliPair:
    """A {p,q} pair: p-gonal faces, q of them around every interior vertex.

    q must be even (the models here need alternating slot classes) and the
    pair must be flat or hyperbolic; spherical pairs are rejected.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p < 3:
            raise ValueError("p must be at least 3")
        if self.q < 4:
            raise ValueError("q must be at least 4")
        if self.q % 2 != 0:
            raise ValueError("q must be even")
        if self.curvature_sign() < 0:
            raise SphericalPairError(f"{{{self.p},{self.q}}} is spherical")

    def curvature_sign(self) -> int:
        # sign of 1/2 - 1/p - 1/q (scaled by 2pq): + hyperbolic, 0 flat, - spherical
        lhs = self.q * self.p - 2 * self.q - 2 * self.p
        return (lhs > 0) - (lhs < 0)

    @property
    def hyperbolic(self) -> bool:
        return self.curvature_sign() > 0

    def kind(self) -> str:
        return "hyperbolic" if self.hyperbolic else "flat"

    @property
    def is_flat(self) -> bool:
        return self.curvature_sign() == 0


@dataclass
class Face:
    id: int
    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]
    interior: bool
    generation: int


@dataclass
class Tessellation:
    pq: SchlafliPair
    coords: List[complex]
    rot_edges: List[List[int]]          # per vertex, CCW edge ids
    rot_nbrs: List[List[int]]           # per vertex, CCW neighbour ids
    corner_face: List[List[int]]        # face in corner (slot i, slot i+1), -1 if none
    edges: List[Tuple[int, int]]
    faces: List[Face]
    interior_vertex: List[bool]
    periodic: bool = False
    L: Optional[int] = None
    generations: Optional[int] = None

    # ---- derived indexes -------------------------------------------------
    def __post_init__(self):
        self._slot: List[Dict[int, int]] = [
            {e: i for i, e in enumerate(rot)} for rot in self.rot_edges
        ]
        self._edge_faces: List[Tuple[int, ...]] = [() for _ in self.edges]
        per_edge: List[List[int]] = [[] for _ in self.edges]
        for f in self.faces:
            for e in f.edges:
                per_edge[e].append(f.id)
        self._edge_faces = [tuple(fs) for fs in per_edge]

    @property
    def p(self) -> int:
        return self.pq.p

    @property
    def q(self) -> int:
        return self.pq.q

    @property
    def n_vertices(self) -> int:
        return len(self.coords)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def degree(self, v: int) -> int:
        return len(self.rot_edges[v])

    def slot_of(self, v: int, edge: int) -> int:
        return self._slot[v][edge]

    def neighbor(self, v: int, slot: int) -> int:
        return self.rot_nbrs[v][slot]

    def edge_at(self, v: int, slot: int) -> int:
        return self.rot_edges[v][slot]

    def edge_faces(self, e: int) -> Tuple[int, ...]:
        """Faces on the two sides of edge e (one entry on a patch boundary)."""
        return self._edge_faces[e]

    def faces_at_vertex(self, v: int) -> List[int]:
        return [f for f in self.corner_face[v] if f >= 0]

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        if v == a:
            return b
        if v == b:
            return a
        raise ValueError(f"vertex {v} not on edge {e}")

    def interior_face(self, f: int) -> bool:
        return self.faces[f].interior

    def counts(self) -> Tuple[int, int, int]:
        return self.n_vertices, self.n_edges, self.n_faces


# ---------------------------------------------------------------------------
# hyperbolic / euclidean reflections for the coordinate channel


def _reflect_factory(a: complex, b: complex, hyperbolic: bool):
    """Reflection of the plane fixing the (geodesic) line through a and b."""
    if hyperbolic:
        # geodesics are diameters or circles orthogonal to the unit circle
        det = a.real * b.imag - a.imag * b.real
        if abs(det) < 1e-14:
            # diameter through the origin
            theta = cmath.phase(b - a)
            rot = cmath.exp(2j * theta)
            return lambda z: rot * z.conjugate()
        # solve for the orthogonal circle's centre c:
        #   2 Re(a conj(c)) = |a|^2 + 1,  2 Re(b conj(c)) = |b|^2 + 1
        ra = (abs(a) ** 2 + 1) / 2.0
        rb = (abs(b) ** 2 + 1) / 2.0
        cx = (ra * b.imag - rb * a.imag) / det
        cy = (a.real * rb - b.real * ra) / det
        c = complex(cx, cy)
        r2 = abs(c) ** 2 - 1.0
        return lambda z: c + r2 / (z - c).conjugate()
    # euclidean mirror across the line through a, b
    direction = (b - a) / abs(b - a)
    rot = direction * direction
    return lambda z: a + rot * (z - a).conjugate()


def _seed_circumradius(pq: SchlafliPair) -> float:
    if pq.is_flat:
        # unit-ish edge length, purely cosmetic
        return 0.35 / (2 * math.sin(math.pi / pq.p))
    # hyperbolic distance centre->vertex d: cosh d = cot(pi/p) cot(pi/q)
    coshd = (1 / math.tan(math.pi / pq.p)) * (1 / math.tan(math.pi / pq.q))
    return math.sqrt((coshd - 1.0) / (coshd + 1.0))  # tanh(d/2)


# ---------------------------------------------------------------------------
# patch growth


class _PatchBuilder:
    """Grows a simply connected {p,q} patch by completing boundary vertices.

    Darts come in twin pairs (edge e owns darts 2e and 2e+1); dhead[d] is the
    vertex a dart points at and tail(d) == dhead[d ^ 1].  arcs[v] is the CCW
    rotation arc; its invariant is that exactly the last dart of the arc has a
    free left corner, which is where the next face around v is attached.
    """

    def __init__(self, pq: SchlafliPair, budget: int):
        self.pq = pq
        self.p = pq.p
        self.q = pq.q
        self.budget = budget
        self.coords: List[complex] = []
        self.arcs: List[List[int]] = []
        self.nfaces_v: List[int] = []
        self.dhead: List[int] = []
        self.dleft: List[int] = []
        self.edges: List[Tuple[int, int]] = []
        self.face_cycles: List[List[int]] = []
        self.face_gen: List[int] = []
        self._gen = 0
        self._seed()

    # -- low level helpers --
    def tail(self, d: int) -> int:
        return self.dhead[d ^ 1]

    def gap(self, v: int) -> int:
        return self.q - self.nfaces_v[v]

    def new_vertex(self, coord: complex) -> int:
        if len(self.coords) >= self.budget:
            raise BudgetExceededError(
                f"vertex budget {self.budget} exceeded while growing {{{self.p},{self.q}}} patch"
            )
        self.coords.append(coord)
        self.arcs.append([])
        self.nfaces_v.append(0)
        return len(self.coords) - 1

    def new_edge(self, u: int, w: int) -> int:
        """Create edge u-w, return the dart u->w."""
        e = len(self.edges)
        self.edges.append((u, w))
        self.dhead.extend((w, u))
        self.dleft.extend((-1, -1))
        return 2 * e

    def _seed(self):
        r = _seed_circumradius(self.pq)
        p = self.p
        vs = [self.new_vertex(r * cmath.exp(2j * math.pi * (k + 0.5) / p)) for k in range(p)]
        cycle = []
        for k in range(p):
            d = self.new_edge(vs[k], vs[(k + 1) % p])
            cycle.append(d)
        for k in range(p):
            # filled corner between the forward and the backward dart
            self.arcs[vs[k]] = [cycle[k], cycle[(k - 1) % p] ^ 1]
            self.nfaces_v[vs[k]] = 1
        for d in cycle:
            self.dleft[d] = 0
        self.face_cycles.append(cycle)
        self.face_gen.append(0)

    # -- the face attachment primitive --
    def add_face_at(self, v: int):
        """Attach one p-gon in the free corner after the last dart of v's arc."""
        p, q = self.p, self.q
        a0 = self.arcs[v][-1]
        assert self.dleft[a0] == -1, "corner already filled"
        fwd = [a0]
        w = self.dhead[a0]
        while w != v and self.gap(w) == 1 and len(fwd) < p:
            assert self.arcs[w][0] == fwd[-1] ^ 1, "rotation arc out of order (fwd)"
            nxt = self.arcs[w][-1]
            assert self.dleft[nxt] == -1
            fwd.append(nxt)
            w = self.dhead[nxt]
        bwd: List[int] = []
        u = v
        if w != v:
            while self.gap(u) == 1 and len(fwd) + len(bwd) < p:
                d0 = self.arcs[u][0]
                bwd.append(d0 ^ 1)
                u = self.dhead[d0]
                assert self.arcs[u][-1] == d0 ^ 1, "rotation arc out of order (bwd)"
        known = list(reversed(bwd)) + fwd
        m = p - len(known)
        assert m >= 0, "face walk exceeded p edges"
        if m == 0:
            # pocket closure: the whole boundary of the new face already exists,
            # which can only happen by the forward walk wrapping to v
            assert w == v and self.gap(v) == 1 and self.arcs[v][0] == fwd[-1] ^ 1
        new_darts: List[int] = []
        if m > 0:
            if m > 1:
                # coordinates of genuinely new vertices come from reflecting a
                # neighbouring polygon across a shared edge.  Any known dart
                # works combinatorially; mirroring off the OLDEST adjacent face
                # keeps the reflection recursion shallow so floating point
                # error cannot compound along the whole attachment order.
                src, t_dm, dm = -1, 0, a0
                for t, d in enumerate(known):
                    s = self.dleft[d ^ 1]
                    assert s >= 0, "shared edge must already bound a face"
                    if src < 0 or s < src:
                        src, t_dm, dm = s, t, d
                r = t_dm - len(bwd)  # face position of dm's tail (a0's tail = 0)
                mirror = _reflect_factory(
                    self.coords[self.tail(dm)],
                    self.coords[self.dhead[dm]],
                    not self.pq.is_flat,
                )
                src_cycle = self.face_cycles[src]
                k0 = src_cycle.index(dm ^ 1)
                sverts = [self.tail(src_cycle[(k0 + j) % p]) for j in range(p)]
            prev = w
            for i in range(m):
                if i == m - 1:
                    nxt = u
                else:
                    # face vertex index of this new vertex, counting from a0
                    kpos = len(fwd) + i + 1
                    j = (p + 1 - (kpos - r)) % p
                    nxt = self.new_vertex(mirror(self.coords[sverts[j]]))
                d = self.new_edge(prev, nxt)
                new_darts.append(d)
                prev = nxt
            # rotation insertions at the two chain ends
            assert self.arcs[w][0] == fwd[-1] ^ 1
            self.arcs[w].insert(0, new_darts[0])
            assert self.arcs[u][-1] == known[0]
            self.arcs[u].append(new_darts[-1] ^ 1)
            # brand-new vertices have exactly the two chain darts
            for i in range(m - 1):
                mid = self.dhead[new_darts[i]]
                self.arcs[mid] = [new_darts[i + 1], new_darts[i] ^ 1]
        cycle = known + new_darts
        fid = len(self.face_cycles)
        for d in cycle:
            assert self.dleft[d] == -1
            self.dleft[d] = fid
        for d in cycle:
            t = self.tail(d)
            self.nfaces_v[t] += 1
            if self.nfaces_v[t] == q:
                assert len(self.arcs[t]) == q, "completed vertex with wrong degree"
        self.face_cycles.append(cycle)
        self.face_gen.append(self._gen)

    def complete_vertex(self, v: int):
        while self.gap(v) > 0:
            self.add_face_at(v)

    def grow(self, generations: int, traversal: str = "default"):
        frontier = [0]
        for g in range(1, generations + 1):
            self._gen = g
            todo: List[int] = []
            seen: Set[int] = set()
            for f in frontier:
                for d in self.face_cycles[f]:
                    t = self.tail(d)
                    if t not in seen:
                        seen.add(t)
                        todo.append(t)
            if traversal == "reversed":
                todo.reverse()
            first_new = len(self.face_cycles)
            for v in todo:
                self.complete_vertex(v)
            frontier = list(range(first_new, len(self.face_cycles)))

    def finish(self, generations: int) -> Tessellation:
        interior = [self.nfaces_v[v] == self.q for v in range(len(self.coords))]
        faces = []
        for fid, cycle in enumerate(self.face_cycles):
            vs = tuple(self.tail(d) for d in cycle)
            es = tuple(d >> 1 for d in cycle)
            faces.append(
                Face(
                    id=fid,
                    vertices=vs,
                    edges=es,
                    interior=all(interior[x] for x in vs),
                    generation=self.face_gen[fid],
                )
            )
        rot_edges = [[d >> 1 for d in arc] for arc in self.arcs]
        rot_nbrs = [[self.dhead[d] for d in arc] for arc in self.arcs]
        corner = [[self.dleft[d] for d in arc] for arc in self.arcs]
        return Tessellation(
            pq=self.pq,
            coords=self.coords,
            rot_edges=rot_edges,
            rot_nbrs=rot_nbrs,
            corner_face=corner,
            edges=self.edges,
            faces=faces,
            interior_vertex=interior,
            periodic=False,
            generations=generations,
        )


def build_patch(
    pq: SchlafliPair,
    generations: int,
    budget: Optional[int] = None,
    traversal: str = "default",
) -> Tessellation:
    """Open disk-like patch: seed face plus `generations` coronas around it.

    `traversal` switches the vertex completion order within a generation;
    every order yields the same map up to relabeling (see canonical_signature).
    """
    if generations < 0:
        raise ValueError("generations must be >= 0")
    if traversal not in ("default", "reversed"):
        raise ValueError("traversal must be 'default' or 'reversed'")
    b = _PatchBuilder(pq, budget if budget is not None else vertex_budget())
    b.grow(generations, traversal)
    return b.finish(generations)


def canonical_signature(t: Tessellation, root: Optional[VertexSlot] = None) -> Tuple:
    """Relabeling-invariant certificate of the combinatorial map.

    Vertices are relabeled breadth-first from the root flag, reading each
    rotation from its entry edge; two maps are isomorphic (with matching root
    flags) iff their signatures are equal.  Boundary arcs are emitted from
    their structural start instead, since an arc has a distinguished end.

    The default root anchors on edge 0 at vertex 0 (the first seed edge),
    which every growth order constructs identically; stored slot positions of
    interior rotations are history-dependent and would not do.
    """
    if root is None:
        root = VertexSlot(0, t.slot_of(0, 0))
    label = {root.vertex: 0}
    order = [root.vertex]
    entry = {root.vertex: root.slot % t.degree(root.vertex)}
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        deg = t.degree(v)
        start = entry[v] if t.interior_vertex[v] else 0
        for k in range(deg):
            s = (start + k) % deg
            w = t.rot_nbrs[v][s]
            if w not in label:
                label[w] = len(order)
                entry[w] = t.slot_of(w, t.rot_edges[v][s])
                order.append(w)
    sig = []
    for v in order:
        deg = t.degree(v)
        if t.interior_vertex[v]:
            start = entry[v]
            row = tuple(label[t.rot_nbrs[v][(start + k) % deg]] for k in range(deg))
            sig.append(("i",) + row)
        else:
            sig.append(("b", entry[v]) + tuple(label[w] for w in t.rot_nbrs[v]))
    return tuple(sig)


# ---------------------------------------------------------------------------
# periodic flat quotients


def build_periodic_flat(pq: SchlafliPair, L: int) -> Tessellation:
    """L x L torus quotient of a flat pair; only (4,4) and (3,6) qualify."""
    if not pq.is_flat:
        raise UnsupportedLatticeError(
            f"{{{pq.p},{pq.q}}} has no flat periodic quotient"
        )
    if L < 2:
        raise ValueError("L must be at least 2")
    if (pq.p, pq.q) == (4, 4):
        return _square_torus(pq, L)
    if (pq.p, pq.q) == (3, 6):
        return _triangular_torus(pq, L)
    raise UnsupportedLatticeError(f"unhandled flat pair {{{pq.p},{pq.q}}}")


def _square_torus(pq: SchlafliPair, L: int) -> Tessellation:
    def vid(i: int, j: int) -> int:
        return (i % L) + (j % L) * L

    def eh(i: int, j: int) -> int:  # vid -> vid+x
        return vid(i, j)

    def ev(i: int, j: int) -> int:  # vid -> vid+y
        return L * L + vid(i, j)

    nv = L * L
    coords = []
    scale = 1.5 / max(L - 1, 1)
    off = complex((L - 1) / 2.0, (L - 1) / 2.0)
    rot_edges, rot_nbrs, corner = [], [], []
    edges: List[Tuple[int, int]] = [(-1, -1)] * (2 * nv)
    for j in range(L):
        for i in range(L):
            coords_z = (complex(i, j) - off) * scale * 0.5
            coords.append(coords_z)
    for j in range(L):
        for i in range(L):
            # CCW: east, north, west, south
            rot_edges_v = [eh(i, j), ev(i, j), eh(i - 1, j), ev(i, j - 1)]
            rot_nbrs_v = [vid(i + 1, j), vid(i, j + 1), vid(i - 1, j), vid(i, j - 1)]
            corner_v = [vid(i, j), vid(i - 1, j), vid(i - 1, j - 1), vid(i, j - 1)]
            v = vid(i, j)
            edges[eh(i, j)] = (v, vid(i + 1, j))
            edges[ev(i, j)] = (v, vid(i, j + 1))
            # builders above run in vid order already
            rot_edges.append(rot_edges_v)
            rot_nbrs.append(rot_nbrs_v)
            corner.append(corner_v)
    faces = []
    for j in range(L):
        for i in range(L):
            f = vid(i, j)
            vs = (vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1))
            es = (eh(i, j), ev(i + 1, j), eh(i, j + 1), ev(i, j))
            faces.append(Face(id=f, vertices=vs, edges=es, interior=True, generation=0))
    return Tessellation(
        pq=pq,
        coords=coords,
        rot_edges=rot_edges,
        rot_nbrs=rot_nbrs,
        corner_face=corner,
        edges=edges,
        faces=faces,
        interior_vertex=[True] * nv,
        periodic=True,
        L=L,
    )


def _triangular_torus(pq: SchlafliPair, L: int) -> Tessellation:
    a2 = complex(0.5, math.sqrt(3) / 2)

    def vid(i: int, j: int) -> int:
        return (i % L) + (j % L) * L

    def ec(c: int, i: int, j: int) -> int:
        # class c edge stored at its tail: 0:+a1  1:+a2  2:+a2-a1
        return c * L * L + vid(i, j)

    def up(i: int, j: int) -> int:
        return vid(i, j)

    def down(i: int, j: int) -> int:
        return L * L + vid(i, j)

    nv = L * L
    coords = []
    centre = (L - 1) / 2.0 * (1 + a2)
    scale = 1.4 / max(L, 1)
    rot_edges, rot_nbrs, corner = [], [], []
    edges: List[Tuple[int, int]] = [(-1, -1)] * (3 * nv)
    for j in range(L):
        for i in range(L):
            coords.append((i + j * a2 - centre) * scale * 0.55)
    for j in range(L):
        for i in range(L):
            v = vid(i, j)
            # CCW directions at 0,60,...,300 degrees
            rot_edges.append(
                [
                    ec(0, i, j),
                    ec(1, i, j),
                    ec(2, i, j),
                    ec(0, i - 1, j),
                    ec(1, i, j - 1),
                    ec(2, i + 1, j - 1),
                ]
            )
            rot_nbrs.append(
                [
                    vid(i + 1, j),
                    vid(i, j + 1),
                    vid(i - 1, j + 1),
                    vid(i - 1, j),
                    vid(i, j - 1),
                    vid(i + 1, j - 1),
                ]
            )
            corner.append(
                [
                    up(i, j),
                    down(i - 1, j),
                    up(i - 1, j),
                    down(i - 1, j - 1),
                    up(i, j - 1),
                    down(i, j - 1),
                ]
            )
            edges[ec(0, i, j)] = (v, vid(i + 1, j))
            edges[ec(1, i, j)] = (v, vid(i, j + 1))
            edges[ec(2, i, j)] = (v, vid(i - 1, j + 1))
    faces = []
    for j in range(L):
        for i in range(L):
            vs = (vid(i, j), vid(i + 1, j), vid(i, j + 1))
            es = (ec(0, i, j), ec(2, i + 1, j), ec(1, i, j))
            faces.append(Face(id=up(i, j), vertices=vs, edges=es, interior=True, generation=0))
    for j in range(L):
        for i in range(L):
            vs = (vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1))
            es = (ec(1, i + 1, j), ec(0, i, j + 1), ec(2, i + 1, j))
            faces.append(Face(id=down(i, j), vertices=vs, edges=es, interior=True, generation=0))
    return Tessellation(
        pq=pq,
        coords=coords,
        rot_edges=rot_edges,
        rot_nbrs=rot_nbrs,
        corner_face=corner,
        edges=edges,
        faces=faces,
        interior_vertex=[True] * nv,
        periodic=True,
        L=L,
    )


# ---------------------------------------------------------------------------
# combinatorial geodesics, trees, wedges


@dataclass(frozen=True)
class VertexSlot:
    """An incident-edge position at a vertex; slot arithmetic is mod q."""

    vertex: int
    slot: int


@dataclass
class Path:
    vertices: List[int]
    edges: List[int]
    closed: bool = False


def geodesic_ray(
    t: Tessellation,
    start,
    start_slot: Optional[int] = None,
    max_steps: Optional[int] = None,
) -> Path:
    """Straight walk for q=4: leave each vertex at entry slot + 2 (mod 4).

    `start` is a VertexSlot (or a vertex id with start_slot given separately).
    Stops on hitting a boundary vertex, after max_steps edges, or on closing
    into a cycle (periodic lattices).
    """
    if t.q != 4:
        raise UnsupportedLatticeError("geodesic rays are defined for q=4 only; use fractal_tree")
    if isinstance(start, VertexSlot):
        start_vertex, start_slot = start.vertex, start.slot % 4
    else:
        start_vertex = start
        if start_slot is None:
            raise ValueError("start slot required")
        start_slot %= 4
    if not 0 <= start_slot < len(t.rot_edges[start_vertex]):
        raise ValueError("invalid start slot")
    v, s = start_vertex, start_slot
    verts = [v]
    edges: List[int] = []
    if max_steps == 0:
        return Path(verts, edges, closed=False)
    while True:
        e = t.rot_edges[v][s]
        w = t.rot_nbrs[v][s]
        edges.append(e)
        verts.append(w)
        if w == start_vertex and t.slot_of(w, e) == (start_slot + 2) % 4:
            return Path(verts, edges, closed=True)
        if not t.interior_vertex[w]:
            return Path(verts, edges, closed=False)
        if max_steps is not None and len(edges) >= max_steps:
            return Path(verts, edges, closed=False)
        s = (t.slot_of(w, e) + 2) % 4
        v = w


@dataclass
class FractalTree:
    """Alternating-slot subgraph: at every reached vertex the q/2 edges of one
    slot-parity class belong to the tree, the class being fixed by the entry
    edge (free choice of parity at the root)."""

    root: int
    parity: int
    vertices: Set[int]
    edges: Set[int]
    adj: Dict[int, List[Tuple[int, int]]]  # vertex -> [(edge, neighbour)]
    depth: Dict[int, int]
    class_parity: Dict[int, int]
    max_depth: Optional[int]

    def degree(self, v: int) -> int:
        return len(self.adj.get(v, ()))

    def leaves(self) -> List[int]:
        return [v for v in self.vertices if self.degree(v) == 1 and v != self.root]


def fractal_tree(
    t: Tessellation, root: int, parity: int, max_depth: Optional[int] = None
) -> FractalTree:
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    if not t.interior_vertex[root]:
        raise ValueError("tree root must be an interior vertex")
    q = t.q
    adj: Dict[int, List[Tuple[int, int]]] = {root: []}
    depth = {root: 0}
    class_parity = {root: parity}
    tree_edges: Set[int] = set()
    queue = [root]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        if not t.interior_vertex[v]:
            continue  # boundary vertices terminate branches
        if max_depth is not None and depth[v] >= max_depth:
            continue
        par = class_parity[v]
        for slot in range(par, q, 2):
            e = t.rot_edges[v][slot]
            w = t.rot_nbrs[v][slot]
            if e in tree_edges:
                continue
            tree_edges.add(e)
            adj.setdefault(v, []).append((e, w))
            adj.setdefault(w, []).append((e, v))
            w_par = t.slot_of(w, e) % 2 if t.interior_vertex[w] else None
            if w not in depth:
                depth[w] = depth[v] + 1
                if w_par is not None:
                    class_parity[w] = w_par
                queue.append(w)
            elif w_par is not None and class_parity.get(w, w_par) != w_par:
                raise ConstructionError(
                    f"inconsistent slot class re-entering vertex {w}"
                )
    return FractalTree(
        root=root,
        parity=parity,
        vertices=set(depth),
        edges=tree_edges,
        adj=adj,
        depth=depth,
        class_parity=class_parity,
        max_depth=max_depth,
    )


def tree_branch(t: Tessellation, tree: FractalTree, first_slot: int, turn: str) -> Path:
    """Extremal root-to-leaf walk: always continue at offset +2 ('ccw') or
    q-2 ('cw') from the entry slot.  Used as a wedge wall."""
    if turn not in ("ccw", "cw"):
        raise ValueError("turn must be 'ccw' or 'cw'")
    q = t.q
    root = tree.root
    e = t.rot_edges[root][first_slot]
    if e not in tree.edges:
        raise ValueError("first_slot does not start a tree edge")
    delta = 2 if turn == "ccw" else q - 2
    verts = [root]
    edges = []
    v, cur = root, e
    while True:
        w = t.other_end(cur, v)
        verts.append(w)
        edges.append(cur)
        if not t.interior_vertex[w]:
            return Path(verts, edges)
        s_in = t.slot_of(w, cur)
        nxt_slot = (s_in + delta) % q
        nxt = t.rot_edges[w][nxt_slot]
        if nxt not in tree.edges:
            # depth-truncated tree: stop where the tree stops
            return Path(verts, edges)
        v, cur = w, nxt


def tree_path(tree: FractalTree, a: int, b: int) -> Path:
    """Unique path between two tree vertices (BFS through tree edges)."""
    if a not in tree.vertices or b not in tree.vertices:
        raise ValueError("endpoints must be tree vertices")
    prev: Dict[int, Tuple[int, int]] = {a: (-1, -1)}
    queue = [a]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        if v == b:
            break
        for e, w in tree.adj.get(v, ()):
            if w not in prev:
                prev[w] = (v, e)
                queue.append(w)
    if b not in prev:
        raise ConstructionError("tree vertices not connected")
    verts = [b]
    edges = []
    v = b
    while v != a:
        pv, pe = prev[v]
        edges.append(pe)
        verts.append(pv)
        v = pv
    verts.reverse()
    edges.reverse()
    return Path(verts, edges)


@dataclass
class Region:
    faces: Set[int]
    vertices: Set[int]
    wall_edges: Set[int]
    branch_a: Path
    branch_b: Path


def wedge_region(t: Tessellation, tree: FractalTree, branch_a: Path, branch_b: Path) -> Region:
    """Faces swept counterclockwise from branch_a to branch_b around the root.

    Both branches must start at the tree root and end on the patch boundary;
    the region is the flood fill from the corner just ccw of branch_a's first
    edge, never crossing a branch edge.
    """
    root = tree.root
    if branch_a.vertices[0] != root or branch_b.vertices[0] != root:
        raise ValueError("branches must start at the tree root")
    for br in (branch_a, branch_b):
        if t.interior_vertex[br.vertices[-1]]:
            raise ConstructionError("wedge branch does not reach the patch boundary")
    wall = set(branch_a.edges) | set(branch_b.edges)
    seed = t.corner_face[root][t.slot_of(root, branch_a.edges[0])]
    if seed < 0:
        raise ConstructionError("no face ccw of branch_a at the root")
    region: Set[int] = set()
    stack = [seed]
    while stack:
        f = stack.pop()
        if f in region:
            continue
        region.add(f)
        for e in t.faces[f].edges:
            if e in wall:
                continue
            for g in t.edge_faces(e):
                if g not in region:
                    stack.append(g)
    verts: Set[int] = set()
    for f in region:
        verts.update(t.faces[f].vertices)
    return Region(faces=region, vertices=verts, wall_edges=wall, branch_a=branch_a, branch_b=branch_b)


# ---------------------------------------------------------------------------
# flat (3,6) helpers


def _triangular_colors(t: Tessellation) -> List[int]:
    """Propagated 3-coloring: even slots raise the color, odd slots lower it.

    Cached on the tessellation; consistent on patches always, on tori only
    when L is a multiple of 3 (otherwise flavors mix and we refuse).
    """
    cached = getattr(t, "_tri_colors", None)
    if cached is not None:
        return cached
    colors = [-1] * t.n_vertices
    colors[0] = 0
    queue = [0]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for slot, w in enumerate(t.rot_nbrs[v]):
            c = (colors[v] + (1 if slot % 2 == 0 else -1)) % 3
            if colors[w] < 0:
                colors[w] = c
                queue.append(w)
            elif colors[w] != c:
                raise UnsupportedLatticeError(
                    "three-coloring is inconsistent (torus size not a multiple of 3)"
                )
    t._tri_colors = colors
    return colors


def triangular_color(t: Tessellation, v: int) -> int:
    """Color class of a triangular-lattice vertex ((i - j) mod 3 on the torus)."""
    if (t.p, t.q) != (3, 6):
        raise UnsupportedLatticeError("colors are defined on the (3,6) lattice")
    if t.periodic and (t.L is None or t.L % 3 != 0):
        raise UnsupportedLatticeError("three-coloring needs L divisible by 3")
    return _triangular_colors(t)[v]


def hexagonal_sublattice(t: Tessellation, flavor: int) -> Set[int]:
    """Vertices of the honeycomb obtained by deleting one color class."""
    if flavor not in (0, 1, 2):
        raise ValueError("flavor must be 0, 1 or 2")
    return {v for v in range(t.n_vertices) if triangular_color(t, v) != flavor}


def link_cycle(t: Tessellation, v: int) -> Tuple[List[int], List[int]]:
    """The cycle of edges around v opposite to it (one path per incident face).

    On (3,6) this is the hexagon of the six surrounding edges; the analogous
    cycle exists around any interior vertex of any lattice here.
    Returns (vertices, edges) of the closed cycle.
    """
    if not t.interior_vertex[v]:
        raise ValueError("link cycle needs an interior vertex")
    verts: List[int] = []
    edges: List[int] = []
    q = t.q
    for slot in range(q):
        f = t.corner_face[v][slot]
        face = t.faces[f]
        k = face.vertices.index(v)
        # walk the face boundary from the ccw neighbour round to the next slot's
        # neighbour, skipping v itself
        idx = [(k + off) % t.p for off in range(1, t.p)]
        for pos in range(len(idx) - 1):
            edges.append(face.edges[idx[pos]])
        verts.extend(face.vertices[i] for i in idx[:-1])
    return verts, edges
