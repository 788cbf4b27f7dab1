"""Hamiltonian terms and syndromes for the layered {p,q} models.

Term zoo (all anchored at interior faces/vertices only; open-patch boundaries
carry qubits but no checks, which is what lets particles leave the system):

* ``prism_z``: Z on all 3p edges of a prism (face x interval).
* q = 4: ``vertex_planar_x`` (the 4 in-plane edges at a site) and two
  ``vertex_mixed_x`` terms (the 2 vertical edges at the site plus one opposite
  in-plane slot pair, {0,2} or {1,3}).  At (4,4) this is the X-cube term set.
* q >= 6: two ``vertex_type1_x`` terms (the 2 vertical edges plus one
  alternating in-plane slot class, weight 2 + q/2) and one ``vertex_type2_x``
  (all q in-plane edges).  The type-2 term equals the product of the two
  type-1 terms and is kept as a dependent generator.
* (3,6) only, optional: ``hexagon_z``, Z around the six in-plane edges
  surrounding a vertex.

A syndrome is the set of term ids anticommuting with an applied Pauli.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .errors import UnsupportedLatticeError
from .lattice import Lattice3D
from .pauli import PauliString, x_on, z_on
from .tess import link_cycle

X_KINDS = ("vertex_planar_x", "vertex_mixed_x", "vertex_type1_x", "vertex_type2_x")
Z_KINDS = ("prism_z", "hexagon_z")


@dataclass
class Term:
    id: int
    kind: str
    location: Tuple[int, int]     # (face, interval) or (vertex, layer)
    pauli: PauliString
    variant: Optional[int] = None  # 0/1 for the paired mixed/type-1 kinds

    @property
    def is_x_type(self) -> bool:
        return self.kind in X_KINDS

    def support(self) -> List[int]:
        return self.pauli.support()


@dataclass(frozen=True)
class Syndrome:
    excited: FrozenSet[int]

    def __len__(self) -> int:
        return len(self.excited)

    def __iter__(self):
        return iter(sorted(self.excited))


@dataclass(frozen=True)
class Particle:
    ptype: str                    # fracton | composite | unclassified
    location: Tuple[int, int]
    term_ids: Tuple[int, ...]
    kinds: Tuple[str, ...]


class StabilizerCode:
    def __init__(self, lattice: Lattice3D, terms: List[Term], include_hexagon: bool):
        self.lattice = lattice
        self.terms = terms
        self.include_hexagon = include_hexagon
        self.n = lattice.n_qubits
        # per-edge toggle sets: which terms an X (resp. Z) on the edge excites
        x_toggles: List[Set[int]] = [set() for _ in range(self.n)]
        z_toggles: List[Set[int]] = [set() for _ in range(self.n)]
        for t in terms:
            target = z_toggles if t.is_x_type else x_toggles
            for e in t.support():
                target[e].add(t.id)
        self._x_move_toggles = [frozenset(s) for s in x_toggles]
        self._z_move_toggles = [frozenset(s) for s in z_toggles]
        self._audit_result: Optional[List[Tuple[int, int]]] = None

    # ---- raw GF(2) rows --------------------------------------------------
    def x_rows(self) -> List[int]:
        return [t.pauli.x_bits for t in self.terms if t.is_x_type]

    def z_rows(self) -> List[int]:
        return [t.pauli.z_bits for t in self.terms if not t.is_x_type]

    @property
    def n_qubits(self) -> int:
        return self.n

    # ---- syndromes -------------------------------------------------------
    def toggled_by_x_on(self, edge: int) -> FrozenSet[int]:
        """Term ids excited/de-excited by applying X to one edge."""
        return self._x_move_toggles[edge]

    def toggled_by_z_on(self, edge: int) -> FrozenSet[int]:
        return self._z_move_toggles[edge]

    def toggled_by(self, op: PauliString) -> FrozenSet[int]:
        acc: Set[int] = set()
        for e in op.support():
            bit = 1 << e
            if op.x_bits & bit:
                acc ^= self._x_move_toggles[e]
            if op.z_bits & bit:
                acc ^= self._z_move_toggles[e]
        return frozenset(acc)

    def syndrome(self, op: PauliString) -> Syndrome:
        if op.n != self.n:
            raise ValueError("operator length does not match lattice")
        return Syndrome(self.toggled_by(op))

    # ---- audit -----------------------------------------------------------
    def audit_violations(self) -> List[Tuple[int, int]]:
        """All non-commuting term pairs (exhaustive, sparse).  Empty = pass."""
        if self._audit_result is None:
            bad: List[Tuple[int, int]] = []
            for t in self.terms:
                if not t.is_x_type:
                    continue
                hits: Dict[int, int] = {}
                for e in t.support():
                    for zid in self._x_move_toggles[e]:
                        hits[zid] = hits.get(zid, 0) ^ 1
                bad.extend((t.id, zid) for zid, odd in hits.items() if odd)
            self._audit_result = sorted(bad)
        return self._audit_result

    def audit(self) -> bool:
        return not self.audit_violations()


def _vertex_terms_q4(l: Lattice3D, v: int, layer: int) -> List[Tuple[str, Optional[int], PauliString]]:
    base = l.base
    n = l.n_qubits
    inplane = [l.inplane_id(e, layer) for e in base.rot_edges[v]]
    vert = l.vertical_pair(v, layer)
    planar = x_on(n, inplane)
    mixed0 = x_on(n, vert + [inplane[0], inplane[2]])
    mixed1 = x_on(n, vert + [inplane[1], inplane[3]])
    return [
        ("vertex_planar_x", None, planar),
        ("vertex_mixed_x", 0, mixed0),
        ("vertex_mixed_x", 1, mixed1),
    ]


def _vertex_terms_q6plus(l: Lattice3D, v: int, layer: int) -> List[Tuple[str, Optional[int], PauliString]]:
    base = l.base
    n = l.n_qubits
    inplane = [l.inplane_id(e, layer) for e in base.rot_edges[v]]
    vert = l.vertical_pair(v, layer)
    t1 = [x_on(n, vert + inplane[par::2]) for par in (0, 1)]
    t2 = x_on(n, inplane)
    return [
        ("vertex_type1_x", 0, t1[0]),
        ("vertex_type1_x", 1, t1[1]),
        ("vertex_type2_x", None, t2),
    ]


def build_code(l: Lattice3D, include_hexagon: bool = False) -> StabilizerCode:
    base = l.base
    if include_hexagon and (base.p, base.q) != (3, 6):
        raise UnsupportedLatticeError("hexagon terms exist only on (3,6)")
    terms: List[Term] = []

    def add(kind, location, pauli, variant=None):
        terms.append(Term(id=len(terms), kind=kind, location=location, pauli=pauli, variant=variant))

    for f in range(base.n_faces):
        if not base.faces[f].interior:
            continue
        for layer in range(l.layers):
            add("prism_z", (f, layer), z_on(l.n_qubits, l.prism_edges(f, layer)))
    vertex_builder = _vertex_terms_q4 if base.q == 4 else _vertex_terms_q6plus
    for v in range(base.n_vertices):
        if not base.interior_vertex[v]:
            continue
        for layer in range(l.layers):
            for kind, variant, pauli in vertex_builder(l, v, layer):
                add(kind, (v, layer), pauli, variant)
    if include_hexagon:
        for v in range(base.n_vertices):
            if not base.interior_vertex[v]:
                continue
            _, ring = link_cycle(base, v)
            for layer in range(l.layers):
                add("hexagon_z", (v, layer), z_on(l.n_qubits, [l.inplane_id(e, layer) for e in ring]))
    return StabilizerCode(l, terms, include_hexagon)


def classify_excitations(code: StabilizerCode, syn: Syndrome) -> List[Particle]:
    """Excited prisms are fractons; vertex X terms pair up into composites."""
    parts: List[Particle] = []
    groups: Dict[Tuple[int, int], List[Term]] = {}
    for tid in sorted(syn.excited):
        t = code.terms[tid]
        if t.kind == "prism_z":
            parts.append(Particle("fracton", t.location, (tid,), (t.kind,)))
        elif t.kind == "hexagon_z":
            parts.append(Particle("unclassified", t.location, (tid,), (t.kind,)))
        else:
            groups.setdefault(t.location, []).append(t)
    for loc in sorted(groups):
        ts = groups[loc]
        ids = tuple(t.id for t in ts)
        kinds = tuple(sorted(t.kind for t in ts))
        ptype = "composite" if len(ts) == 2 else "unclassified"
        parts.append(Particle(ptype, loc, ids, kinds))
    return parts


def particle_keys(parts: Iterable[Particle]) -> FrozenSet[Tuple]:
    """Hashable position summary used by mobility reports."""
    return frozenset((p.ptype, p.location, p.kinds) for p in parts)
