"""Layered 3D lattice: a {p,q} base tessellation stacked into L_z layers.

Qubits live on edges of the 3D structure.  There are two kinds:

* in-plane: a copy of base edge e in layer l, id ``e * L_z + l``
* vertical: joins (v, l) to (v, l+1 mod L_z), id ``E * L_z + v * L_z + l``

The vertical direction is periodic, so every vertex carries exactly L_z
vertical edges.  Prisms are faces extruded through one interval: prism (f, l)
is bounded below by layer l, above by layer l+1, id ``f * L_z + l``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Set, Tuple

from .tess import Tessellation


@dataclass
class Lattice3D:
    base: Tessellation
    layers: int

    def __post_init__(self):
        if self.layers < 3:
            raise ValueError("layers must be at least 3 (vertical direction is periodic)")

    # ---- sizes -----------------------------------------------------------
    @property
    def n_inplane(self) -> int:
        return self.base.n_edges * self.layers

    @property
    def n_vertical(self) -> int:
        return self.base.n_vertices * self.layers

    @property
    def n_qubits(self) -> int:
        return self.n_inplane + self.n_vertical

    @property
    def n_prisms(self) -> int:
        return self.base.n_faces * self.layers

    # ---- id arithmetic ---------------------------------------------------
    def wrap(self, layer: int) -> int:
        return layer % self.layers

    def inplane_id(self, edge: int, layer: int) -> int:
        return edge * self.layers + self.wrap(layer)

    def vertical_id(self, vertex: int, layer: int) -> int:
        """Vertical edge from (vertex, layer) up to (vertex, layer+1)."""
        return self.n_inplane + vertex * self.layers + self.wrap(layer)

    def qubit_info(self, qubit: int) -> Tuple[str, int, int]:
        """('inplane', edge, layer) or ('vertical', vertex, layer)."""
        if qubit < 0 or qubit >= self.n_qubits:
            raise ValueError(f"qubit id {qubit} out of range")
        if qubit < self.n_inplane:
            return ("inplane", qubit // self.layers, qubit % self.layers)
        rest = qubit - self.n_inplane
        return ("vertical", rest // self.layers, rest % self.layers)

    def prism_id(self, face: int, layer: int) -> int:
        return face * self.layers + self.wrap(layer)

    def prism_info(self, prism: int) -> Tuple[int, int]:
        if prism < 0 or prism >= self.n_prisms:
            raise ValueError(f"prism id {prism} out of range")
        return (prism // self.layers, prism % self.layers)

    # ---- incidence -------------------------------------------------------
    def prism_edges(self, face: int, layer: int) -> List[int]:
        """All 3p edges of a prism: bottom ring, top ring, vertical struts."""
        f = self.base.faces[face]
        l = self.wrap(layer)
        out = [self.inplane_id(e, l) for e in f.edges]
        out += [self.inplane_id(e, self.wrap(l + 1)) for e in f.edges]
        out += [self.vertical_id(v, l) for v in f.vertices]
        return out

    def vertex_inplane_edges(self, vertex: int, layer: int) -> List[int]:
        return [self.inplane_id(e, layer) for e in self.base.rot_edges[vertex]]

    def vertical_pair(self, vertex: int, layer: int) -> List[int]:
        """The two vertical edges meeting at the site (vertex, layer)."""
        return [self.vertical_id(vertex, layer - 1), self.vertical_id(vertex, layer)]

    def prisms_at_vertical(self, vertex: int, layer: int) -> List[int]:
        """Prisms containing the vertical edge (vertex, layer)."""
        return [
            self.prism_id(f, layer) for f in self.base.faces_at_vertex(vertex)
        ]

    def prisms_at_inplane(self, edge: int, layer: int) -> List[int]:
        """Prisms containing in-plane edge (edge, layer): both base faces, at
        the interval below and the interval above the layer."""
        out = []
        for f in self.base.edge_faces(edge):
            out.append(self.prism_id(f, layer))
            out.append(self.prism_id(f, layer - 1))
        return out

    def all_prisms(self) -> Iterable[Tuple[int, int]]:
        for f in range(self.base.n_faces):
            for l in range(self.layers):
                yield (f, l)

    def edge3_sites(self, qubit: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        """The two (vertex, layer) sites an edge qubit joins."""
        kind, a, l = self.qubit_info(qubit)
        if kind == "inplane":
            u, w = self.base.edges[a]
            return ((u, l), (w, l))
        return ((a, l), (a, self.wrap(l + 1)))


def stack(base: Tessellation, layers: int) -> Lattice3D:
    """Extrude a tessellation through `layers` periodic layers."""
    return Lattice3D(base, layers)


def incident_prisms(l: Lattice3D, edge3: int) -> Set[int]:
    kind, a, layer = l.qubit_info(edge3)
    if kind == "inplane":
        return set(l.prisms_at_inplane(a, layer))
    return set(l.prisms_at_vertical(a, layer))


def incident_edges(l: Lattice3D, prism: int) -> Set[int]:
    face, layer = l.prism_info(prism)
    return set(l.prism_edges(face, layer))
