"""Model file format and named-operator dispatch.

One JSON document carries everything downstream tools need: the base pair and
patch parameters (enough to rebuild the geometry deterministically), the full
edge3/prism enumeration for viewers, and the term list.  Keys are sorted and
separators fixed, so re-exporting a loaded file is byte-identical.
"""

from __future__ import annotations

import json
from typing import Dict, List, Optional, Tuple, Union

from . import operators as ops
from .code import StabilizerCode, Term, X_KINDS, build_code
from .errors import ConstructionError
from .lattice import Lattice3D, stack
from .pauli import PauliString, x_on, z_on
from .tess import (
    SchlafliPair,
    Tessellation,
    VertexSlot,
    build_patch,
    build_periodic_flat,
    fractal_tree,
    geodesic_ray,
    tree_path,
)


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def export_model(code: StabilizerCode) -> Dict:
    l = code.lattice
    t = l.base
    patch = (
        {"kind": "torus", "l": t.L}
        if t.periodic
        else {"kind": "disk", "generations": t.generations}
    )
    edges3 = []
    for q in range(l.n_qubits):
        kind = "in_plane" if q < l.n_inplane else "vertical"
        a, b = l.edge3_sites(q)
        edges3.append({"id": q, "kind": kind, "a": list(a), "b": list(b)})
    return {
        "schlafli": {"p": t.p, "q": t.q},
        "patch": patch,
        "layers": l.layers,
        "vertices": [
            {
                "id": v,
                "x": t.coords[v].real,
                "y": t.coords[v].imag,
                "interior": t.interior_vertex[v],
            }
            for v in range(t.n_vertices)
        ],
        "edges3": edges3,
        "faces": [{"id": f.id, "vertices": list(f.vertices)} for f in t.faces],
        "prisms": [
            {"id": l.prism_id(f, i), "face": f, "interval": i}
            for f in range(t.n_faces)
            for i in range(l.layers)
        ],
        "terms": [
            {
                "id": term.id,
                "kind": term.kind,
                "location": list(term.location),
                "edges": term.support(),
            }
            for term in code.terms
        ],
    }


def save_model(code: StabilizerCode, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_dumps(export_model(code)) + "\n")


def _rebuild_base(doc: Dict) -> Tessellation:
    pq = SchlafliPair(doc["schlafli"]["p"], doc["schlafli"]["q"])
    patch = doc["patch"]
    if patch["kind"] == "torus":
        return build_periodic_flat(pq, patch["l"])
    if patch["kind"] == "disk":
        return build_patch(pq, patch["generations"])
    raise ValueError(f"unknown patch kind {patch['kind']!r}")


def load_model(source: Union[str, Dict]) -> StabilizerCode:
    """Rebuild the geometry from the stored parameters; take terms verbatim."""
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    else:
        doc = source
    base = _rebuild_base(doc)
    l = stack(base, doc["layers"])
    if len(doc["vertices"]) != base.n_vertices or len(doc["edges3"]) != l.n_qubits:
        raise ValueError("model file does not match its own parameters")
    terms: List[Term] = []
    for row in doc["terms"]:
        maker = x_on if row["kind"] in X_KINDS else z_on
        terms.append(
            Term(
                id=row["id"],
                kind=row["kind"],
                location=tuple(row["location"]),
                pauli=maker(l.n_qubits, row["edges"]),
            )
        )
    include_hexagon = any(t.kind == "hexagon_z" for t in terms)
    return StabilizerCode(l, terms, include_hexagon)


def build_model(
    p: int,
    q: int,
    layers: int,
    generations: Optional[int] = None,
    periodic_l: Optional[int] = None,
    hexagon: bool = False,
) -> StabilizerCode:
    pq = SchlafliPair(p, q)
    if (generations is None) == (periodic_l is None):
        raise ValueError("give exactly one of generations / periodic_l")
    if generations is not None:
        base = build_patch(pq, generations)
    else:
        base = build_periodic_flat(pq, periodic_l)
    return build_code(stack(base, layers), include_hexagon=hexagon)


# ---------------------------------------------------------------------------
# named operators (CLI `makeop` and the HTTP operator endpoint)

OPERATOR_KINDS = (
    "truncated_geodesic",
    "stacked_geodesics",
    "tree_logical",
    "pruned_tree",
    "pruned_tree_series",
    "wedge",
    "wedge_intersection",
    "z_string",
)

FLAT36_KINDS = (
    "z_hexagon",
    "z_triangle",
    "charge_move_inplane",
    "charge_move_vertical",
    "x_flux_membrane",
    "x_planeon_move",
)


def build_named_operator(code: StabilizerCode, kind: str, params: Dict) -> PauliString:
    l = code.lattice
    t = l.base
    if kind.startswith("flat36:"):
        name = kind.split(":", 1)[1]
        if name not in FLAT36_KINDS:
            raise ValueError(f"unknown flat36 operator {name!r}")
        f36 = ops.flat36_ops(l)
        if name == "z_hexagon":
            return f36.z_hexagon(params["vertex"], params["layer"])
        if name == "z_triangle":
            return f36.z_triangle(params["face"], params["layer"])
        if name == "charge_move_inplane":
            return f36.charge_move_inplane(params["vertex"], params["slot"], params["layer"])
        if name == "charge_move_vertical":
            return f36.charge_move_vertical(params["vertex"], params["interval"])
        if name == "x_flux_membrane":
            return f36.x_flux_membrane(params["vertex"], params["slot"], params["length"])
        return f36.x_planeon_move(params["edge"], params["layer"])

    if kind == "truncated_geodesic":
        ray = geodesic_ray(
            t, VertexSlot(params["vertex"], params["slot"]), max_steps=params.get("max_steps")
        )
        return ops.x_truncated_geodesic(code, ray, params["layer"])
    if kind == "stacked_geodesics":
        rays = ops.find_stacked_geodesics(code, params["face"], params["layer"])
        return ops.x_stacked_truncated_geodesics(code, rays, params["layer"])
    if kind == "tree_logical":
        tree = fractal_tree(t, params["root"], params["parity"], params.get("max_depth"))
        return ops.x_fractal_tree_logical(code, tree, params["interval"])
    if kind == "pruned_tree":
        tree = fractal_tree(t, params["root"], params["parity"])
        return ops.x_pruned_tree(code, tree, params["prune"], params["interval"])
    if kind == "pruned_tree_series":
        items = ops.find_pruned_tree_series(code, params["face"], params["interval"])
        return ops.x_pruned_tree_series(code, items, params["interval"])
    if kind == "wedge":
        region = ops.build_wedge(t, params["root"], params["parity"], params["slot"])
        return ops.x_wedge_membrane(code, region, params["interval"])
    if kind == "wedge_intersection":
        ra = ops.build_wedge(t, params["root_a"], params["parity_a"], params["slot_a"])
        rb = ops.build_wedge(t, params["root_b"], params["parity_b"], params["slot_b"])
        return ops.x_wedge_intersection(code, ra, rb, params["interval"])
    if kind == "z_string":
        skind = params["string"]
        if skind == "vertical":
            return ops.z_string(l, "vertical", params["vertex"], params.get("layer"))
        if skind == "geodesic":
            ray = geodesic_ray(
                t, VertexSlot(params["vertex"], params["slot"]), max_steps=params.get("max_steps")
            )
            return ops.z_string(l, "geodesic", ray, params["layer"])
        if skind == "tree_path":
            tree = fractal_tree(t, params["root"], params["parity"])
            path = tree_path(tree, params["a"], params["b"])
            return ops.z_string(l, "tree_path", path, params["layer"])
        raise ValueError(f"unknown z_string form {skind!r}")
    raise ValueError(f"unknown operator kind {kind!r}")
