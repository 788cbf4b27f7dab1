"""Layered {p,q} stabilizer models on hyperbolic and flat tessellations."""

from .errors import (
    BudgetExceededError,
    ConstructionError,
    SphericalPairError,
    UnsupportedLatticeError,
    YcubeError,
)
from .tess import (
    DEFAULT_VERTEX_BUDGET,
    VERTEX_BUDGET_ENV,
    Face,
    FractalTree,
    Path,
    Region,
    SchlafliPair,
    Tessellation,
    VertexSlot,
    build_patch,
    build_periodic_flat,
    canonical_signature,
    fractal_tree,
    geodesic_ray,
    hexagonal_sublattice,
    link_cycle,
    tree_branch,
    tree_path,
    triangular_color,
    vertex_budget,
    wedge_region,
)
from .lattice import Lattice3D, incident_edges, incident_prisms, stack
from .pauli import PauliString, commutes, multiply, product, x_on, z_on
from .code import (
    StabilizerCode,
    Syndrome,
    Term,
    build_code,
    classify_excitations,
    particle_keys,
)
from .gf2 import gsd_exponent, in_stabilizer_group, logical_basis
from .mobility import MobilityQuery, MobilityReport, mobility_table, reachable
from .io import build_model, build_named_operator, export_model, load_model, save_model
from . import operators

__all__ = [
    "BudgetExceededError",
    "ConstructionError",
    "SphericalPairError",
    "UnsupportedLatticeError",
    "YcubeError",
    "DEFAULT_VERTEX_BUDGET",
    "VERTEX_BUDGET_ENV",
    "vertex_budget",
    "Face",
    "FractalTree",
    "Path",
    "Region",
    "SchlafliPair",
    "Tessellation",
    "VertexSlot",
    "build_patch",
    "build_periodic_flat",
    "canonical_signature",
    "fractal_tree",
    "geodesic_ray",
    "hexagonal_sublattice",
    "link_cycle",
    "tree_branch",
    "tree_path",
    "triangular_color",
    "wedge_region",
    "Lattice3D",
    "incident_edges",
    "incident_prisms",
    "stack",
    "PauliString",
    "commutes",
    "multiply",
    "product",
    "x_on",
    "z_on",
    "StabilizerCode",
    "Syndrome",
    "Term",
    "build_code",
    "classify_excitations",
    "particle_keys",
    "gsd_exponent",
    "in_stabilizer_group",
    "logical_basis",
    "MobilityQuery",
    "MobilityReport",
    "mobility_table",
    "reachable",
    "build_model",
    "build_named_operator",
    "export_model",
    "load_model",
    "save_model",
    "operators",
]
