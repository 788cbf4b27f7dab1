"""Empirical mobility: breadth-first search over syndrome states.

A state is the set of excited term ids; applying one more Pauli toggles a
precomputed term subset, so the walk never touches operator histories.  The
strict policy admits a move iff

* the resulting excitation count stays within the budget,
* rim-truncated moves (part of their bulk toggle footprint is missing at the
  patch boundary) must strictly lower the count: they may absorb a particle
  into the boundary but not convert or spawn one there, and
* the vacuum is terminal (once everything is annihilated, re-creating
  particles elsewhere would not be motion of the original ones).

The relaxed policy keeps only the budget rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .code import Particle, StabilizerCode, Syndrome, classify_excitations, particle_keys
from .pauli import PauliString


@dataclass
class MobilityQuery:
    code: StabilizerCode
    # an operator whose syndrome seeds the walk, or a ready-made excited
    # state (Syndrome / iterable of term ids) for single-particle studies
    initial: object
    move_alphabet: str = "both"  # "x" | "z" | "both"
    budget: Optional[int] = None  # default: initial syndrome weight
    max_states: int = 100_000
    strict: bool = True
    # compound moves (multi-edge Paulis) offered alongside single-edge ones,
    # e.g. the rhombus hop of the flat (3,6) charge
    extra_moves: Sequence[PauliString] = ()

    def __post_init__(self):
        if self.move_alphabet not in ("x", "z", "both"):
            raise ValueError("move_alphabet must be 'x', 'z' or 'both'")
        self.initial_state = self._coerce_initial()
        start = len(self.initial_state)
        if self.budget is None:
            self.budget = start
        if self.budget < start:
            raise ValueError("budget below initial syndrome weight")

    def _coerce_initial(self) -> FrozenSet[int]:
        if isinstance(self.initial, PauliString):
            return frozenset(self.code.syndrome(self.initial).excited)
        if isinstance(self.initial, Syndrome):
            return frozenset(self.initial.excited)
        state = frozenset(self.initial)
        nterms = len(self.code.terms)
        for tid in state:
            if not isinstance(tid, int) or not 0 <= tid < nterms:
                raise ValueError(f"not a term id: {tid!r}")
        return state


@dataclass
class MobilityReport:
    initial_particles: Tuple[Particle, ...]
    reachable_positions: Set
    reachable_states: Set[FrozenSet[int]]
    visited_state_count: int
    truncated: bool

    def locations_of(self, ptype: str) -> Set:
        """Locations over all reachable states of particles of one type."""
        return {key[1] for key in self.reachable_positions if key[0] == ptype}


def _position_keys(code: StabilizerCode, state: FrozenSet[int]):
    return particle_keys(classify_excitations(code, Syndrome(frozenset(state))))


class _MoveTable:
    """Single-edge toggle sets plus rim flags for the admission rules.

    A move counts as rim-touching when its toggle set is smaller than the
    footprint the same move has deep in the bulk, i.e. some term it would
    toggle is missing because the patch was truncated there.  Such moves can
    absorb particles into the boundary, never convert or spawn them.
    """

    def __init__(self, code: StabilizerCode, alphabet: str, extra: Sequence[PauliString]):
        self.entries: List[Tuple[FrozenSet[int], bool]] = []
        l = code.lattice
        q = l.base.q
        hexated = 2 if getattr(code, "include_hexagon", False) else 0
        bulk = {
            ("x", "inplane"): 4 + hexated,
            ("x", "vertical"): q,
            ("z", "inplane"): 4,
            ("z", "vertical"): 4,
        }
        for edge in range(code.n_qubits):
            kind = l.qubit_info(edge)[0]
            if alphabet in ("x", "both"):
                toggles = code.toggled_by_x_on(edge)
                self._add(toggles, len(toggles) < bulk[("x", kind)])
            if alphabet in ("z", "both"):
                toggles = code.toggled_by_z_on(edge)
                self._add(toggles, len(toggles) < bulk[("z", kind)])
        for op in extra:
            self._add(frozenset(code.toggled_by(op)), False)

    def _add(self, toggles: FrozenSet[int], on_boundary: bool):
        if toggles:
            self.entries.append((toggles, on_boundary))


def reachable(q: MobilityQuery) -> MobilityReport:
    code = q.code
    start = q.initial_state
    table = _MoveTable(code, q.move_alphabet, q.extra_moves)
    seen: Set[FrozenSet[int]] = {start}
    frontier = [start]
    truncated = False
    while frontier:
        if len(seen) >= q.max_states:
            truncated = True
            break
        nxt: List[FrozenSet[int]] = []
        for state in frontier:
            n_here = len(state)
            if q.strict and n_here == 0:
                continue  # vacuum is terminal
            for toggles, on_boundary in table.entries:
                new = state ^ toggles
                n_new = len(new)
                if n_new > q.budget:
                    continue
                if q.strict and on_boundary and n_new >= n_here:
                    continue
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
                    if len(seen) >= q.max_states:
                        truncated = True
                        break
            if truncated:
                break
        frontier = nxt
    positions = set()
    for state in seen:
        positions |= _position_keys(code, state)
    initial_parts = classify_excitations(code, Syndrome(start))
    return MobilityReport(
        initial_particles=tuple(initial_parts),
        reachable_positions=positions,
        reachable_states=seen,
        visited_state_count=len(seen),
        truncated=truncated,
    )


# ---------------------------------------------------------------------------
# qualitative per-class summary


def mobility_table(descriptors: Iterable[Tuple[int, int]]) -> List[Dict[str, object]]:
    """One qualitative row per {p,q} class, mirroring the layered-model family:
    q=4 hosts lineons on geodesics, q>=6 treeons on fractal trees (collapsing
    to planeons on the flat (3,6)); fracton dipoles slide in-plane only for
    q=4; wedge membranes need even p."""
    rows = []
    for p, q in descriptors:
        flat = (q * p - 2 * q - 2 * p) == 0
        if q == 4:
            particle = "lineon"
            carrier = "geodesic"
            dipole = "1D along the transverse geodesic"
            creation = "truncated geodesic"
        elif flat and (p, q) == (3, 6):
            particle = "planeon"
            carrier = "hexagonal sublattice"
            dipole = "planar"
            creation = "flux membrane"
        else:
            particle = "treeon"
            carrier = "fractal tree"
            dipole = "immobile in-plane"
            creation = "pruned tree"
        logicals = [carrier if q == 4 else "fractal tree"]
        if p % 2 == 0:
            logicals.append("wedge membrane")
        rows.append(
            {
                "pq": (p, q),
                "curvature": "flat" if flat else "hyperbolic",
                "in_plane_particle": particle,
                "in_plane_carrier": carrier,
                "fracton_dipole_in_plane": dipole,
                "x_logicals": logicals,
                "fracton_creation": creation,
            }
        )
    return rows
