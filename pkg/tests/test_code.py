"""Term zoo, audits and syndrome species."""

import pytest
from hypothesis import given, strategies as st

import ycube
from ycube import PauliString, SchlafliPair, build_code, stack
from ycube.code import classify_excitations, particle_keys
from ycube.errors import UnsupportedLatticeError
from ycube.pauli import x_on


def _interior_faces(t):
    return [f.id for f in t.faces if f.interior]


@pytest.mark.parametrize(
    "fixture", ["code54", "code46", "code64", "code44torus", "code36torus"]
)
def test_all_pairs_commute(fixture, request):
    code = request.getfixturevalue(fixture)
    assert code.audit()
    assert code.audit_violations() == []


@pytest.mark.parametrize(
    "fixture,interior_faces",
    [("code54", 11), ("code46", 17), ("code64", 13)],
)
def test_patch_term_counts(fixture, interior_faces, request):
    code = request.getfixturevalue(fixture)
    t = code.lattice.base
    assert len(_interior_faces(t)) == interior_faces
    n_int_v = sum(t.interior_vertex)
    prisms = [x for x in code.terms if x.kind == "prism_z"]
    assert len(prisms) == interior_faces * 3
    vertex_terms = [x for x in code.terms if x.is_x_type]
    assert len(vertex_terms) == 3 * n_int_v * 3


def test_torus_term_counts(code44torus, code36torus):
    t = code44torus.lattice.base
    assert len(_interior_faces(t)) == t.n_faces  # no boundary on a torus
    assert len(code44torus.terms) == t.n_faces * 3 + 3 * t.n_vertices * 3
    t36 = code36torus.lattice.base
    hexes = [x for x in code36torus.terms if x.kind == "hexagon_z"]
    assert len(hexes) == t36.n_vertices * code36torus.lattice.layers


def test_term_weights_q4(code54):
    q = 4
    for term in code54.terms:
        if term.kind == "prism_z":
            assert term.pauli.weight() == 3 * code54.lattice.base.p
        elif term.kind == "vertex_planar_x":
            assert term.pauli.weight() == q
        elif term.kind == "vertex_mixed_x":
            assert term.pauli.weight() == 4  # 2 vertical + 2 opposite in-plane
            assert term.variant in (0, 1)


def test_term_weights_q6(code46):
    q = 6
    t1 = {}
    t2 = {}
    for term in code46.terms:
        if term.kind == "vertex_type1_x":
            assert term.pauli.weight() == 2 + q // 2
            t1.setdefault(term.location, []).append(term)
        elif term.kind == "vertex_type2_x":
            assert term.pauli.weight() == q
            t2[term.location] = term
    # the all-in-plane term is the product of the two mixed terms
    for loc, pair in t1.items():
        assert len(pair) == 2
        assert pair[0].pauli * pair[1].pauli == t2[loc].pauli


def test_vertical_x_makes_q_fractons(code54, code46):
    for code, q in ((code54, 4), (code46, 6)):
        l = code.lattice
        op = PauliString.single(code.n_qubits, "X", l.vertical_id(0, 1))
        syn = code.syndrome(op)
        assert len(syn) == q
        parts = classify_excitations(code, syn)
        assert all(p.ptype == "fracton" for p in parts)
        assert {p.location for p in parts} == {
            (f, 1) for f in l.base.faces_at_vertex(0)
        }


def test_inplane_x_makes_four_fractons(code54):
    l = code54.lattice
    op = PauliString.single(code54.n_qubits, "X", l.inplane_id(0, 1))
    parts = classify_excitations(code54, code54.syndrome(op))
    assert len(parts) == 4
    assert all(p.ptype == "fracton" for p in parts)
    faces = {p.location[0] for p in parts}
    intervals = {p.location[1] for p in parts}
    assert faces == set(l.base.edge_faces(0))
    assert intervals == {0, 1}  # straddling the layer


def test_inplane_x_on_hexated_lattice(code36torus):
    l = code36torus.lattice
    op = PauliString.single(code36torus.n_qubits, "X", l.inplane_id(0, 2))
    parts = classify_excitations(code36torus, code36torus.syndrome(op))
    kinds = sorted(p.kinds[0] for p in parts)
    assert kinds == ["hexagon_z"] * 2 + ["prism_z"] * 4


def test_inplane_z_makes_two_vertex_composites(code54, code46):
    for code, kinds in (
        (code54, ("vertex_mixed_x", "vertex_planar_x")),
        (code46, ("vertex_type1_x", "vertex_type2_x")),
    ):
        l = code.lattice
        op = PauliString.single(code.n_qubits, "Z", l.inplane_id(0, 1))
        parts = classify_excitations(code, code.syndrome(op))
        assert len(parts) == 2
        for p in parts:
            assert p.ptype == "composite"
            assert len(p.term_ids) == 2
            assert p.kinds == kinds
            assert p.location[1] == 1
        assert {p.location[0] for p in parts} == set(l.base.edges[0])


def test_vertical_z_composites(code54, code46):
    for code, kinds in (
        (code54, ("vertex_mixed_x", "vertex_mixed_x")),
        (code46, ("vertex_type1_x", "vertex_type1_x")),
    ):
        l = code.lattice
        op = PauliString.single(code.n_qubits, "Z", l.vertical_id(0, 1))
        parts = classify_excitations(code, code.syndrome(op))
        assert len(parts) == 2
        assert all(p.ptype == "composite" and p.kinds == kinds for p in parts)
        assert {p.location for p in parts} == {(0, 1), (0, 2)}


@given(st.integers(0, 2**60 - 1), st.integers(0, 2**60 - 1), st.integers(0, 2**60 - 1), st.integers(0, 2**60 - 1))
def test_syndrome_is_linear(ax, az, bx, bz):
    code = test_syndrome_is_linear.code
    a = PauliString(code.n_qubits, ax, az)
    b = PauliString(code.n_qubits, bx, bz)
    sa = set(code.syndrome(a).excited)
    sb = set(code.syndrome(b).excited)
    assert set(code.syndrome(a * b).excited) == sa ^ sb


@pytest.fixture(autouse=True, scope="module")
def _attach_code(code44torus):
    test_syndrome_is_linear.code = code44torus


def test_syndrome_length_mismatch(code44torus):
    with pytest.raises(ValueError):
        code44torus.syndrome(PauliString.identity(5))


def test_toggle_tables_match_singles(code54):
    n = code54.n_qubits
    for edge in range(0, n, 17):
        sx = code54.syndrome(PauliString.single(n, "X", edge)).excited
        sz = code54.syndrome(PauliString.single(n, "Z", edge)).excited
        assert sx == code54.toggled_by_x_on(edge)
        assert sz == code54.toggled_by_z_on(edge)


def test_corrupted_term_fails_audit():
    code = build_code(stack(ycube.build_periodic_flat(SchlafliPair(4, 4), 3), 3))
    assert code.audit()
    bad = build_code(stack(code.lattice.base, 3))
    t0 = bad.terms[0]
    # shift one leg of a prism to a wrong edge
    edges = t0.support()
    broken = t0.pauli * ycube.z_on(bad.n_qubits, [edges[0], (edges[0] + 1) % bad.n_qubits])
    bad.terms[0] = type(t0)(t0.id, t0.kind, t0.location, broken)
    rebuilt = type(bad)(bad.lattice, bad.terms, bad.include_hexagon)
    assert not rebuilt.audit()
    assert rebuilt.audit_violations()


def test_hexagon_requires_36():
    l = stack(ycube.build_periodic_flat(SchlafliPair(4, 4), 3), 3)
    with pytest.raises(UnsupportedLatticeError):
        build_code(l, include_hexagon=True)


def test_classification_species(code36torus):
    code = code36torus
    prism = next(t for t in code.terms if t.kind == "prism_z")
    hexa = next(t for t in code.terms if t.kind == "hexagon_z")
    lone = next(t for t in code.terms if t.kind == "vertex_type2_x")
    syn = ycube.Syndrome(frozenset({prism.id, hexa.id, lone.id}))
    parts = classify_excitations(code, syn)
    by_type = {p.ptype for p in parts}
    assert by_type == {"fracton", "unclassified"}
    keys = particle_keys(parts)
    assert len(keys) == 3
    assert all(len(k) == 3 for k in keys)
