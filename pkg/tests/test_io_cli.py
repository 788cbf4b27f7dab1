"""Model files, named-operator dispatch, command-line surface."""

import json

import pytest

import ycube
from ycube import PauliString, SchlafliPair, build_code, stack
from ycube.cli import main
from ycube.io import (
    build_model,
    build_named_operator,
    canonical_dumps,
    export_model,
    load_model,
    save_model,
)


@pytest.fixture(scope="module")
def model54(tmp_path_factory):
    path = tmp_path_factory.mktemp("models") / "p54.json"
    code = build_model(5, 4, 3, generations=2)
    save_model(code, str(path))
    return str(path)


@pytest.fixture(scope="module")
def model36(tmp_path_factory):
    path = tmp_path_factory.mktemp("models") / "p36.json"
    code = build_model(3, 6, 3, periodic_l=3, hexagon=True)
    save_model(code, str(path))
    return str(path)


# ---------------------------------------------------------------------------
# model files


def test_round_trip_is_byte_identical(code54, tmp_path):
    doc = export_model(code54)
    text = canonical_dumps(doc)
    again = export_model(load_model(doc))
    assert canonical_dumps(again) == text
    path = tmp_path / "m.json"
    save_model(code54, str(path))
    reloaded = load_model(str(path))
    assert canonical_dumps(export_model(reloaded)) == text
    assert path.read_text().endswith("\n")


def test_loaded_code_behaves(model36):
    code = load_model(model36)
    assert code.include_hexagon
    assert code.audit()


def test_load_rejects_inconsistent_doc(code54):
    doc = export_model(code54)
    doc["vertices"] = doc["vertices"][:-1]
    with pytest.raises(ValueError):
        load_model(doc)
    doc2 = export_model(code54)
    doc2["patch"] = {"kind": "sphere"}
    with pytest.raises(ValueError):
        load_model(doc2)


def test_build_model_needs_exactly_one_size():
    with pytest.raises(ValueError):
        build_model(4, 4, 3)
    with pytest.raises(ValueError):
        build_model(4, 4, 3, generations=1, periodic_l=3)


def test_terms_taken_verbatim(code54):
    doc = export_model(code54)
    # tamper with one term and confirm the tampering survives the load
    doc["terms"][0]["edges"] = doc["terms"][0]["edges"][:-1]
    loaded = load_model(doc)
    assert loaded.terms[0].pauli.weight() == code54.terms[0].pauli.weight() - 1
    assert not loaded.audit()


# ---------------------------------------------------------------------------
# named operator dispatch


def test_named_operator_kinds(code54, code46, code36torus):
    op = build_named_operator(
        code54, "truncated_geodesic", {"vertex": 0, "slot": 0, "layer": 1}
    )
    assert len(code54.syndrome(op)) == 2
    op = build_named_operator(code54, "stacked_geodesics", {"face": 0, "layer": 1})
    assert len(code54.syndrome(op)) == 1
    op = build_named_operator(
        code46, "tree_logical", {"root": 0, "parity": 0, "interval": 0}
    )
    assert len(code46.syndrome(op)) == 0
    op = build_named_operator(
        code46, "pruned_tree_series", {"face": 0, "interval": 1}
    )
    assert len(code46.syndrome(op)) == 1
    op = build_named_operator(
        code46, "wedge", {"root": 0, "parity": 0, "slot": 2, "interval": 0}
    )
    assert len(code46.syndrome(op)) == 0
    op = build_named_operator(
        code54, "z_string", {"string": "vertical", "vertex": 0}
    )
    assert len(code54.syndrome(op)) == 0
    op = build_named_operator(
        code36torus, "flat36:z_triangle", {"face": 0, "layer": 0}
    )
    assert len(code36torus.syndrome(op)) == 6


def test_named_operator_unknown_kinds(code54, code36torus):
    with pytest.raises(ValueError):
        build_named_operator(code54, "warp", {})
    with pytest.raises(ValueError):
        build_named_operator(code36torus, "flat36:spin", {})
    with pytest.raises(ValueError):
        build_named_operator(code54, "z_string", {"string": "helix"})


# ---------------------------------------------------------------------------
# CLI


def _run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_cli_gen_and_gsd(tmp_path, capsys):
    out = tmp_path / "t36.json"
    rc, stdout, _ = _run(
        capsys, "gen", "--p", "3", "--q", "6", "--periodic-l", "3",
        "--layers", "3", "--out", str(out),
    )
    assert rc == 0
    stats = json.loads(stdout)
    assert stats["vertices"] == 9 and stats["edges"] == 27 and stats["faces"] == 18
    assert out.exists()

    rc, stdout, _ = _run(capsys, "gsd", "--lattice", str(out))
    assert rc == 0
    doc = json.loads(stdout)
    assert list(doc) == ["n", "rank_x", "rank_z", "k"]
    assert doc["n"] == 108 and doc["k"] == 18

    rc, stdout, _ = _run(capsys, "gsd", "--lattice", str(out), "--hexagon")
    assert json.loads(stdout)["k"] == 12


def test_cli_syndrome(model54, capsys):
    code = load_model(model54)
    edge3 = code.lattice.vertical_id(0, 1)
    rc, stdout, _ = _run(
        capsys, "syndrome", "--lattice", model54, "--op", f"X@{edge3}"
    )
    assert rc == 0
    doc = json.loads(stdout)
    assert len(doc["excited"]) == 4
    assert all(t["kind"] == "prism_z" for t in doc["terms"])
    assert all(p["ptype"] == "fracton" for p in doc["particles"])


def test_cli_makeop(model36, capsys):
    rc, stdout, _ = _run(
        capsys, "makeop", "--lattice", model36, "--kind", "flat36:z_triangle",
        "--params", '{"face": 0, "layer": 0}',
    )
    assert rc == 0
    code = load_model(model36)
    op = PauliString.from_text(code.n_qubits, stdout.strip())
    assert op.weight() == 3


def test_cli_mobility(model54, capsys):
    code = load_model(model54)
    edge3 = code.lattice.inplane_id(0, 1)
    rc, stdout, _ = _run(
        capsys, "mobility", "--lattice", model54, "--op", f"Z@{edge3}",
        "--moves", "z",
    )
    assert rc == 0
    doc = json.loads(stdout)
    assert doc["truncated"] is False
    assert len(doc["initial"]) == 2
    assert any(p["ptype"] == "composite" for p in doc["positions"])


def test_cli_logicals(tmp_path, capsys):
    out = tmp_path / "t44.json"
    _run(
        capsys, "gen", "--p", "4", "--q", "4", "--periodic-l", "3",
        "--layers", "3", "--out", str(out),
    )
    rc, stdout, _ = _run(capsys, "logicals", "--lattice", str(out))
    assert rc == 0
    doc = json.loads(stdout)
    assert doc["k"] == 15 == len(doc["pairs"])
    code = load_model(str(out))
    x0 = PauliString.from_text(code.n_qubits, doc["pairs"][0]["x"])
    z0 = PauliString.from_text(code.n_qubits, doc["pairs"][0]["z"])
    assert x0.symplectic_form(z0) == 1


def test_cli_errors_are_json_on_stderr(tmp_path, capsys, model54):
    rc, stdout, stderr = _run(capsys, "gsd", "--lattice", str(tmp_path / "no.json"))
    assert rc == 1 and stdout == ""
    err = json.loads(stderr)
    assert err["error"]["type"] == "FileNotFoundError"
    assert err["error"]["message"]

    rc, _, stderr = _run(
        capsys, "syndrome", "--lattice", model54, "--op", "Q@0"
    )
    assert rc == 1
    assert json.loads(stderr)["error"]["type"] == "ValueError"

    rc, _, stderr = _run(
        capsys, "makeop", "--lattice", model54, "--kind", "warp", "--params", "{}"
    )
    assert rc == 1
    assert "warp" in json.loads(stderr)["error"]["message"]


def test_cli_gsd_of_empty_term_file(tmp_path, capsys, code44torus):
    doc = export_model(code44torus)
    doc["terms"] = []
    path = tmp_path / "empty.json"
    path.write_text(canonical_dumps(doc) + "\n")
    rc, stdout, _ = _run(capsys, "gsd", "--lattice", str(path))
    assert rc == 0
    out = json.loads(stdout)
    assert out["k"] == out["n"] == code44torus.n_qubits
