"""Session service: lifecycle, concurrency guard, persistence."""

import pytest
from fastapi.testclient import TestClient

from ycube.service import create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


def _make_session(client, **params):
    body = {"p": 4, "q": 4, "layers": 3, "periodic_l": 3}
    body.update(params)
    r = client.post("/sessions", json=body)
    assert r.status_code == 200, r.text
    return r.json()["session_id"]


def test_create_returns_lattice(client):
    r = client.post("/sessions", json={"p": 4, "q": 4, "layers": 3, "periodic_l": 3})
    assert r.status_code == 200
    doc = r.json()
    assert doc["session_id"]
    lat = doc["lattice"]
    assert lat["schlafli"] == {"p": 4, "q": 4}
    assert len(lat["vertices"]) == 9
    assert len(lat["edges3"]) == 18 * 3 + 9 * 3
    assert lat["patch"]["kind"] == "torus"


def test_create_validation(client):
    assert client.post("/sessions", json={"p": 4, "q": 4}).status_code == 422
    r = client.post("/sessions", json={"p": 3, "q": 4, "layers": 3, "periodic_l": 3})
    assert r.status_code == 422  # spherical pair
    r = client.post("/sessions", json={"p": 4, "q": 4, "layers": 3})
    assert r.status_code == 422  # no size given


def test_unknown_session_404(client):
    assert client.get("/sessions/deadbeef").status_code == 404
    assert client.post("/sessions/deadbeef/apply", json={}).status_code == 404


def test_apply_undo_reset_cycle(client):
    sid = _make_session(client)
    r = client.get(f"/sessions/{sid}")
    assert r.json()["version"] == 0
    assert r.json()["applied"] == ""
    assert r.json()["particles"] == []

    # a vertical X pops the four surrounding prisms
    lat = r.json()["lattice"]
    vertical = next(e["id"] for e in lat["edges3"] if e["kind"] == "vertical")
    r = client.post(f"/sessions/{sid}/apply", json={"edge_id": vertical, "pauli": "X"})
    assert r.status_code == 200
    state = r.json()
    assert state["version"] == 1
    assert len(state["syndrome"]["excited"]) == 4
    assert all(p["ptype"] == "fracton" for p in state["particles"])
    assert state["logical"] is False

    r = client.post(f"/sessions/{sid}/undo", json={})
    assert r.json()["version"] == 2
    assert r.json()["syndrome"]["excited"] == []

    # undo on empty history is a no-op
    r = client.post(f"/sessions/{sid}/undo", json={})
    assert r.json()["version"] == 2

    client.post(f"/sessions/{sid}/apply", json={"edge_id": vertical, "pauli": "X"})
    r = client.post(f"/sessions/{sid}/reset", json={})
    assert r.json()["syndrome"]["excited"] == []


def test_apply_validation(client):
    sid = _make_session(client)
    r = client.post(f"/sessions/{sid}/apply", json={"edge_id": -1, "pauli": "X"})
    assert r.status_code == 422
    r = client.post(f"/sessions/{sid}/apply", json={"edge_id": 0, "pauli": "W"})
    assert r.status_code == 422
    r = client.post(f"/sessions/{sid}/apply", json={"pauli": "X"})
    assert r.status_code == 422


def test_version_conflict_409(client):
    sid = _make_session(client)
    ok = client.post(f"/sessions/{sid}/apply", json={"edge_id": 0, "pauli": "X", "version": 0})
    assert ok.status_code == 200
    stale = client.post(f"/sessions/{sid}/apply", json={"edge_id": 1, "pauli": "X", "version": 0})
    assert stale.status_code == 409
    current = client.post(f"/sessions/{sid}/apply", json={"edge_id": 1, "pauli": "X", "version": 1})
    assert current.status_code == 200


def test_operator_endpoint(client):
    sid = _make_session(client, p=3, q=6, layers=3, periodic_l=3, hexagon=True)
    r = client.post(
        f"/sessions/{sid}/operator",
        json={"kind": "flat36:z_triangle", "params": {"face": 0, "layer": 0}},
    )
    assert r.status_code == 200
    state = r.json()
    assert len(state["particles"]) == 3
    assert all(p["ptype"] == "composite" for p in state["particles"])

    r = client.post(f"/sessions/{sid}/operator", json={"kind": "warp", "params": {}})
    assert r.status_code == 422
    # failed operator left no trace
    assert client.get(f"/sessions/{sid}").json()["version"] == 1


def test_logical_flag(client):
    r = client.post("/sessions", json={"p": 4, "q": 6, "layers": 3, "generations": 2})
    sid = r.json()["session_id"]
    r = client.post(
        f"/sessions/{sid}/operator",
        json={"kind": "z_string", "params": {"string": "vertical", "vertex": 0}},
    )
    assert r.status_code == 200
    state = r.json()
    assert state["syndrome"]["excited"] == []
    assert state["logical"] is True


def test_mobility_endpoint(client):
    sid = _make_session(client, p=5, q=4, layers=3, periodic_l=None, generations=2)
    r = client.get(f"/sessions/{sid}")
    lat = r.json()["lattice"]
    inplane = next(e["id"] for e in lat["edges3"] if e["kind"] == "in_plane")
    client.post(f"/sessions/{sid}/apply", json={"edge_id": inplane, "pauli": "Z"})
    r = client.post(f"/sessions/{sid}/mobility", json={"moves": "z"})
    assert r.status_code == 200
    doc = r.json()
    assert doc["truncated"] is False
    assert len(doc["initial"]) == 2
    assert any(p["ptype"] == "composite" for p in doc["positions"])
    bad = client.post(f"/sessions/{sid}/mobility", json={"moves": "z", "budget": 0})
    assert bad.status_code == 422


def test_persistence_across_instances(tmp_path):
    state_dir = str(tmp_path / "state")
    first = TestClient(create_app(state_dir=state_dir))
    sid = _make_session(first)
    first.post(f"/sessions/{sid}/apply", json={"edge_id": 0, "pauli": "Z"})

    second = TestClient(create_app(state_dir=state_dir))
    r = second.get(f"/sessions/{sid}")
    assert r.status_code == 200
    state = r.json()
    assert state["version"] == 1
    assert state["applied"] == "Z@0"
    assert state["syndrome"]["excited"]
