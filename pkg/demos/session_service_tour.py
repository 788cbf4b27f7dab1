"""Walk the HTTP session service end to end, in process.

The same app serves the browser explorer; here we drive it with a test
client.  Run it as a real server with:

    uvicorn ycube.service:create_app --factory
"""

from fastapi.testclient import TestClient

from ycube.service import create_app

client = TestClient(create_app())

# create a session on a pentagonal patch
r = client.post("/sessions", json={"p": 5, "q": 4, "layers": 3, "generations": 2})
doc = r.json()
sid = doc["session_id"]
lat = doc["lattice"]
print(f"session {sid[:8]}...: ({lat['schlafli']['p']},{lat['schlafli']['q']}) "
      f"{lat['patch']['kind']}, {len(lat['vertices'])} vertices, "
      f"{len(lat['edges3'])} edges, {len(lat['terms'])} terms")

# flip one vertical X edge: a ring of fractons appears
vertical0 = next(e["id"] for e in lat["edges3"] if e["kind"] == "vertical")
r = client.post(f"/sessions/{sid}/apply", json={"edge_id": vertical0, "pauli": "X"})
state = r.json()
print(f"\napply X@{vertical0}: {len(state['syndrome']['excited'])} excited terms, "
      f"particles: {[p['ptype'] for p in state['particles']]}")

# how far can that configuration move?
r = client.post(f"/sessions/{sid}/mobility", json={"moves": "x"})
rep = r.json()
print(f"mobility: {len(rep['positions'])} reachable positions, "
      f"truncated={rep['truncated']}")

# a named operator with syndrome checks built in
r = client.post(
    f"/sessions/{sid}/reset", json={"version": state["version"]}
)
version = r.json()["version"]
r = client.post(
    f"/sessions/{sid}/operator",
    json={"kind": "truncated_geodesic", "params": {"vertex": 0, "slot": 0, "layer": 1},
          "version": version},
)
state = r.json()
print(f"\ntruncated geodesic: applied {state['applied'][:40]}..., "
      f"{len(state['particles'])} fractons")

# stale writes are refused, undo rolls back
r = client.post(f"/sessions/{sid}/apply", json={"edge_id": 0, "pauli": "Z", "version": 0})
print(f"stale version: HTTP {r.status_code}")
r = client.post(f"/sessions/{sid}/undo", json={})
print(f"undo: syndrome now {len(r.json()['syndrome']['excited'])} terms, "
      f"applied = {r.json()['applied']!r}")
