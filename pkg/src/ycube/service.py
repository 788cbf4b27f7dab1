"""HTTP session service driving the interactive explorer.

Sessions are in-memory (optionally mirrored to a state directory, one JSON
file per session, enough to replay).  Per-session writes are serialized under
a lock; an optional `version` field in mutating requests turns lost-update
races into 409s instead of silent interleaving.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from typing import Dict, List, Optional

from fastapi import Body, FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from . import gf2
from .code import StabilizerCode, classify_excitations
from .errors import YcubeError
from .io import build_model, build_named_operator, export_model
from .mobility import MobilityQuery, reachable
from .pauli import PauliString


class Session:
    def __init__(self, sid: str, params: Dict, code: StabilizerCode):
        self.id = sid
        self.params = params
        self.code = code
        self.history: List[Dict] = []
        self.version = 0
        self.lock = threading.Lock()

    # -- operator reconstruction ------------------------------------------
    def op_for(self, entry: Dict) -> PauliString:
        n = self.code.n_qubits
        if entry["type"] == "apply":
            return PauliString.single(n, entry["pauli"], entry["edge_id"])
        return build_named_operator(self.code, entry["kind"], entry["params"])

    def applied(self) -> PauliString:
        acc = PauliString.identity(self.code.n_qubits)
        for entry in self.history:
            acc = acc * self.op_for(entry)
        return acc


class SessionStore:
    def __init__(self, state_dir: Optional[str] = None):
        self.state_dir = state_dir
        self.sessions: Dict[str, Session] = {}
        self.lock = threading.Lock()
        if state_dir:
            os.makedirs(state_dir, exist_ok=True)

    def create(self, params: Dict) -> Session:
        code = build_model(
            params["p"],
            params["q"],
            params["layers"],
            generations=params.get("generations"),
            periodic_l=params.get("periodic_l"),
            hexagon=bool(params.get("hexagon", False)),
        )
        sid = uuid.uuid4().hex
        ses = Session(sid, params, code)
        with self.lock:
            self.sessions[sid] = ses
        self.persist(ses)
        return ses

    def get(self, sid: str) -> Session:
        with self.lock:
            ses = self.sessions.get(sid)
        if ses is None:
            ses = self._load(sid)
        if ses is None:
            raise HTTPException(status_code=404, detail=f"unknown session {sid}")
        return ses

    def persist(self, ses: Session):
        if not self.state_dir:
            return
        doc = {"params": ses.params, "history": ses.history, "version": ses.version}
        path = os.path.join(self.state_dir, f"{ses.id}.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)

    def _load(self, sid: str) -> Optional[Session]:
        if not self.state_dir or not sid.isalnum():
            return None
        path = os.path.join(self.state_dir, f"{sid}.json")
        if not os.path.exists(path):
            return None
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        code = build_model(
            doc["params"]["p"],
            doc["params"]["q"],
            doc["params"]["layers"],
            generations=doc["params"].get("generations"),
            periodic_l=doc["params"].get("periodic_l"),
            hexagon=bool(doc["params"].get("hexagon", False)),
        )
        ses = Session(sid, doc["params"], code)
        ses.history = doc["history"]
        ses.version = doc["version"]
        with self.lock:
            self.sessions[sid] = ses
        return ses


def _state_payload(ses: Session) -> Dict:
    code = ses.code
    op = ses.applied()
    syn = code.syndrome(op)
    parts = classify_excitations(code, syn)
    logical = (
        len(syn) == 0
        and not op.is_identity()
        and not gf2.in_stabilizer_group(code, op)
    )
    return {
        "session_id": ses.id,
        "version": ses.version,
        "applied": op.to_text(),
        "syndrome": {
            "excited": sorted(syn.excited),
            "terms": [
                {
                    "id": tid,
                    "kind": code.terms[tid].kind,
                    "location": list(code.terms[tid].location),
                }
                for tid in sorted(syn.excited)
            ],
        },
        "particles": [
            {"ptype": p.ptype, "location": list(p.location), "kinds": list(p.kinds)}
            for p in parts
        ],
        "logical": logical,
    }


def _check_version(ses: Session, body: Dict):
    want = body.get("version")
    if want is not None and want != ses.version:
        raise HTTPException(
            status_code=409,
            detail=f"session version is {ses.version}, request expected {want}",
        )


def create_app(state_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="ycube service")
    # the browser explorer may be served from a different local port
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(state_dir)

    @app.post("/sessions")
    def create_session(body: Dict = Body(...)):
        for field in ("p", "q", "layers"):
            if field not in body:
                raise HTTPException(status_code=422, detail=f"missing field {field!r}")
        try:
            ses = store.create(body)
        except (YcubeError, ValueError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return {"session_id": ses.id, "lattice": export_model(ses.code)}

    @app.get("/sessions/{sid}")
    def get_session(sid: str):
        ses = store.get(sid)
        with ses.lock:
            payload = _state_payload(ses)
            payload["lattice"] = export_model(ses.code)
        return payload

    @app.post("/sessions/{sid}/apply")
    def apply_move(sid: str, body: Dict = Body(...)):
        ses = store.get(sid)
        with ses.lock:
            _check_version(ses, body)
            edge = body.get("edge_id")
            pauli = body.get("pauli")
            if not isinstance(edge, int) or not 0 <= edge < ses.code.n_qubits:
                raise HTTPException(status_code=422, detail=f"invalid edge_id {edge!r}")
            if pauli not in ("X", "Z", "Y"):
                raise HTTPException(status_code=422, detail=f"invalid pauli {pauli!r}")
            ses.history.append({"type": "apply", "edge_id": edge, "pauli": pauli})
            ses.version += 1
            store.persist(ses)
            return _state_payload(ses)

    @app.post("/sessions/{sid}/operator")
    def apply_operator(sid: str, body: Dict = Body(...)):
        ses = store.get(sid)
        with ses.lock:
            _check_version(ses, body)
            kind = body.get("kind")
            params = body.get("params", {})
            entry = {"type": "operator", "kind": kind, "params": params}
            try:
                ses.op_for(entry)  # validate before committing
            except (YcubeError, ValueError, KeyError, TypeError) as exc:
                raise HTTPException(status_code=422, detail=str(exc))
            ses.history.append(entry)
            ses.version += 1
            store.persist(ses)
            return _state_payload(ses)

    @app.post("/sessions/{sid}/undo")
    def undo(sid: str, body: Dict = Body(default={})):
        ses = store.get(sid)
        with ses.lock:
            _check_version(ses, body)
            if ses.history:
                ses.history.pop()
                ses.version += 1
                store.persist(ses)
            return _state_payload(ses)

    @app.post("/sessions/{sid}/reset")
    def reset(sid: str, body: Dict = Body(default={})):
        ses = store.get(sid)
        with ses.lock:
            _check_version(ses, body)
            ses.history.clear()
            ses.version += 1
            store.persist(ses)
            return _state_payload(ses)

    @app.post("/sessions/{sid}/mobility")
    def mobility(sid: str, body: Dict = Body(...)):
        ses = store.get(sid)
        with ses.lock:
            moves = body.get("moves", "both")
            try:
                query = MobilityQuery(
                    ses.code,
                    ses.applied(),
                    move_alphabet=moves,
                    budget=body.get("budget"),
                    max_states=body.get("max_states", 50_000),
                )
            except ValueError as exc:
                raise HTTPException(status_code=422, detail=str(exc))
            report = reachable(query)
            return {
                "initial": [
                    {"ptype": p.ptype, "location": list(p.location), "kinds": list(p.kinds)}
                    for p in report.initial_particles
                ],
                "positions": [
                    {"ptype": k[0], "location": list(k[1]), "kinds": list(k[2])}
                    for k in sorted(report.reachable_positions)
                ],
                "visited_state_count": report.visited_state_count,
                "truncated": report.truncated,
            }

    return app
