"""Command-line front end.

Every command prints JSON (or sparse operator text for makeop) on stdout and
exits 0; failures print one JSON error object on stderr and exit 1.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import gf2
from .code import build_code, classify_excitations
from .errors import YcubeError
from .io import (
    build_model,
    build_named_operator,
    canonical_dumps,
    export_model,
    load_model,
    save_model,
)
from .mobility import MobilityQuery, reachable
from .pauli import PauliString


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ycube", description="layered {p,q} stabilizer models")
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="build a lattice + term file")
    gen.add_argument("--p", type=int, required=True)
    gen.add_argument("--q", type=int, required=True)
    size = gen.add_mutually_exclusive_group(required=True)
    size.add_argument("--generations", type=int)
    size.add_argument("--periodic-l", type=int, dest="periodic_l")
    gen.add_argument("--layers", type=int, required=True)
    gen.add_argument("--hexagon", action="store_true")
    gen.add_argument("--out", required=True)

    gsd = sub.add_parser("gsd", help="ground-space dimension exponent")
    gsd.add_argument("--lattice", required=True)
    gsd.add_argument("--hexagon", action="store_true")

    syn = sub.add_parser("syndrome", help="excitations of a Pauli operator")
    syn.add_argument("--lattice", required=True)
    syn.add_argument("--op", required=True)

    mk = sub.add_parser("makeop", help="construct a named operator")
    mk.add_argument("--lattice", required=True)
    mk.add_argument("--kind", required=True)
    mk.add_argument("--params", required=True)

    mob = sub.add_parser("mobility", help="reachable excitation positions")
    mob.add_argument("--lattice", required=True)
    mob.add_argument("--op", required=True)
    mob.add_argument("--moves", choices=["x", "z", "both"], required=True)
    mob.add_argument("--budget", type=int)
    mob.add_argument("--max-states", type=int, dest="max_states", default=100_000)

    log = sub.add_parser("logicals", help="a symplectic logical-pair basis")
    log.add_argument("--lattice", required=True)

    srv = sub.add_parser("serve", help="run the HTTP session service")
    srv.add_argument("--port", type=int, required=True)
    srv.add_argument("--state-dir", dest="state_dir")
    return ap


def _cmd_gen(args) -> int:
    code = build_model(
        args.p,
        args.q,
        args.layers,
        generations=args.generations,
        periodic_l=args.periodic_l,
        hexagon=args.hexagon,
    )
    save_model(code, args.out)
    t = code.lattice.base
    print(
        json.dumps(
            {
                "out": args.out,
                "vertices": t.n_vertices,
                "edges": t.n_edges,
                "faces": t.n_faces,
                "qubits": code.n_qubits,
                "terms": len(code.terms),
            }
        )
    )
    return 0


def _cmd_gsd(args) -> int:
    code = load_model(args.lattice)
    if args.hexagon:
        code = build_code(code.lattice, include_hexagon=True)
    n = code.n_qubits
    rx = gf2.rank(code.x_rows())
    rz = gf2.rank(code.z_rows())
    print(json.dumps({"n": n, "rank_x": rx, "rank_z": rz, "k": n - rx - rz}))
    return 0


def _particles_json(parts) -> List[dict]:
    return [
        {"ptype": p.ptype, "location": list(p.location), "kinds": list(p.kinds)}
        for p in parts
    ]


def _cmd_syndrome(args) -> int:
    code = load_model(args.lattice)
    op = PauliString.from_text(code.n_qubits, args.op)
    syn = code.syndrome(op)
    parts = classify_excitations(code, syn)
    print(
        json.dumps(
            {
                "excited": sorted(syn.excited),
                "terms": [
                    {
                        "id": tid,
                        "kind": code.terms[tid].kind,
                        "location": list(code.terms[tid].location),
                    }
                    for tid in sorted(syn.excited)
                ],
                "particles": _particles_json(parts),
            }
        )
    )
    return 0


def _cmd_makeop(args) -> int:
    code = load_model(args.lattice)
    params = json.loads(args.params)
    op = build_named_operator(code, args.kind, params)
    print(op.to_text())
    return 0


def _cmd_mobility(args) -> int:
    code = load_model(args.lattice)
    op = PauliString.from_text(code.n_qubits, args.op)
    query = MobilityQuery(
        code,
        op,
        move_alphabet=args.moves,
        budget=args.budget,
        max_states=args.max_states,
    )
    report = reachable(query)
    positions = [
        {"ptype": k[0], "location": list(k[1]), "kinds": list(k[2])}
        for k in sorted(report.reachable_positions)
    ]
    print(
        json.dumps(
            {
                "initial": _particles_json(report.initial_particles),
                "positions": positions,
                "visited_state_count": report.visited_state_count,
                "truncated": report.truncated,
            }
        )
    )
    return 0


def _cmd_logicals(args) -> int:
    code = load_model(args.lattice)
    pairs = gf2.logical_basis(code)
    print(
        json.dumps(
            {
                "k": len(pairs),
                "pairs": [{"x": x.to_text(), "z": z.to_text()} for x, z in pairs],
            }
        )
    )
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(state_dir=args.state_dir)
    uvicorn.run(app, host="127.0.0.1", port=args.port, log_level="warning")
    return 0


_DISPATCH = {
    "gen": _cmd_gen,
    "gsd": _cmd_gsd,
    "syndrome": _cmd_syndrome,
    "makeop": _cmd_makeop,
    "mobility": _cmd_mobility,
    "logicals": _cmd_logicals,
    "serve": _cmd_serve,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (YcubeError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(
            canonical_dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}),
            file=sys.stderr,
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
