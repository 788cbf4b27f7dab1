/** Thin fetch client for the session service.  No physics here: the client
 * forwards requests and returns server JSON untouched. */

import type { LatticeDoc, MobilityResult, SessionState } from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}

async function jsonOrThrow(res: Response): Promise<any> {
  const body = await res.json().catch(() => ({}));
  if (!res.ok) {
    const detail = typeof body?.detail === "string" ? body.detail : res.statusText;
    throw new ApiError(res.status, detail);
  }
  return body;
}

export interface CreateParams {
  p: number;
  q: number;
  layers: number;
  generations?: number;
  periodic_l?: number;
  hexagon?: boolean;
}

export class Client {
  constructor(public baseUrl: string) {}

  private async post(path: string, body: unknown): Promise<any> {
    const res = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    return jsonOrThrow(res);
  }

  async createSession(params: CreateParams): Promise<{ session_id: string; lattice: LatticeDoc }> {
    return this.post("/sessions", params);
  }

  async getSession(sid: string): Promise<SessionState & { lattice: LatticeDoc }> {
    return jsonOrThrow(await fetch(`${this.baseUrl}/sessions/${sid}`));
  }

  async apply(sid: string, edgeId: number, pauli: "X" | "Y" | "Z", version?: number): Promise<SessionState> {
    return this.post(`/sessions/${sid}/apply`, { edge_id: edgeId, pauli, version });
  }

  async applyOperator(
    sid: string,
    kind: string,
    params: Record<string, unknown>,
    version?: number,
  ): Promise<SessionState> {
    return this.post(`/sessions/${sid}/operator`, { kind, params, version });
  }

  async undo(sid: string, version?: number): Promise<SessionState> {
    return this.post(`/sessions/${sid}/undo`, { version });
  }

  async reset(sid: string, version?: number): Promise<SessionState> {
    return this.post(`/sessions/${sid}/reset`, { version });
  }

  async mobility(
    sid: string,
    moves: "x" | "z" | "both",
    budget?: number,
  ): Promise<MobilityResult> {
    return this.post(`/sessions/${sid}/mobility`, { moves, budget });
  }
}
