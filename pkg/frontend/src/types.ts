/** Server payload shapes (mirrors the session service JSON) and view state. */

export interface Schlafli {
  p: number;
  q: number;
}

export type Patch =
  | { kind: "disk"; generations: number }
  | { kind: "torus"; l: number };

export interface VertexDoc {
  id: number;
  x: number;
  y: number;
  interior: boolean;
}

export interface Edge3Doc {
  id: number;
  kind: "in_plane" | "vertical";
  /** (vertex, layer) endpoints; vertical edges join (v, l) to (v, l+1 mod layers). */
  a: [number, number];
  b: [number, number];
}

export interface FaceDoc {
  id: number;
  vertices: number[];
}

export interface TermDoc {
  id: number;
  kind: string;
  location: number[];
  edges: number[];
}

export interface LatticeDoc {
  schlafli: Schlafli;
  patch: Patch;
  layers: number;
  vertices: VertexDoc[];
  edges3: Edge3Doc[];
  faces: FaceDoc[];
  prisms: { id: number; face: number; interval: number }[];
  terms: TermDoc[];
}

export interface SyndromeTerm {
  id: number;
  kind: string;
  location: number[];
}

export interface ParticleDoc {
  ptype: "fracton" | "composite" | "unclassified";
  location: number[];
  kinds: string[];
}

export interface SessionState {
  session_id: string;
  version: number;
  applied: string;
  syndrome: { excited: number[]; terms: SyndromeTerm[] };
  particles: ParticleDoc[];
  logical: boolean;
}

export interface MobilityResult {
  initial: ParticleDoc[];
  positions: ParticleDoc[];
  visited_state_count: number;
  truncated: boolean;
}

/** Overlay: a prebuilt operator previewed before applying. */
export interface Overlay {
  kind: string;
  params: Record<string, unknown>;
  /** edge qubit ids parsed from the server-rendered operator text */
  edges: number[];
}

export interface ViewState {
  sessionId: string | null;
  currentLayer: number;
  overlay: Overlay | null;
  selection: number | null; // hovered/selected edge qubit id
}

/** currentLayer must stay inside [0, layers). */
export function clampLayer(layer: number, layers: number): number {
  if (!Number.isFinite(layer)) return 0;
  const n = Math.trunc(layer);
  if (n < 0) return 0;
  if (n >= layers) return layers - 1;
  return n;
}

/** "X@5 Z@12 X@12" -> qubit ids touched (for overlay highlighting). */
export function opTextEdges(text: string): number[] {
  const out = new Set<number>();
  for (const tok of text.split(/\s+/)) {
    if (!tok) continue;
    const m = /^[XYZ]@(\d+)$/.exec(tok);
    if (m) out.add(Number(m[1]));
  }
  return [...out].sort((a, b) => a - b);
}
