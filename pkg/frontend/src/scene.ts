/** Pure scene construction.  The scene is a plain data structure the canvas
 * renderer walks; building it does no physics.  Markers come verbatim from
 * the server's particle classification, only filtered to the visible layer
 * and attached to drawing coordinates. */

import {
  EdgeShape,
  Pt,
  centroid,
  edgeMidpoint,
  edgeShape,
} from "./geometry.js";
import type {
  LatticeDoc,
  ParticleDoc,
  SessionState,
  ViewState,
} from "./types.js";

export interface SceneEdge {
  edgeId: number;
  shape: EdgeShape;
  selected: boolean;
  overlaid: boolean;
  hitAt: Pt;
}

export interface SceneHandle {
  edgeId: number;
  vertex: number;
  at: Pt;
  selected: boolean;
  overlaid: boolean;
}

export type MarkerGlyph = "star" | "diamond" | "ring";

export interface SceneMarker {
  glyph: MarkerGlyph;
  at: Pt;
  ptype: string;
  location: number[];
  kinds: string[];
}

export interface Scene {
  hyperbolic: boolean;
  boundaryCircle: boolean; // draw the unit circle for disk models
  edges: SceneEdge[];
  handles: SceneHandle[];
  markers: SceneMarker[];
  hiddenParticles: number;
  shade: Pt[];
}

export function isHyperbolic(p: number, q: number): boolean {
  return (p - 2) * (q - 2) > 4;
}

const GLYPHS: Record<ParticleDoc["ptype"], MarkerGlyph> = {
  fracton: "star",
  composite: "diamond",
  unclassified: "ring",
};

function vertexPt(lat: LatticeDoc, v: number): Pt {
  const doc = lat.vertices[v];
  return { x: doc.x, y: doc.y };
}

function facePt(lat: LatticeDoc, f: number): Pt {
  return centroid(lat.faces[f].vertices.map((v) => vertexPt(lat, v)));
}

/** Particles sit on faces (fractons, between layers) or vertices (the rest). */
export function particlePoint(lat: LatticeDoc, part: ParticleDoc): Pt {
  const site = part.location[0];
  return part.ptype === "fracton" ? facePt(lat, site) : vertexPt(lat, site);
}

export function buildScene(
  lat: LatticeDoc,
  view: ViewState,
  state: SessionState | null,
  mobilityPositions: ParticleDoc[] = [],
): Scene {
  const hyper = isHyperbolic(lat.schlafli.p, lat.schlafli.q);
  const layer = view.currentLayer;
  const overlaid = new Set(view.overlay ? view.overlay.edges : []);

  const edges: SceneEdge[] = [];
  const handles: SceneHandle[] = [];
  for (const e of lat.edges3) {
    if (e.a[1] !== layer) continue;
    if (e.kind === "in_plane") {
      const shape = edgeShape(vertexPt(lat, e.a[0]), vertexPt(lat, e.b[0]), hyper);
      edges.push({
        edgeId: e.id,
        shape,
        selected: view.selection === e.id,
        overlaid: overlaid.has(e.id),
        hitAt: edgeMidpoint(shape),
      });
    } else {
      handles.push({
        edgeId: e.id,
        vertex: e.a[0],
        at: vertexPt(lat, e.a[0]),
        selected: view.selection === e.id,
        overlaid: overlaid.has(e.id),
      });
    }
  }

  const markers: SceneMarker[] = [];
  let hidden = 0;
  for (const part of state ? state.particles : []) {
    if (part.location[1] !== layer) {
      hidden += 1;
      continue;
    }
    markers.push({
      glyph: GLYPHS[part.ptype] ?? "ring",
      at: particlePoint(lat, part),
      ptype: part.ptype,
      location: part.location,
      kinds: part.kinds,
    });
  }

  const shade = mobilityPositions
    .filter((p) => p.location[1] === layer)
    .map((p) => particlePoint(lat, p));

  return {
    hyperbolic: hyper,
    boundaryCircle: hyper && lat.patch.kind === "disk",
    edges,
    handles,
    markers,
    hiddenParticles: hidden,
    shade,
  };
}
