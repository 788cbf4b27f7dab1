/** Canvas renderer: walks a Scene and draws it.  All styling lives here. */

import { Pt, Transform, apply, fitTransform } from "./geometry.js";
import type { Scene } from "./scene.js";
import type { LatticeDoc } from "./types.js";

const EDGE = "#7a8699";
const EDGE_SELECTED = "#ffb347";
const OVERLAY = "#2ec4b6";
const STAR = "#f4c430";
const DIAMOND = "#4477ee";
const RING = "#cc5599";
const SHADE = "rgba(46, 196, 182, 0.25)";

export function latticeTransform(lat: LatticeDoc, size: number): Transform {
  return fitTransform(
    lat.vertices.map((v) => ({ x: v.x, y: v.y })),
    size,
  );
}

function drawStar(ctx: CanvasRenderingContext2D, c: Pt, r: number) {
  ctx.beginPath();
  for (let i = 0; i < 10; i++) {
    const ang = -Math.PI / 2 + (i * Math.PI) / 5;
    const rad = i % 2 === 0 ? r : r * 0.45;
    const x = c.x + rad * Math.cos(ang);
    const y = c.y + rad * Math.sin(ang);
    if (i === 0) ctx.moveTo(x, y);
    else ctx.lineTo(x, y);
  }
  ctx.closePath();
  ctx.fill();
  ctx.stroke();
}

function drawDiamond(ctx: CanvasRenderingContext2D, c: Pt, r: number) {
  ctx.beginPath();
  ctx.moveTo(c.x, c.y - r);
  ctx.lineTo(c.x + r, c.y);
  ctx.lineTo(c.x, c.y + r);
  ctx.lineTo(c.x - r, c.y);
  ctx.closePath();
  ctx.fill();
  ctx.stroke();
}

export function renderScene(
  ctx: CanvasRenderingContext2D,
  scene: Scene,
  t: Transform,
  size: number,
) {
  ctx.clearRect(0, 0, size, size);

  if (scene.boundaryCircle) {
    const o = apply(t, { x: 0, y: 0 });
    ctx.strokeStyle = "#3a4252";
    ctx.lineWidth = 1;
    ctx.beginPath();
    ctx.arc(o.x, o.y, t.scale, 0, 2 * Math.PI);
    ctx.stroke();
  }

  for (const p of scene.shade) {
    const c = apply(t, p);
    ctx.fillStyle = SHADE;
    ctx.beginPath();
    ctx.arc(c.x, c.y, 11, 0, 2 * Math.PI);
    ctx.fill();
  }

  for (const e of scene.edges) {
    ctx.strokeStyle = e.overlaid ? OVERLAY : e.selected ? EDGE_SELECTED : EDGE;
    ctx.lineWidth = e.overlaid || e.selected ? 3 : 1.25;
    ctx.beginPath();
    if (e.shape.kind === "segment") {
      const a = apply(t, e.shape.a);
      const b = apply(t, e.shape.b);
      ctx.moveTo(a.x, a.y);
      ctx.lineTo(b.x, b.y);
    } else {
      // canvas arcs need start/end angles in the flipped-y frame
      const c = apply(t, e.shape.center);
      const a = apply(t, e.shape.a);
      const b = apply(t, e.shape.b);
      const r = e.shape.radius * t.scale;
      let a0 = Math.atan2(a.y - c.y, a.x - c.x);
      let a1 = Math.atan2(b.y - c.y, b.x - c.x);
      let delta = a1 - a0;
      while (delta <= -Math.PI) delta += 2 * Math.PI;
      while (delta > Math.PI) delta -= 2 * Math.PI;
      ctx.arc(c.x, c.y, r, a0, a0 + delta, delta < 0);
    }
    ctx.stroke();
  }

  for (const h of scene.handles) {
    const c = apply(t, h.at);
    ctx.fillStyle = h.overlaid ? OVERLAY : h.selected ? EDGE_SELECTED : "#aab4c8";
    ctx.strokeStyle = "#222833";
    ctx.lineWidth = 1;
    ctx.beginPath();
    ctx.arc(c.x, c.y, h.overlaid || h.selected ? 6 : 4, 0, 2 * Math.PI);
    ctx.fill();
    ctx.stroke();
  }

  ctx.lineWidth = 1;
  ctx.strokeStyle = "#1c212b";
  for (const m of scene.markers) {
    const c = apply(t, m.at);
    if (m.glyph === "star") {
      ctx.fillStyle = STAR;
      drawStar(ctx, c, 10);
    } else if (m.glyph === "diamond") {
      ctx.fillStyle = DIAMOND;
      drawDiamond(ctx, c, 8);
    } else {
      ctx.strokeStyle = RING;
      ctx.lineWidth = 2.5;
      ctx.beginPath();
      ctx.arc(c.x, c.y, 9, 0, 2 * Math.PI);
      ctx.stroke();
      ctx.strokeStyle = "#1c212b";
      ctx.lineWidth = 1;
    }
  }
}

/** Nearest clickable target within `maxDist` canvas pixels, handles first. */
export function pickTarget(
  scene: Scene,
  t: Transform,
  x: number,
  y: number,
  maxDist = 12,
): { edgeId: number; kind: "in_plane" | "vertical" } | null {
  let best: { edgeId: number; kind: "in_plane" | "vertical" } | null = null;
  let bestD = maxDist;
  for (const h of scene.handles) {
    const c = apply(t, h.at);
    const d = Math.hypot(c.x - x, c.y - y);
    if (d < bestD) {
      bestD = d;
      best = { edgeId: h.edgeId, kind: "vertical" };
    }
  }
  for (const e of scene.edges) {
    const c = apply(t, e.hitAt);
    const d = Math.hypot(c.x - x, c.y - y);
    if (d < bestD) {
      bestD = d;
      best = { edgeId: e.edgeId, kind: "in_plane" };
    }
  }
  return best;
}
