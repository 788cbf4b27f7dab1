/** Drawing geometry: hyperbolic edges are arcs of circles orthogonal to the
 * unit circle; flat lattices fall back to straight segments.  Everything here
 * is expressed in model coordinates before any canvas transform. */

export interface Pt {
  x: number;
  y: number;
}

export type EdgeShape =
  | { kind: "segment"; a: Pt; b: Pt }
  | { kind: "arc"; a: Pt; b: Pt; center: Pt; radius: number };

const COLLINEAR_EPS = 1e-9;

/** Circle through a and b orthogonal to the unit circle.  The center c
 * satisfies 2 a.c = 1 + |a|^2 and 2 b.c = 1 + |b|^2; when a, b and the
 * origin are collinear the "circle" degenerates to a diameter. */
export function hyperbolicEdge(a: Pt, b: Pt): EdgeShape {
  const det = a.x * b.y - a.y * b.x;
  if (Math.abs(det) < COLLINEAR_EPS) {
    return { kind: "segment", a, b };
  }
  const ra = (1 + a.x * a.x + a.y * a.y) / 2;
  const rb = (1 + b.x * b.x + b.y * b.y) / 2;
  const cx = (ra * b.y - rb * a.y) / det;
  const cy = (rb * a.x - ra * b.x) / det;
  const radius = Math.hypot(cx - a.x, cy - a.y);
  return { kind: "arc", a, b, center: { x: cx, y: cy }, radius };
}

export function edgeShape(a: Pt, b: Pt, hyperbolic: boolean): EdgeShape {
  return hyperbolic ? hyperbolicEdge(a, b) : { kind: "segment", a, b };
}

/** Midpoint along the drawn edge, used to place edge hit targets. */
export function edgeMidpoint(shape: EdgeShape): Pt {
  if (shape.kind === "segment") {
    return { x: (shape.a.x + shape.b.x) / 2, y: (shape.a.y + shape.b.y) / 2 };
  }
  // midpoint of the minor arc: push the chord midpoint out to the circle,
  // on the side away from the arc center
  const mx = (shape.a.x + shape.b.x) / 2;
  const my = (shape.a.y + shape.b.y) / 2;
  const dx = mx - shape.center.x;
  const dy = my - shape.center.y;
  const d = Math.hypot(dx, dy);
  if (d < COLLINEAR_EPS) return { x: mx, y: my };
  const s = shape.radius / d;
  return { x: shape.center.x + dx * s, y: shape.center.y + dy * s };
}

export function centroid(points: Pt[]): Pt {
  let x = 0;
  let y = 0;
  for (const p of points) {
    x += p.x;
    y += p.y;
  }
  const n = Math.max(points.length, 1);
  return { x: x / n, y: y / n };
}

/** Uniform scale + translation taking model coordinates into a square
 * canvas of side `size` with `pad` pixels of margin.  Uniformity matters:
 * circles must stay circles for the arc renderer. */
export interface Transform {
  scale: number;
  offsetX: number;
  offsetY: number;
}

export function fitTransform(points: Pt[], size: number, pad = 24): Transform {
  if (points.length === 0) return { scale: 1, offsetX: size / 2, offsetY: size / 2 };
  let minX = Infinity,
    maxX = -Infinity,
    minY = Infinity,
    maxY = -Infinity;
  for (const p of points) {
    minX = Math.min(minX, p.x);
    maxX = Math.max(maxX, p.x);
    minY = Math.min(minY, p.y);
    maxY = Math.max(maxY, p.y);
  }
  const span = Math.max(maxX - minX, maxY - minY, 1e-9);
  const scale = (size - 2 * pad) / span;
  const cx = (minX + maxX) / 2;
  const cy = (minY + maxY) / 2;
  // canvas y grows downward
  return { scale, offsetX: size / 2 - cx * scale, offsetY: size / 2 + cy * scale };
}

export function apply(t: Transform, p: Pt): Pt {
  return { x: t.offsetX + p.x * t.scale, y: t.offsetY - p.y * t.scale };
}
