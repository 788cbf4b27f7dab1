import { describe, expect, it } from "vitest";

import {
  apply,
  centroid,
  edgeMidpoint,
  edgeShape,
  fitTransform,
  hyperbolicEdge,
} from "../src/geometry.js";

describe("hyperbolicEdge", () => {
  const a = { x: 0.3, y: 0.1 };
  const b = { x: -0.2, y: 0.4 };

  it("returns a circle orthogonal to the unit circle", () => {
    const shape = hyperbolicEdge(a, b);
    expect(shape.kind).toBe("arc");
    if (shape.kind !== "arc") return;
    const c2 = shape.center.x ** 2 + shape.center.y ** 2;
    // orthogonality: |center|^2 = radius^2 + 1
    expect(c2).toBeCloseTo(shape.radius ** 2 + 1, 10);
  });

  it("passes through both endpoints", () => {
    const shape = hyperbolicEdge(a, b);
    if (shape.kind !== "arc") throw new Error("expected arc");
    for (const p of [a, b]) {
      const d = Math.hypot(p.x - shape.center.x, p.y - shape.center.y);
      expect(d).toBeCloseTo(shape.radius, 10);
    }
  });

  it("degenerates to a diameter segment for collinear points", () => {
    const shape = hyperbolicEdge({ x: 0.5, y: 0.25 }, { x: -0.2, y: -0.1 });
    expect(shape.kind).toBe("segment");
  });

  it("treats a point paired with the origin as a segment", () => {
    expect(hyperbolicEdge({ x: 0.4, y: 0.2 }, { x: 0, y: 0 }).kind).toBe("segment");
  });
});

describe("edgeShape", () => {
  it("always draws straight segments for flat lattices", () => {
    const s = edgeShape({ x: 0.3, y: 0.1 }, { x: -0.2, y: 0.4 }, false);
    expect(s.kind).toBe("segment");
  });

  it("draws arcs for hyperbolic lattices", () => {
    const s = edgeShape({ x: 0.3, y: 0.1 }, { x: -0.2, y: 0.4 }, true);
    expect(s.kind).toBe("arc");
  });
});

describe("edgeMidpoint", () => {
  it("is the plain midpoint for segments", () => {
    const m = edgeMidpoint({ kind: "segment", a: { x: 0, y: 0 }, b: { x: 2, y: 4 } });
    expect(m).toEqual({ x: 1, y: 2 });
  });

  it("for arcs lies on the circle, between the endpoints", () => {
    const a = { x: 0.3, y: 0.1 };
    const b = { x: -0.2, y: 0.4 };
    const shape = hyperbolicEdge(a, b);
    if (shape.kind !== "arc") throw new Error("expected arc");
    const m = edgeMidpoint(shape);
    const d = Math.hypot(m.x - shape.center.x, m.y - shape.center.y);
    expect(d).toBeCloseTo(shape.radius, 10);
    // closer to both endpoints than they are to each other
    const ab = Math.hypot(a.x - b.x, a.y - b.y);
    expect(Math.hypot(m.x - a.x, m.y - a.y)).toBeLessThan(ab);
    expect(Math.hypot(m.x - b.x, m.y - b.y)).toBeLessThan(ab);
  });
});

describe("fitTransform / apply", () => {
  const pts = [
    { x: -1, y: -1 },
    { x: 1, y: 1 },
    { x: 0.2, y: -0.4 },
  ];

  it("maps every point inside the canvas with the requested margin", () => {
    const t = fitTransform(pts, 600, 20);
    for (const p of pts) {
      const c = apply(t, p);
      expect(c.x).toBeGreaterThanOrEqual(20 - 1e-9);
      expect(c.x).toBeLessThanOrEqual(580 + 1e-9);
      expect(c.y).toBeGreaterThanOrEqual(20 - 1e-9);
      expect(c.y).toBeLessThanOrEqual(580 + 1e-9);
    }
  });

  it("is uniform and flips y", () => {
    const t = fitTransform(pts, 600, 20);
    const o = apply(t, { x: 0, y: 0 });
    const up = apply(t, { x: 0, y: 0.5 });
    const right = apply(t, { x: 0.5, y: 0 });
    expect(up.y).toBeLessThan(o.y);
    expect(right.x - o.x).toBeCloseTo(o.y - up.y, 10);
  });

  it("survives an empty point list", () => {
    const t = fitTransform([], 600);
    const c = apply(t, { x: 0, y: 0 });
    expect(c).toEqual({ x: 300, y: 300 });
  });
});

describe("centroid", () => {
  it("averages the corner coordinates", () => {
    const c = centroid([
      { x: 0, y: 0 },
      { x: 2, y: 0 },
      { x: 2, y: 2 },
      { x: 0, y: 2 },
    ]);
    expect(c).toEqual({ x: 1, y: 1 });
  });
});
