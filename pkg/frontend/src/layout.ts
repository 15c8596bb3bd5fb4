// Vertex positioning: generator layout metadata when present, otherwise a
// deterministic force-directed embedding in the unit square (fixed start,
// fixed iteration count, no randomness, so renders replay identically).

import type { InstanceJson } from "./types.js";

export type Point = { x: number; y: number };

function circle(ids: number[], cx: number, cy: number, r: number, out: Map<number, Point>) {
  ids.forEach((v, i) => {
    const angle = (2 * Math.PI * i) / Math.max(ids.length, 1) - Math.PI / 2;
    out.set(v, { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  });
}

function spiderLayout(inst: InstanceJson): Map<number, Point> | null {
  const blocks = inst.layout?.blocks as
    | { s: number; t: number; u: number[]; x?: number[]; y?: number[] }
    | undefined;
  if (!blocks || !Array.isArray(blocks.u)) return null;
  const pos = new Map<number, Point>();
  pos.set(blocks.s, { x: 0.05, y: 0.5 });
  pos.set(blocks.t, { x: 0.95, y: 0.5 });
  circle(blocks.u, 0.5, 0.5, 0.16, pos);
  if (blocks.x) {
    blocks.x.forEach((v, i) => {
      const hub = pos.get(blocks.u[i])!;
      pos.set(v, { x: (0.05 + hub.x) / 2, y: (0.5 + hub.y) / 2 + (i % 2 ? 0.06 : -0.06) });
    });
  }
  if (blocks.y) {
    blocks.y.forEach((v, i) => {
      const hub = pos.get(blocks.u[i])!;
      pos.set(v, { x: (0.95 + hub.x) / 2, y: (0.5 + hub.y) / 2 + (i % 2 ? 0.06 : -0.06) });
    });
  }
  for (let v = 0; v < inst.n; v++) {
    if (!pos.has(v)) return null; // unknown block member: fall back
  }
  return pos;
}

export function forceLayout(n: number, edges: [number, number][], iterations = 150): Map<number, Point> {
  const pos = new Map<number, Point>();
  circle([...Array(n).keys()], 0.5, 0.5, 0.4, pos);
  if (n <= 2) return pos;
  const ideal = 0.8 / Math.sqrt(n);
  for (let it = 0; it < iterations; it++) {
    const step = 0.05 * (1 - it / iterations);
    const force = new Map<number, Point>();
    for (let v = 0; v < n; v++) force.set(v, { x: 0, y: 0 });
    for (let a = 0; a < n; a++) {
      for (let b = a + 1; b < n; b++) {
        const pa = pos.get(a)!;
        const pb = pos.get(b)!;
        let dx = pa.x - pb.x;
        let dy = pa.y - pb.y;
        const dist = Math.max(Math.hypot(dx, dy), 1e-6);
        dx /= dist;
        dy /= dist;
        const rep = (ideal * ideal) / dist;
        force.get(a)!.x += dx * rep;
        force.get(a)!.y += dy * rep;
        force.get(b)!.x -= dx * rep;
        force.get(b)!.y -= dy * rep;
      }
    }
    for (const [a, b] of edges) {
      const pa = pos.get(a)!;
      const pb = pos.get(b)!;
      let dx = pa.x - pb.x;
      let dy = pa.y - pb.y;
      const dist = Math.max(Math.hypot(dx, dy), 1e-6);
      const att = (dist * dist) / ideal;
      dx = (dx / dist) * att;
      dy = (dy / dist) * att;
      force.get(a)!.x -= dx;
      force.get(a)!.y -= dy;
      force.get(b)!.x += dx;
      force.get(b)!.y += dy;
    }
    for (let v = 0; v < n; v++) {
      const f = force.get(v)!;
      const mag = Math.max(Math.hypot(f.x, f.y), 1e-9);
      const cap = Math.min(mag, step);
      const p = pos.get(v)!;
      p.x = Math.min(0.97, Math.max(0.03, p.x + (f.x / mag) * cap));
      p.y = Math.min(0.97, Math.max(0.03, p.y + (f.y / mag) * cap));
    }
  }
  return pos;
}

export function positionsFor(inst: InstanceJson): Map<number, Point> {
  const family = inst.layout?.family;
  if (family === "clique-spider" || family === "path-spider") {
    const special = spiderLayout(inst);
    if (special) return special;
  }
  return forceLayout(inst.n, inst.edges);
}
