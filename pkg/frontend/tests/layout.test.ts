import { describe, expect, it } from "vitest";
import { forceLayout, positionsFor } from "../src/layout.js";
import type { InstanceJson } from "../src/types.js";

const c4: InstanceJson = {
  n: 4,
  edges: [
    [0, 1],
    [1, 2],
    [2, 3],
    [0, 3],
  ],
  s: 0,
  t: 2,
  k: 1,
};

describe("force layout", () => {
  it("is deterministic and keeps everything inside the unit square", () => {
    const a = forceLayout(c4.n, c4.edges);
    const b = forceLayout(c4.n, c4.edges);
    for (let v = 0; v < 4; v++) {
      expect(a.get(v)).toEqual(b.get(v));
      const p = a.get(v)!;
      expect(p.x).toBeGreaterThan(0);
      expect(p.x).toBeLessThan(1);
      expect(p.y).toBeGreaterThan(0);
      expect(p.y).toBeLessThan(1);
    }
  });

  it("separates the vertices", () => {
    const pos = forceLayout(c4.n, c4.edges);
    for (let a = 0; a < 4; a++) {
      for (let b = a + 1; b < 4; b++) {
        const pa = pos.get(a)!;
        const pb = pos.get(b)!;
        expect(Math.hypot(pa.x - pb.x, pa.y - pb.y)).toBeGreaterThan(0.05);
      }
    }
  });
});

describe("generator layouts", () => {
  it("uses spider block metadata when present", () => {
    const spider: InstanceJson = {
      n: 8,
      edges: [
        [2, 3],
        [0, 4],
        [4, 2],
        [1, 6],
        [6, 2],
        [0, 5],
        [5, 3],
        [1, 7],
        [7, 3],
      ],
      s: 0,
      t: 1,
      k: 1,
      layout: {
        family: "clique-spider",
        blocks: { s: 0, t: 1, u: [2, 3], x: [4, 5], y: [6, 7] },
      },
    };
    const pos = positionsFor(spider);
    expect(pos.get(0)!.x).toBeLessThan(0.2); // origin pinned left
    expect(pos.get(1)!.x).toBeGreaterThan(0.8); // origin pinned right
    const hub = pos.get(2)!;
    expect(Math.abs(hub.x - 0.5)).toBeLessThan(0.25); // hubs central
  });

  it("falls back to the force layout without metadata", () => {
    expect(positionsFor(c4).size).toBe(4);
  });
});
