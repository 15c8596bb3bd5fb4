import { describe, expect, it } from "vitest";
import { renderBoard, statusLine } from "../src/board.js";
import { positionsFor } from "../src/layout.js";
import type { GameState, InstanceJson } from "../src/types.js";

const inst: InstanceJson = {
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

const state: GameState = {
  turn: "Facilitator",
  f: [0, 2],
  d: [1],
  stepsUsed: 0,
  tau: null,
  status: "InProgress",
  annotation: { level: "notwinning", dividerWinsForever: true },
};

describe("board rendering", () => {
  it("marks origins, agents, and highlights distinctly", () => {
    const svg = renderBoard({
      instance: inst,
      state,
      positions: positionsFor(inst),
      highlights: new Set([3]),
      selected: new Set([0]),
    });
    expect(svg).toContain("origin-s");
    expect(svg).toContain("origin-t");
    expect(svg).toContain('class="token fac"');
    expect(svg).toContain('class="token div"');
    expect(svg.match(/data-vertex="3"[^>]*>/)![0]).toBeTruthy();
    expect(svg).toContain("legal");
    expect(svg).toContain("selected");
    // a view is a pure function of its inputs
    const again = renderBoard({
      instance: inst,
      state,
      positions: positionsFor(inst),
      highlights: new Set([3]),
      selected: new Set([0]),
    });
    expect(again).toBe(svg);
  });

  it("stacks coinciding divider agents", () => {
    const doubled: GameState = { ...state, d: [1, 1] };
    const svg = renderBoard({
      instance: { ...inst, k: 2 },
      state: doubled,
      positions: positionsFor(inst),
    });
    expect(svg.match(/class="token div"/g)!.length).toBe(2);
  });

  it("escapes vertex names", () => {
    const withNames = {
      ...inst,
      layout: { names: ["<s>", "a", "b", "c"] },
    };
    const svg = renderBoard({ instance: withNames, state, positions: positionsFor(inst) });
    expect(svg).toContain("&lt;s&gt;");
  });
});

describe("status line", () => {
  it("summarizes progress and annotations", () => {
    expect(statusLine(state)).toContain("not winning");
    expect(statusLine(state)).toContain("InProgress");
    const bounded: GameState = { ...state, tau: 5, stepsUsed: 2, annotation: { level: 3, dividerWinsForever: false } };
    expect(statusLine(bounded)).toContain("2/5");
    expect(statusLine(bounded)).toContain("level: 3");
  });
});
