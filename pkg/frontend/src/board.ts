// Pure SVG rendering of a game state: given the server state, vertex
// positions, and the transient selection/highlight sets, emit markup.  The
// host page wires clicks through data-vertex attributes, so no DOM handles
// leak in here and the view is a function of its inputs.

import type { Point } from "./layout.js";
import type { GameState, InstanceJson } from "./types.js";

export interface BoardView {
  instance: InstanceJson;
  state: GameState;
  positions: Map<number, Point>;
  highlights?: Set<number>;
  selected?: Set<number>;
  size?: number;
}

const esc = (s: string) =>
  s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");

export function renderBoard(view: BoardView): string {
  const size = view.size ?? 640;
  const { instance, state, positions } = view;
  const highlights = view.highlights ?? new Set<number>();
  const selected = view.selected ?? new Set<number>();
  const px = (v: number) => positions.get(v)!.x * size;
  const py = (v: number) => positions.get(v)!.y * size;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${size} ${size}" class="board">`,
  );
  for (const [a, b] of instance.edges) {
    parts.push(
      `<line x1="${px(a)}" y1="${py(a)}" x2="${px(b)}" y2="${py(b)}" class="edge"/>`,
    );
  }
  const divCounts = new Map<number, number>();
  for (const v of state.d ?? []) divCounts.set(v, (divCounts.get(v) ?? 0) + 1);
  const facCounts = new Map<number, number>();
  for (const v of state.f) facCounts.set(v, (facCounts.get(v) ?? 0) + 1);

  for (let v = 0; v < instance.n; v++) {
    const classes = ["vertex"];
    if (v === instance.s) classes.push("origin-s");
    if (v === instance.t) classes.push("origin-t");
    if (highlights.has(v)) classes.push("legal");
    if (selected.has(v)) classes.push("selected");
    if (facCounts.has(v)) classes.push("facilitator");
    if (divCounts.has(v)) classes.push("divider");
    const name = instance.layout?.names?.[v] ?? String(v);
    parts.push(
      `<g class="${classes.join(" ")}" data-vertex="${v}">` +
        `<circle cx="${px(v)}" cy="${py(v)}" r="14"/>` +
        `<text x="${px(v)}" y="${py(v) + 4}" text-anchor="middle">${esc(name)}</text>` +
        "</g>",
    );
    if (facCounts.has(v)) {
      const double = facCounts.get(v)! > 1 ? " double" : "";
      parts.push(
        `<circle cx="${px(v) - 8}" cy="${py(v) - 14}" r="6" class="token fac${double}" data-token="f${v}"/>`,
      );
    }
    const dc = divCounts.get(v) ?? 0;
    for (let i = 0; i < dc; i++) {
      parts.push(
        `<rect x="${px(v) + 2 + 7 * i}" y="${py(v) - 20}" width="10" height="10" class="token div" data-token="d${v}.${i}"/>`,
      );
    }
  }
  parts.push("</svg>");
  return parts.join("");
}

export function statusLine(state: GameState): string {
  const level = state.annotation.level;
  const levelText =
    level === null ? "" : level === "notwinning" ? " | level: not winning" : ` | level: ${level}`;
  const forever = state.annotation.dividerWinsForever ? " | divider can hold forever" : "";
  const steps = state.tau === null ? `${state.stepsUsed}` : `${state.stepsUsed}/${state.tau}`;
  return `${state.status} | turn: ${state.turn ?? "-"} | moves: ${steps}${levelText}${forever}`;
}
