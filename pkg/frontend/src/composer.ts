// Move composition: pick a destination per agent, constrained at every step
// so that only selections extendable to a server-legal move are offered.
// The composer is a pure function of (role, positions, legal move list) plus
// the transient selections; the payload it emits is always in the legal list.

import type { MovePayload, Role } from "./types.js";

function countMap(values: number[]): Map<number, number> {
  const m = new Map<number, number>();
  for (const v of values) m.set(v, (m.get(v) ?? 0) + 1);
  return m;
}

function isSubMultiset(part: Map<number, number>, whole: Map<number, number>): boolean {
  for (const [v, c] of part) {
    if ((whole.get(v) ?? 0) < c) return false;
  }
  return true;
}

export class MoveComposer {
  private selections: (number | null)[];
  private legalCounts: Map<number, number>[];

  constructor(
    readonly role: Role,
    readonly positions: number[],
    readonly legalMoves: number[][],
    private adjacency?: Map<number, Set<number>>,
  ) {
    if (role === "Facilitator" && positions.length !== 2) {
      throw new Error("facilitator composes exactly two destinations");
    }
    this.selections = positions.map(() => null);
    this.legalCounts = legalMoves.map(countMap);
  }

  get selection(): readonly (number | null)[] {
    return this.selections;
  }

  private partialCounts(skip?: number): Map<number, number> {
    const chosen = this.selections.filter(
      (v, i): v is number => v !== null && i !== skip,
    );
    return countMap(chosen);
  }

  /** Destinations for one agent consistent with some legal completion. */
  options(agentIndex: number): number[] {
    if (agentIndex < 0 || agentIndex >= this.positions.length) return [];
    const partial = this.partialCounts(agentIndex);
    const out = new Set<number>();
    for (const counts of this.legalCounts) {
      for (const v of counts.keys()) {
        if (out.has(v)) continue;
        const withV = new Map(partial);
        withV.set(v, (withV.get(v) ?? 0) + 1);
        if (isSubMultiset(withV, counts)) out.add(v);
      }
    }
    if (this.adjacency) {
      // stay or step along an edge: tighten to what this agent can reach
      const from = this.positions[agentIndex];
      const reach = this.adjacency.get(from) ?? new Set<number>();
      for (const v of [...out]) {
        if (v !== from && !reach.has(v)) out.delete(v);
      }
    }
    return [...out].sort((a, b) => a - b);
  }

  choose(agentIndex: number, vertex: number): void {
    if (!this.options(agentIndex).includes(vertex)) {
      throw new Error(`vertex ${vertex} is not a legal destination for agent ${agentIndex}`);
    }
    this.selections[agentIndex] = vertex;
  }

  unchoose(agentIndex: number): void {
    this.selections[agentIndex] = null;
  }

  clear(): void {
    this.selections = this.positions.map(() => null);
  }

  /** Convenience: keep every agent in place when that move is legal. */
  stay(): void {
    this.positions.forEach((v, i) => this.choose(i, v));
  }

  isComplete(): boolean {
    if (this.selections.some((v) => v === null)) return false;
    const full = this.partialCounts();
    return this.legalCounts.some(
      (counts) =>
        isSubMultiset(full, counts) &&
        [...counts.values()].reduce((a, b) => a + b, 0) ===
          [...full.values()].reduce((a, b) => a + b, 0),
    );
  }

  payload(): MovePayload {
    if (!this.isComplete()) {
      throw new Error("selection incomplete or not a legal move");
    }
    const chosen = this.selections as number[];
    if (this.role === "Facilitator") {
      return { pair: [chosen[0], chosen[1]] };
    }
    return { agents: [...chosen] };
  }
}
