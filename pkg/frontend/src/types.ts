// Wire types for the arena session API.

export type Role = "Facilitator" | "Divider";

export type Status =
  | "InProgress"
  | "FacilitatorWon"
  | "DividerSurvived"
  | "DividerWinsForever";

export interface Annotation {
  level: number | "notwinning" | null;
  dividerWinsForever: boolean;
}

export interface GameState {
  turn: Role | "Placement" | null;
  f: [number, number];
  d: number[] | null;
  stepsUsed: number;
  tau: number | null;
  status: Status;
  annotation: Annotation;
}

export interface InstanceJson {
  n: number;
  edges: [number, number][];
  s: number;
  t: number;
  k: number;
  tau?: number;
  layout?: LayoutMeta;
}

export interface LayoutMeta {
  family?: string;
  names?: string[];
  blocks?: Record<string, unknown>;
  [key: string]: unknown;
}

export type MovePayload = { pair: [number, number] } | { agents: number[] };

export interface Hint {
  pair?: number[];
  agents?: number[];
  level: number | "notwinning";
}

export interface ApiError {
  code: string;
  message: string;
  legalMoves?: number[][];
}
