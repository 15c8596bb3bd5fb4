// Thin fetch client for the arena service.  The client keeps no game state
// beyond the session id; every view is rebuilt from the server's state object.

import type { ApiError, GameState, Hint, InstanceJson, MovePayload, Role } from "./types.js";

export class ArenaError extends Error {
  constructor(
    public status: number,
    public body: ApiError,
  ) {
    super(`${body.code}: ${body.message}`);
  }
}

export class ArenaClient {
  constructor(private baseUrl: string) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const res = await fetch(`${this.baseUrl}${path}`, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = await res.json();
    if (!res.ok) {
      throw new ArenaError(res.status, payload as ApiError);
    }
    return payload as T;
  }

  health(): Promise<{ ok: boolean }> {
    return this.request("GET", "/v1/health");
  }

  createGame(instance: InstanceJson, humanRole: Role): Promise<{ id: string; state: GameState }> {
    return this.request("POST", "/v1/games", { instance, humanRole });
  }

  getState(id: string): Promise<GameState> {
    return this.request("GET", `/v1/games/${id}`);
  }

  placeAgents(id: string, vertices: number[]): Promise<GameState> {
    return this.request("POST", `/v1/games/${id}/placement`, { vertices });
  }

  move(id: string, payload: MovePayload): Promise<GameState> {
    return this.request("POST", `/v1/games/${id}/move`, payload);
  }

  hints(id: string): Promise<Hint[]> {
    return this.request("GET", `/v1/games/${id}/hints`);
  }

  deleteGame(id: string): Promise<{ deleted: string }> {
    return this.request("DELETE", `/v1/games/${id}`);
  }
}
