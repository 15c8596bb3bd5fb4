// Page wiring: create a session, render the board, compose moves by clicking,
// poll the server for the authoritative state.  All truth lives server-side;
// the only client state is the session id plus the in-progress selection.

import { ArenaClient, ArenaError } from "./api.js";
import { renderBoard, statusLine } from "./board.js";
import { MoveComposer } from "./composer.js";
import { positionsFor } from "./layout.js";
import type { GameState, Hint, InstanceJson, Role } from "./types.js";

interface Ui {
  boardHost: HTMLElement;
  status: HTMLElement;
  hintsHost: HTMLElement;
  log: HTMLElement;
}

class ArenaPage {
  private client: ArenaClient;
  private sessionId: string | null = null;
  private instance: InstanceJson | null = null;
  private role: Role = "Facilitator";
  private state: GameState | null = null;
  private composer: MoveComposer | null = null;
  private activeAgent = 0;
  private showHints = false;
  private poller: number | undefined;

  constructor(baseUrl: string, private ui: Ui) {
    this.client = new ArenaClient(baseUrl);
  }

  async start(instance: InstanceJson, role: Role): Promise<void> {
    this.instance = instance;
    this.role = role;
    const res = await this.client.createGame(instance, role);
    this.sessionId = res.id;
    this.onState(res.state);
    window.clearInterval(this.poller);
    this.poller = window.setInterval(() => this.refresh(), 1500);
  }

  private async refresh(): Promise<void> {
    if (!this.sessionId) return;
    this.onState(await this.client.getState(this.sessionId));
  }

  private adjacency(): Map<number, Set<number>> {
    const adj = new Map<number, Set<number>>();
    for (let v = 0; v < this.instance!.n; v++) adj.set(v, new Set());
    for (const [a, b] of this.instance!.edges) {
      adj.get(a)!.add(b);
      adj.get(b)!.add(a);
    }
    return adj;
  }

  private async legalMoves(): Promise<number[][]> {
    const hints = await this.client.hints(this.sessionId!);
    return hints.map((h: Hint) => (h.pair ?? h.agents)!) as number[][];
  }

  private async onState(state: GameState): Promise<void> {
    this.state = state;
    this.composer = null;
    this.activeAgent = 0;
    if (state.status === "InProgress" && state.turn === this.role && state.d) {
      const agentPositions = this.role === "Facilitator" ? state.f : state.d;
      this.composer = new MoveComposer(
        this.role,
        [...agentPositions],
        await this.legalMoves(),
        this.adjacency(),
      );
    }
    this.render();
  }

  private async submit(): Promise<void> {
    if (!this.composer?.isComplete()) return;
    try {
      const next = await this.client.move(this.sessionId!, this.composer.payload());
      this.onState(next);
    } catch (err) {
      if (err instanceof ArenaError) {
        this.ui.log.textContent = `rejected: ${err.body.message}`;
        await this.refresh();
      } else {
        throw err;
      }
    }
  }

  async onVertexClick(vertex: number): Promise<void> {
    if (!this.state || !this.instance) return;
    if (this.state.turn === "Placement" && this.role === "Divider") {
      const k = this.instance.k;
      const picks = (this.pendingPlacement ??= []);
      picks.push(vertex);
      if (picks.length === k) {
        try {
          this.onState(await this.client.placeAgents(this.sessionId!, picks));
        } catch (err) {
          if (err instanceof ArenaError) this.ui.log.textContent = err.body.message;
        }
        this.pendingPlacement = undefined;
      } else {
        this.render();
      }
      return;
    }
    if (!this.composer) return;
    try {
      this.composer.choose(this.activeAgent, vertex);
      this.activeAgent += 1;
      if (this.composer.isComplete()) await this.submit();
      else this.render();
    } catch {
      this.ui.log.textContent = "that vertex is not a legal destination";
    }
  }

  private pendingPlacement: number[] | undefined;

  async toggleHints(): Promise<void> {
    this.showHints = !this.showHints;
    this.render();
    if (this.showHints && this.sessionId) {
      const hints = await this.client.hints(this.sessionId);
      this.ui.hintsHost.textContent = hints
        .slice(0, 8)
        .map((h) => `${JSON.stringify(h.pair ?? h.agents)} -> ${h.level}`)
        .join("\n");
    } else {
      this.ui.hintsHost.textContent = "";
    }
  }

  private render(): void {
    if (!this.state || !this.instance) return;
    const highlights = new Set<number>(
      this.composer ? this.composer.options(this.activeAgent) : [],
    );
    if (this.state.turn === "Placement") {
      for (let v = 0; v < this.instance.n; v++) {
        if (v !== this.instance.s && v !== this.instance.t) highlights.add(v);
      }
    }
    const selected = new Set<number>(
      (this.composer?.selection.filter((v): v is number => v !== null) ?? []).concat(
        this.pendingPlacement ?? [],
      ),
    );
    this.ui.boardHost.innerHTML = renderBoard({
      instance: this.instance,
      state: this.state,
      positions: positionsFor(this.instance),
      highlights,
      selected,
    });
    this.ui.status.textContent = statusLine(this.state);
  }
}

export function mount(): void {
  const $ = (id: string) => document.getElementById(id)!;
  const page = new ArenaPage(
    (document.getElementById("base-url") as HTMLInputElement).value || "",
    {
      boardHost: $("board"),
      status: $("status"),
      hintsHost: $("hints"),
      log: $("log"),
    },
  );
  $("create").addEventListener("click", async () => {
    const instance = JSON.parse(
      (document.getElementById("instance") as HTMLTextAreaElement).value,
    ) as InstanceJson;
    const role = (document.getElementById("role") as HTMLSelectElement).value as Role;
    await page.start(instance, role);
  });
  $("hint-toggle").addEventListener("click", () => page.toggleHints());
  $("board").addEventListener("click", (ev) => {
    const target = (ev.target as Element).closest("[data-vertex]");
    if (target) page.onVertexClick(Number(target.getAttribute("data-vertex")));
  });
}

if (typeof document !== "undefined" && document.getElementById("board")) {
  mount();
}
