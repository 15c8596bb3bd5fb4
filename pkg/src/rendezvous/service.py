"""Session-based HTTP API for playing either side against optimal engine play.

Sessions live in memory behind per-session locks; every accepted transition is
validated against the legal move lists, appended to the session's event list,
and optionally mirrored to an append-only JSONL file, so a session is fully
reconstructible from its event log.  The engine plays from the fixpoint level
table: as divider it maximizes the level reached (NotWinning preferred), as
facilitator it minimizes the worst case, ties broken in canonical move order
so games replay identically.
"""

from __future__ import annotations

import json
import secrets
import threading
from pathlib import Path

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .engine import (
    BudgetExceeded,
    best_moves,
    canon_pair,
    div_moves,
    fac_moves,
    position_count,
    winning_sets,
)
from .engine.solver import DEFAULT_BUDGET
from .graphs import GraphError, Instance, instance_to_obj, parse_instance

FACILITATOR = "Facilitator"
DIVIDER = "Divider"


class GameSession:
    def __init__(self, session_id: str, inst: Instance, human_role: str, table):
        self.id = session_id
        self.inst = inst
        self.human_role = human_role
        self.table = table
        self.f = canon_pair(inst.s, inst.t)
        self.d = None                    # placement pending
        self.steps_used = 0
        self.status = "InProgress"
        self.turn = "Placement"
        self.events = []
        self.lock = threading.Lock()

    # -- pure transition helpers (also used for event replay) ----------------

    def apply_placement(self, agents):
        self.d = tuple(sorted(agents))
        self.turn = FACILITATOR

    def apply_fac_move(self, pair):
        self.f = canon_pair(*pair)
        self.steps_used += 1
        if self.f[0] == self.f[1]:
            self.status = "FacilitatorWon"
            self.turn = None
        elif self.inst.tau is not None and self.steps_used >= self.inst.tau:
            self.status = "DividerSurvived"
            self.turn = None
        else:
            self.turn = DIVIDER

    def apply_div_move(self, agents):
        self.d = tuple(sorted(agents))
        self.turn = FACILITATOR

    def record(self, event: dict, log_dir):
        self.events.append(event)
        if log_dir is not None:
            path = Path(log_dir) / f"{self.id}.jsonl"
            with path.open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(event, sort_keys=True) + "\n")

    def annotation(self):
        if self.d is None:
            return {"level": None, "dividerWinsForever": False}
        level = self.table.level_of(self.f, self.d) if self.f[0] != self.f[1] else 0
        forever = self.inst.tau is None and level is None
        return {
            "level": "notwinning" if level is None else level,
            "dividerWinsForever": forever,
        }

    def state(self):
        return {
            "turn": self.turn,
            "f": list(self.f),
            "d": list(self.d) if self.d is not None else None,
            "stepsUsed": self.steps_used,
            "tau": self.inst.tau,
            "status": self.status,
            "annotation": self.annotation(),
        }


def replay_session(inst: Instance, events) -> GameSession:
    """Rebuild a session from its event log; raises on any illegal transition."""
    sess = GameSession("replay", inst, events[0]["humanRole"], table=None)
    g = inst.graph
    for ev in events:
        kind = ev["type"]
        if kind == "created":
            if inst.s == inst.t:
                sess.status = "FacilitatorWon"
                sess.turn = None
        elif kind == "placement":
            agents = tuple(sorted(ev["agents"]))
            assert len(agents) == inst.k and not set(agents) & set(sess.f)
            sess.apply_placement(agents)
        elif kind == "move":
            if ev["role"] == FACILITATOR:
                pair = canon_pair(*ev["move"])
                assert pair in fac_moves(g, sess.f, sess.d)
                sess.apply_fac_move(pair)
            else:
                agents = tuple(sorted(ev["move"]))
                assert agents in div_moves(g, sess.d, sess.f)
                sess.apply_div_move(agents)
        else:
            raise ValueError(f"unknown event {kind!r}")
    return sess


def engine_initial_placement(table, inst: Instance):
    """Level-maximizing initial placement, NotWinning preferred, canonical ties."""
    from itertools import combinations_with_replacement

    g, s, t, k = inst.graph, inst.s, inst.t, inst.k
    start = canon_pair(s, t)
    best = None
    best_key = None
    for d in combinations_with_replacement(
            [v for v in g.vertices() if v != s and v != t], k):
        lv = table.level_of(start, d)
        key = (0 if lv is None else 1, lv if lv is not None else 0)
        # prefer NotWinning, then the largest level
        if best is None or (key[0], -key[1]) < (best_key[0], -best_key[1]):
            best, best_key = d, key
    return best


class CreateGame(BaseModel):
    instance: dict
    humanRole: str


class PlacementBody(BaseModel):
    vertices: list[int]


class MoveBody(BaseModel):
    pair: list[int] | None = None
    agents: list[int] | None = None


def _error(status: int, code: str, message: str, **extra):
    return JSONResponse({"code": code, "message": message, **extra}, status_code=status)


def create_app(budget: int = DEFAULT_BUDGET, log_dir=None) -> FastAPI:
    app = FastAPI(title="rendezvous arena")
    sessions: dict[str, GameSession] = {}
    registry_lock = threading.Lock()
    if log_dir is not None:
        Path(log_dir).mkdir(parents=True, exist_ok=True)

    def engine_turns(sess: GameSession):
        """Let the engine reply once when it is its turn."""
        g = sess.inst.graph
        engine_role = DIVIDER if sess.human_role == FACILITATOR else FACILITATOR
        if sess.status != "InProgress" or sess.turn != engine_role:
            return
        if engine_role == DIVIDER:
            agents = best_moves(g, sess.table, sess.f, sess.d, "divider")[0][0]
            sess.apply_div_move(agents)
            sess.record({"type": "move", "role": DIVIDER, "by": "engine",
                         "move": list(agents)}, log_dir)
        else:
            pair = best_moves(g, sess.table, sess.f, sess.d, "facilitator")[0][0]
            sess.apply_fac_move(pair)
            sess.record({"type": "move", "role": FACILITATOR, "by": "engine",
                         "move": list(pair)}, log_dir)

    @app.get("/v1/health")
    def health():
        return {"ok": True}

    @app.post("/v1/games")
    def create_game(body: CreateGame):
        if body.humanRole not in (FACILITATOR, DIVIDER):
            return _error(400, "bad-role", f"humanRole must be {FACILITATOR} or {DIVIDER}")
        try:
            inst = parse_instance(json.dumps(body.instance))
        except GraphError as exc:
            return _error(400, exc.code, str(exc))
        estimate = position_count(inst.graph.n, inst.k)
        try:
            table = winning_sets(inst.graph, inst.k, budget)
        except BudgetExceeded as exc:
            return _error(422, "budget-exceeded",
                          f"position space too large: {exc.estimate}",
                          estimate=exc.estimate)
        sess = GameSession(secrets.token_hex(8), inst, body.humanRole, table)
        sess.record({"type": "created", "humanRole": body.humanRole,
                     "instance": instance_to_obj(inst)}, log_dir)
        if inst.s == inst.t:
            sess.status = "FacilitatorWon"
            sess.turn = None
        elif body.humanRole == FACILITATOR:
            d0 = engine_initial_placement(table, inst)
            sess.apply_placement(d0)
            sess.record({"type": "placement", "by": "engine", "agents": list(d0)},
                        log_dir)
        with registry_lock:
            sessions[sess.id] = sess
        return {"id": sess.id, "state": sess.state()}

    def _get(session_id: str):
        with registry_lock:
            return sessions.get(session_id)

    @app.get("/v1/games/{session_id}")
    def get_game(session_id: str):
        sess = _get(session_id)
        if sess is None:
            return _error(404, "unknown-session", "no such session")
        return sess.state()

    @app.post("/v1/games/{session_id}/placement")
    def place(session_id: str, body: PlacementBody):
        sess = _get(session_id)
        if sess is None:
            return _error(404, "unknown-session", "no such session")
        with sess.lock:
            if sess.turn != "Placement" or sess.human_role != DIVIDER:
                return _error(409, "not-expecting-placement", "placement not pending")
            agents = sorted(body.vertices)
            g = sess.inst.graph
            legal = (
                len(agents) == sess.inst.k
                and all(0 <= v < g.n for v in agents)
                and not set(agents) & set(sess.f)
            )
            if not legal:
                return _error(409, "illegal-placement",
                              f"need {sess.inst.k} vertices off {sess.f}")
            sess.apply_placement(tuple(agents))
            sess.record({"type": "placement", "by": "human", "agents": agents}, log_dir)
            engine_turns(sess)
            return sess.state()

    @app.post("/v1/games/{session_id}/move")
    def move(session_id: str, body: MoveBody):
        sess = _get(session_id)
        if sess is None:
            return _error(404, "unknown-session", "no such session")
        with sess.lock:
            if sess.status != "InProgress":
                return _error(409, "game-over", f"status is {sess.status}")
            g = sess.inst.graph
            if sess.turn == FACILITATOR and sess.human_role == FACILITATOR:
                if body.pair is None or len(body.pair) != 2:
                    return _error(400, "bad-move", "facilitator move needs {pair:[a,b]}")
                pair = canon_pair(*body.pair)
                legal = fac_moves(g, sess.f, sess.d)
                if pair not in legal:
                    return _error(409, "illegal-move",
                                  "no agent can enter an adversary vertex and moves "
                                  "must follow edges",
                                  legalMoves=[list(m) for m in legal])
                sess.apply_fac_move(pair)
                sess.record({"type": "move", "role": FACILITATOR, "by": "human",
                             "move": list(pair)}, log_dir)
            elif sess.turn == DIVIDER and sess.human_role == DIVIDER:
                if body.agents is None:
                    return _error(400, "bad-move", "divider move needs {agents:[...]}")
                agents = tuple(sorted(body.agents))
                legal = div_moves(g, sess.d, sess.f)
                if agents not in legal:
                    return _error(409, "illegal-move",
                                  "no agent can enter an adversary vertex and moves "
                                  "must follow edges",
                                  legalMoves=[list(m) for m in legal])
                sess.apply_div_move(agents)
                sess.record({"type": "move", "role": DIVIDER, "by": "human",
                             "move": list(agents)}, log_dir)
            else:
                return _error(409, "not-your-turn", f"turn is {sess.turn}")
            engine_turns(sess)
            return sess.state()

    @app.get("/v1/games/{session_id}/hints")
    def hints(session_id: str):
        sess = _get(session_id)
        if sess is None:
            return _error(404, "unknown-session", "no such session")
        with sess.lock:
            if sess.status != "InProgress" or sess.turn not in (FACILITATOR, DIVIDER):
                return []
            g = sess.inst.graph
            if sess.turn == FACILITATOR:
                ranked = best_moves(g, sess.table, sess.f, sess.d, "facilitator")
                return [{"pair": list(m), "level": "notwinning" if lv is None else lv}
                        for m, lv in ranked]
            ranked = best_moves(g, sess.table, sess.f, sess.d, "divider")
            return [{"agents": list(m), "level": "notwinning" if lv is None else lv}
                    for m, lv in ranked]

    @app.delete("/v1/games/{session_id}")
    def delete(session_id: str):
        with registry_lock:
            gone = sessions.pop(session_id, None)
        if gone is None:
            return _error(404, "unknown-session", "no such session")
        return {"deleted": session_id}

    app.state.sessions = sessions
    return app
