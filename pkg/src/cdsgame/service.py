"""HTTP/JSON service hosting live swap-game sessions.

Sessions are kept in memory, keyed by random URL-safe tokens, and each
one serializes its own moves behind a lock; the Grundy cache is shared
across sessions.  An optional JSON snapshot file persists sessions over
restarts (written on shutdown, reloaded lazily on first access).

Endpoints (all JSON):

    POST   /api/games            create a session
    GET    /api/games/{id}       current state
    POST   /api/games/{id}/moves apply the human's move (engine replies)
    GET    /api/games/{id}/hint  Grundy value and winning moves
    DELETE /api/games/{id}       drop the session
    POST   /api/inspect          strategic pile etc. for a candidate permutation

Static assets (the browser client) are served under / when a build
directory is present.
"""

from __future__ import annotations

import json
import os
import random
import secrets
import threading
import time
from contextlib import asynccontextmanager
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .game import (
    ONE,
    TWO,
    Context,
    GameState,
    GrundyCache,
    best_moves,
    children,
    grundy,
)
from .perm import check_permutation, fixed_point_index, valid_contexts
from .pile import duration, strategic_pile
from .taxonomy import context_count


@dataclass
class ServiceConfig:
    port: int = 8723
    exact_limit: int = 8
    session_cap: int = 256
    snapshot_path: str | None = None
    static_dir: str | None = None
    seed: int | None = None


@dataclass
class GameSession:
    id: str
    initial: GameState
    human_role: str
    engine_mode: str
    state: GameState = field(init=False)
    move_log: list[Context] = field(default_factory=list)
    created: float = field(default_factory=time.time)
    updated: float = field(default_factory=time.time)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self) -> None:
        self.state = self.initial

    @property
    def mover(self) -> str:
        return ONE if len(self.move_log) % 2 == 0 else TWO

    @property
    def finished(self) -> bool:
        return fixed_point_index(self.state.perm) is not None

    @property
    def winner(self) -> str | None:
        if not self.finished:
            return None
        index = fixed_point_index(self.state.perm)
        return ONE if index in self.initial.targets else TWO

    def apply(self, move: Context) -> None:
        self.state = dict(children(self.state))[move]
        self.move_log.append(move)
        self.updated = time.time()

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "permutation": list(self.state.perm),
            "targets": sorted(self.state.targets),
            "mover": self.mover,
            "legal_moves": [{"p": p, "q": q} for p, q in valid_contexts(self.state.perm)],
            "finished": self.finished,
            "winner": self.winner,
            "move_log": [{"p": p, "q": q} for p, q in self.move_log],
            "human_role": self.human_role,
            "engine_mode": self.engine_mode,
            "initial_permutation": list(self.initial.perm),
            "initial_targets": sorted(self.initial.targets),
        }

    def snapshot(self) -> dict:
        return {
            "id": self.id,
            "permutation": list(self.initial.perm),
            "targets": sorted(self.initial.targets),
            "human_role": self.human_role,
            "engine_mode": self.engine_mode,
            "moves": [list(m) for m in self.move_log],
            "created": self.created,
            "updated": self.updated,
        }


class CreateGameRequest(BaseModel):
    permutation: list[int]
    targets: list[int] = []
    human_role: str = ONE
    engine: str = "optimal"


class MoveRequest(BaseModel):
    p: int
    q: int


class InspectRequest(BaseModel):
    permutation: list[int]


class SessionStore:
    """In-memory sessions with optional snapshot persistence."""

    def __init__(self, config: ServiceConfig) -> None:
        self.config = config
        self.sessions: dict[str, GameSession] = {}
        self._lock = threading.Lock()
        self._loaded = config.snapshot_path is None

    def _ensure_loaded(self) -> None:
        if self._loaded:
            return
        self._loaded = True
        path = Path(self.config.snapshot_path)
        if not path.exists():
            return
        data = json.loads(path.read_text())
        for entry in data.get("sessions", []):
            session = GameSession(
                id=entry["id"],
                initial=GameState(
                    tuple(entry["permutation"]), frozenset(entry["targets"])
                ),
                human_role=entry["human_role"],
                engine_mode=entry["engine_mode"],
            )
            for move in entry["moves"]:
                session.apply(tuple(move))
            session.created = entry.get("created", session.created)
            session.updated = entry.get("updated", session.updated)
            self.sessions[session.id] = session

    def save(self) -> None:
        if self.config.snapshot_path is None:
            return
        with self._lock:
            payload = {"sessions": [s.snapshot() for s in self.sessions.values()]}
        Path(self.config.snapshot_path).write_text(json.dumps(payload))

    def add(self, session: GameSession) -> None:
        with self._lock:
            self._ensure_loaded()
            if len(self.sessions) >= self.config.session_cap:
                raise HTTPException(409, "session capacity reached")
            self.sessions[session.id] = session

    def get(self, session_id: str) -> GameSession:
        with self._lock:
            self._ensure_loaded()
            session = self.sessions.get(session_id)
        if session is None:
            raise HTTPException(404, f"no session {session_id}")
        return session

    def drop(self, session_id: str) -> None:
        with self._lock:
            self._ensure_loaded()
            if session_id not in self.sessions:
                raise HTTPException(404, f"no session {session_id}")
            del self.sessions[session_id]


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    store = SessionStore(config)
    cache = GrundyCache()
    rng = random.Random(config.seed)

    @asynccontextmanager
    async def lifespan(_: FastAPI):
        yield
        store.save()

    app = FastAPI(title="cdsgame service", lifespan=lifespan)
    app.state.store = store
    app.state.config = config

    def engine_move(session: GameSession) -> None:
        state = session.state
        if session.engine_mode == "optimal":
            options = best_moves(state, cache)
            move = options[0] if options else valid_contexts(state.perm)[0]
        else:
            move = rng.choice(valid_contexts(state.perm))
        session.apply(move)

    def engine_turn(session: GameSession) -> bool:
        return not session.finished and session.mover != session.human_role

    @app.post("/api/games", status_code=201)
    def create_game(request: CreateGameRequest) -> dict:
        try:
            perm = check_permutation(request.permutation)
        except ValueError as exc:
            raise HTTPException(400, str(exc))
        pile = strategic_pile(perm).elements
        targets = frozenset(request.targets)
        if not targets <= pile:
            raise HTTPException(
                400,
                f"targets must lie within the strategic pile {sorted(pile)}",
            )
        if request.human_role not in (ONE, TWO):
            raise HTTPException(400, "human_role must be ONE or TWO")
        if request.engine not in ("optimal", "random"):
            raise HTTPException(400, "engine must be optimal or random")
        if (
            request.engine == "optimal"
            and fixed_point_index(perm) is None
            and duration(perm) > config.exact_limit
        ):
            raise HTTPException(
                400,
                f"position needs {duration(perm)} moves; optimal mode is exact only "
                f"up to {config.exact_limit} (use engine=random or raise --exact-limit)",
            )
        session = GameSession(
            id=secrets.token_urlsafe(16),
            initial=GameState(perm, targets),
            human_role=request.human_role,
            engine_mode=request.engine,
        )
        store.add(session)
        with session.lock:
            if engine_turn(session):
                engine_move(session)
        return {"id": session.id, "state": session.to_json()}

    @app.get("/api/games/{session_id}")
    def get_game(session_id: str) -> dict:
        return store.get(session_id).to_json()

    @app.post("/api/games/{session_id}/moves")
    def apply_move(session_id: str, request: MoveRequest) -> dict:
        session = store.get(session_id)
        with session.lock:
            if session.finished:
                raise HTTPException(409, "game is finished")
            if session.mover != session.human_role:
                raise HTTPException(409, "not your turn")
            move = tuple(sorted((request.p, request.q)))
            legal = valid_contexts(session.state.perm)
            if move not in legal:
                raise HTTPException(
                    422,
                    detail={
                        "error": "illegal move",
                        "legal_moves": [{"p": p, "q": q} for p, q in legal],
                    },
                )
            session.apply(move)
            if engine_turn(session):
                engine_move(session)
            return session.to_json()

    @app.get("/api/games/{session_id}/hint")
    def hint(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            state = session.state
            if not session.finished and duration(state.perm) > config.exact_limit:
                raise HTTPException(413, "position too large for exact hints")
            value = grundy(state, cache)
            moves = best_moves(state, cache)
            return {
                "sg": value,
                "winning_moves": [{"p": p, "q": q} for p, q in moves],
            }

    @app.delete("/api/games/{session_id}", status_code=204)
    def delete_game(session_id: str) -> None:
        store.drop(session_id)

    @app.post("/api/inspect")
    def inspect(request: InspectRequest) -> dict:
        try:
            perm = check_permutation(request.permutation)
        except ValueError as exc:
            raise HTTPException(400, str(exc))
        pile = strategic_pile(perm)
        fixed = fixed_point_index(perm)
        return {
            "permutation": list(perm),
            "strategic_pile": pile.to_json(),
            "sortable": not pile.elements,
            "fixed_point": fixed is not None,
            "context_count": context_count(perm),
            "duration": None if fixed is not None else duration(perm),
        }

    static_dir = config.static_dir or os.environ.get("CDS_STATIC") or "frontend/dist"
    if Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    else:

        @app.get("/")
        def index() -> JSONResponse:
            return JSONResponse(
                {
                    "service": "cdsgame",
                    "endpoints": [
                        "POST /api/games",
                        "GET /api/games/{id}",
                        "POST /api/games/{id}/moves",
                        "GET /api/games/{id}/hint",
                        "DELETE /api/games/{id}",
                        "POST /api/inspect",
                    ],
                }
            )

    return app


def serve(config: ServiceConfig) -> None:
    import uvicorn

    port = int(os.environ.get("CDS_PORT", config.port))
    uvicorn.run(create_app(config), host="127.0.0.1", port=port)
