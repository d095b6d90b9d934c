"""HTTP API for playing sessions and inspecting the verification sweeps.

Error bodies carry exactly one machine-readable code:
bad_request (400), not_found (404), conflict (409), rule_violation (422),
internal (500).
"""

from __future__ import annotations

import os
import threading
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import game, scheme1, scheme2
from .classical import Door, RuleViolation
from .game import GameSession, PhaseError


class SessionNotFound(KeyError):
    pass


class SessionStore:
    """In-memory session map with optional write-through to blob files."""

    def __init__(self, data_dir: str | None = None):
        self._sessions: dict[str, GameSession] = {}
        self._lock = threading.Lock()
        self.data_dir = Path(data_dir) if data_dir else None
        if self.data_dir:
            self.data_dir.mkdir(parents=True, exist_ok=True)

    def add(self, session: GameSession):
        with self._lock:
            self._sessions[session.id] = session
            self._flush(session)

    def get(self, session_id: str) -> GameSession:
        with self._lock:
            try:
                return self._sessions[session_id]
            except KeyError:
                raise SessionNotFound(session_id) from None

    def save(self, session: GameSession):
        with self._lock:
            self._flush(session)

    def _flush(self, session: GameSession):
        if self.data_dir:
            path = self.data_dir / f"session-{session.id}.json"
            path.write_text(game.serialize(session))


class CreateSessionRequest(BaseModel):
    engine: str
    seed: int | None = None


class MoveRequest(BaseModel):
    action: str
    door: str | None = None
    choice: str | None = None


def _parse_door(name: str | None) -> Door:
    try:
        return Door[name]
    except (KeyError, TypeError):
        raise ValueError(f"invalid door {name!r}, expected D1, D2 or D3") from None


def create_app(data_dir: str | None = None, frontend_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="qmonty", version="0.1.0")
    store = SessionStore(data_dir)
    app.state.store = store

    def error(status: int, code: str, message: str) -> JSONResponse:
        return JSONResponse(status_code=status, content={"code": code, "message": message})

    @app.exception_handler(ValueError)
    async def _bad_request(request: Request, exc: ValueError):
        if isinstance(exc, RuleViolation):
            return error(422, "rule_violation", str(exc))
        return error(400, "bad_request", str(exc))

    @app.exception_handler(SessionNotFound)
    async def _not_found(request: Request, exc: SessionNotFound):
        return error(404, "not_found", f"no such session: {exc.args[0]}")

    @app.exception_handler(PhaseError)
    async def _conflict(request: Request, exc: PhaseError):
        return error(409, "conflict", str(exc))

    @app.exception_handler(Exception)
    async def _internal(request: Request, exc: Exception):
        return error(500, "internal", f"{type(exc).__name__}: {exc}")

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionRequest):
        seed = body.seed
        if seed is None:
            seed = int.from_bytes(os.urandom(8), "big") >> 1
        session = game.create_session(body.engine, seed)
        store.add(session)
        return game.client_projection(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        return game.client_projection(store.get(session_id))

    @app.post("/sessions/{session_id}/move")
    def move(session_id: str, body: MoveRequest):
        session = store.get(session_id)
        if body.action == "first_pick":
            game.pick_first(session, _parse_door(body.door))
        elif body.action == "final_pick":
            if body.choice in ("stick", "switch"):
                game.pick_final(session, body.choice)
            elif body.door is not None:
                game.pick_final(session, _parse_door(body.door))
            else:
                raise ValueError("final_pick needs choice=stick|switch or a door")
        else:
            raise ValueError(f"unknown action {body.action!r}")
        store.save(session)
        return game.client_projection(session)

    @app.get("/sessions/{session_id}/amplitudes")
    def amplitudes(session_id: str):
        session = store.get(session_id)
        if session.engine != game.SCHEME1:
            raise ValueError(f"engine {session.engine} has no amplitude view")
        if session.phase != game.REVEALED:
            raise PhaseError("amplitudes are available once the session is revealed")
        rows = game.amplitude_rows(session.prize, session.first)
        return {"id": session.id, "amplitudes": rows}

    @app.get("/sweep")
    def sweep(scheme: int):
        if scheme == 1:
            return {"scheme": 1, "rows": scheme1.sweep()}
        if scheme == 2:
            return {"scheme": 2, "rows": scheme2.sweep()}
        raise ValueError(f"unknown scheme {scheme}, expected 1 or 2")

    front = Path(frontend_dir) if frontend_dir else None
    if front and front.is_dir():
        app.mount("/", StaticFiles(directory=str(front), html=True), name="ui")

    return app
