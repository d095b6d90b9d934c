"""Phase-tracked interactive Monty Hall session.

A session walks awaiting_first_pick -> host_opened -> awaiting_final_pick ->
revealed, backed by the classical oracle or one of the quantum circuits.
The prize is drawn classically from the seed at creation for every engine
and never appears in a client projection before the revealed phase.

All randomness is re-derived from (seed, purpose) pairs, so a session
serialized and restored mid-game continues identically.
"""

from __future__ import annotations

import json
import time
import uuid
from dataclasses import dataclass, field

import numpy as np

from . import scheme1, scheme2
from .classical import Door, RuleViolation, host_open, outcome, switch_door

SCHEMA_VERSION = 1

CLASSICAL = "classical"
SCHEME1 = "scheme1"
SCHEME2 = "scheme2"
ENGINES = (CLASSICAL, SCHEME1, SCHEME2)

AWAITING_FIRST_PICK = "awaiting_first_pick"
HOST_OPENED = "host_opened"
AWAITING_FINAL_PICK = "awaiting_final_pick"
REVEALED = "revealed"
PHASES = (AWAITING_FIRST_PICK, HOST_OPENED, AWAITING_FINAL_PICK, REVEALED)


class PhaseError(RuntimeError):
    """Move attempted in the wrong phase."""


@dataclass
class GameSession:
    id: str
    engine: str
    seed: int
    prize: Door  # hidden from clients until revealed
    phase: str = AWAITING_FIRST_PICK
    first: Door | None = None
    opened: Door | None = None
    final: Door | None = None
    result: str | None = None  # "win" | "lose"
    transcript: list[dict] = field(default_factory=list)

    def log(self, event: str, **data):
        self.transcript.append({"t": time.time(), "event": event, **data})


def create_session(engine: str, seed: int) -> GameSession:
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}, expected one of {ENGINES}")
    prize_rng = np.random.default_rng([seed, 0])
    prize = Door(int(prize_rng.integers(3)))
    session = GameSession(id=uuid.uuid4().hex, engine=engine, seed=int(seed), prize=prize)
    session.log("created", engine=engine)
    return session


def pick_first(session: GameSession, door: Door) -> GameSession:
    if session.phase != AWAITING_FIRST_PICK:
        raise PhaseError(f"first pick not allowed in phase {session.phase}")
    session.first = door
    session.log("first_pick", door=door.name)
    session.phase = HOST_OPENED
    session.opened = host_open(session.prize, door)
    session.log("host_opened", door=session.opened.name)
    session.phase = AWAITING_FINAL_PICK
    return session


def _resolve_final(session: GameSession, choice) -> Door:
    if choice == "stick":
        return session.first
    if choice == "switch":
        return switch_door(session.first, session.opened)
    if isinstance(choice, Door):
        if choice is session.opened:
            raise RuleViolation(f"cannot pick the opened door {choice}")
        return choice
    raise ValueError(f"choice must be 'stick', 'switch' or a Door, got {choice!r}")


def pick_final(session: GameSession, choice) -> GameSession:
    """Resolve the final pick and let the session's engine decide the result."""
    if session.phase != AWAITING_FINAL_PICK:
        raise PhaseError(f"final pick not allowed in phase {session.phase}")
    final = _resolve_final(session, choice)
    session.final = final
    session.log("final_pick", choice=choice if isinstance(choice, str) else "door",
                door=final.name)

    if session.engine == CLASSICAL:
        win = outcome(session.prize, session.first, final)
    elif session.engine == SCHEME2:
        rng = np.random.default_rng([session.seed, 1])
        win = scheme2.verdict(session.prize, session.first, final, rng).win
    else:  # scheme1: quantum readout plus the amplitude table for the transcript
        win = scheme1.win_given_final(session.prize, session.first, final)

    session.result = "win" if win else "lose"
    session.phase = REVEALED
    reveal: dict = {"prize": session.prize.name, "result": session.result}
    if session.engine == SCHEME1:
        reveal["amplitudes"] = amplitude_rows(session.prize, session.first)
    session.log("revealed", **reveal)
    return session


def amplitude_rows(prize: Door, first: Door) -> list[dict]:
    rows = []
    for bits, amp in scheme1.alice_amplitudes(prize, first).items():
        p = abs(amp) ** 2
        if p < 1e-12:
            continue  # the opened door and |11> never show up
        rows.append(
            {
                "state": bits,
                "door": Door.from_bits(bits).name if bits != "11" else None,
                "re": amp.real,
                "im": amp.imag,
                "probability": p,
            }
        )
    return rows


def serialize(session: GameSession) -> str:
    """Full storage blob, prize included; field order is part of the format."""
    doc = {
        "schema": SCHEMA_VERSION,
        "id": session.id,
        "phase": session.phase,
        "engine": session.engine,
        "seed": session.seed,
        "prize": session.prize.name,
        "first": session.first.name if session.first else None,
        "opened": session.opened.name if session.opened else None,
        "final": session.final.name if session.final else None,
        "result": session.result,
        "transcript": session.transcript,
    }
    return json.dumps(doc, indent=2) + "\n"


def deserialize(blob: str) -> GameSession:
    try:
        doc = json.loads(blob)
    except json.JSONDecodeError as exc:
        raise ValueError(f"session parse error at position {exc.pos}: {exc.msg}") from exc
    if doc.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported session schema {doc.get('schema')!r}")
    if doc.get("engine") not in ENGINES:
        raise ValueError(f"unknown engine {doc.get('engine')!r}")
    if doc.get("phase") not in PHASES:
        raise ValueError(f"unknown phase {doc.get('phase')!r}")
    session = GameSession(
        id=doc["id"],
        engine=doc["engine"],
        seed=int(doc["seed"]),
        prize=Door[doc["prize"]],
        phase=doc["phase"],
        first=Door[doc["first"]] if doc.get("first") else None,
        opened=Door[doc["opened"]] if doc.get("opened") else None,
        final=Door[doc["final"]] if doc.get("final") else None,
        result=doc.get("result"),
        transcript=list(doc.get("transcript", [])),
    )
    return session


def client_projection(session: GameSession) -> dict:
    """What a player may see: the prize only appears once revealed."""
    doc = {
        "schema": SCHEMA_VERSION,
        "id": session.id,
        "phase": session.phase,
        "engine": session.engine,
        "first": session.first.name if session.first else None,
        "opened": session.opened.name if session.opened else None,
        "transcript": session.transcript,
    }
    if session.phase == REVEALED:
        doc["final"] = session.final.name
        doc["result"] = session.result
        doc["prize"] = session.prize.name
    return doc
