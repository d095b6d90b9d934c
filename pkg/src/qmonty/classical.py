"""Exhaustive classical Monty Hall evaluator.

The host rule is deterministic: Bob opens the lowest-numbered door that is
neither the prize door nor Alice's pick (D1 < D2 < D3). This module is the
ground truth every quantum verdict is checked against.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import NamedTuple


class RuleViolation(ValueError):
    """A move the game rules forbid (picking the opened door)."""


class Door(enum.Enum):
    D1 = 0
    D2 = 1
    D3 = 2

    @property
    def bits(self) -> str:
        """Two-bit encoding: D1=00, D2=01, D3=10. 11 is never a door."""
        return format(self.value, "02b")

    @property
    def number(self) -> int:
        return self.value + 1

    @classmethod
    def from_bits(cls, bits: str) -> "Door":
        value = int(bits, 2)
        if value > 2:
            raise ValueError(f"bit pattern {bits!r} does not encode a door")
        return cls(value)

    @classmethod
    def from_number(cls, number: int) -> "Door":
        return cls(number - 1)

    def __str__(self):
        return self.name


DOORS = (Door.D1, Door.D2, Door.D3)

STICK = "stick"
SWITCH = "switch"


def host_open(prize: Door, first: Door) -> Door:
    """The lowest door that is neither the prize nor Alice's first pick."""
    return next(d for d in DOORS if d is not prize and d is not first)


def switch_door(first: Door, opened: Door) -> Door:
    """The one remaining unopened door that is not Alice's first pick."""
    return next(d for d in DOORS if d is not first and d is not opened)


def outcome(prize: Door, first: Door, second: Door) -> bool:
    """True iff Alice's final pick wins. Picking the opened door is illegal."""
    if second is host_open(prize, first):
        raise RuleViolation(
            f"second pick {second} is the door the host already opened"
        )
    return second is prize


class CaseRow(NamedTuple):
    prize: Door
    first: Door
    opened: Door
    second: Door
    win: bool


def full_table() -> list[CaseRow]:
    """All 18 valid (prize, first, second) cases, prize-major order."""
    rows = []
    for prize in DOORS:
        for first in DOORS:
            opened = host_open(prize, first)
            for second in DOORS:
                if second is opened:
                    continue
                rows.append(CaseRow(prize, first, opened, second, second is prize))
    return rows


def strategy_payoff(strategy: str) -> Fraction:
    """Exact win probability under uniform prize and uniform first pick."""
    if strategy not in (STICK, SWITCH):
        raise ValueError(f"unknown strategy {strategy!r}")
    wins = 0
    for prize in DOORS:
        for first in DOORS:
            opened = host_open(prize, first)
            second = first if strategy == STICK else switch_door(first, opened)
            wins += outcome(prize, first, second)
    return Fraction(wins, 9)


def table_csv(rows: list[CaseRow]) -> str:
    lines = ["prize,first,opened,second,win"]
    for r in rows:
        lines.append(
            f"{r.prize},{r.first},{r.opened},{r.second},{str(r.win).lower()}"
        )
    return "\n".join(lines) + "\n"
