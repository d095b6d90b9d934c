"""Command-line entry point: interactive play, verification sweeps,
circuit export, and the HTTP service."""

from __future__ import annotations

import json
import os
import sys

import click
import numpy as np

from . import circuit_text, game, scheme1, scheme2
from .classical import Door, RuleViolation

DEFAULT_ADDR = "127.0.0.1:8000"


def _parse_door_arg(value: str) -> Door:
    value = value.strip().upper()
    if value in ("1", "2", "3"):
        return Door.from_number(int(value))
    try:
        return Door[value]
    except KeyError:
        raise click.UsageError(f"invalid door {value!r}, use 1-3 or D1-D3") from None


@click.group()
def main():
    """Quantum Monty Hall toolkit."""


@main.command()
@click.option("--engine", type=click.Choice(game.ENGINES), default=game.CLASSICAL,
              show_default=True)
@click.option("--seed", type=int, default=None, help="session seed (random if omitted)")
def play(engine, seed):
    """Play one game in the terminal."""
    if seed is None:
        seed = int.from_bytes(os.urandom(4), "big")
        click.echo(f"seed: {seed}")
    session = game.create_session(engine, seed)

    def door_proc(value):
        value = str(value).strip()
        if value not in ("1", "2", "3"):
            raise click.UsageError("pick door 1, 2 or 3")
        return Door.from_number(int(value))

    first = click.prompt("Pick a door (1-3)", value_proc=door_proc)
    game.pick_first(session, first)
    click.echo(f"The host opens door {session.opened.number} - no prize there.")

    def choice_proc(value):
        value = str(value).strip().lower()
        if value in ("stick", "switch"):
            return value
        if value in ("1", "2", "3"):
            door = Door.from_number(int(value))
            if door is session.opened:
                raise click.UsageError("that door is already open")
            return door
        raise click.UsageError("answer stick, switch, or a door number")

    choice = click.prompt("Stick or switch (or door 1-3)", value_proc=choice_proc)
    game.pick_final(session, choice)
    click.echo(
        f"You picked door {session.final.number}. "
        f"Result: {session.result.upper()} - the prize was behind door "
        f"{session.prize.number}."
    )
    if engine == game.SCHEME1:
        click.echo("Final-register amplitudes before measurement:")
        for row in game.amplitude_rows(session.prize, session.first):
            door = row["door"] or "--"
            click.echo(
                f"  |{row['state']}> {door:>2}  amp {row['re']:+.6f}{row['im']:+.6f}j"
                f"  p={row['probability']:.6f}"
            )
    elif engine == game.SCHEME2:
        rng = np.random.default_rng([seed, 1])
        v = scheme2.verdict(session.prize, session.first, session.final, rng)
        click.echo(f"Verdict ancillas (A1 A2 A3): {v.ancilla_bits}")


def _rows_table(rows: list[dict]) -> str:
    if not rows:
        return ""
    keys = list(rows[0])
    cells = [[_cell(r[k]) for k in keys] for r in rows]
    widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
    lines = ["  ".join(k.ljust(w) for k, w in zip(keys, widths))]
    for row in cells:
        lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def _cell(value) -> str:
    if isinstance(value, float):
        return f"{value:.6f}"
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, list):
        return "{" + ",".join(value) + "}"
    return str(value)


@main.command()
@click.option("--scheme", required=True, help="1 or 2")
@click.option("--format", "fmt", type=click.Choice(["table", "csv", "json"]),
              default="table", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="write to file instead of stdout")
def simulate(scheme, fmt, out):
    """Run a scheme's full verification sweep.

    Exits 1 if any scheme-2 row disagrees with the classical oracle.
    """
    if scheme not in ("1", "2"):
        raise click.UsageError(f"unknown scheme {scheme!r}, expected 1 or 2")
    mod = scheme1 if scheme == "1" else scheme2
    rows = mod.sweep()
    if fmt == "csv":
        text = mod.sweep_csv()
    elif fmt == "json":
        text = json.dumps({"scheme": int(scheme), "rows": rows}, indent=2) + "\n"
    else:
        text = _rows_table(rows)
    if out:
        try:
            with open(out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            click.echo(f"cannot write {out}: {exc}", err=True)
            sys.exit(1)
    else:
        click.echo(text, nl=False)
    if scheme == "2" and not all(r["agree"] for r in rows):
        click.echo("scheme-2 verdicts disagree with the classical oracle", err=True)
        sys.exit(1)


@main.command()
@click.option("--scheme", required=True, help="1 or 2")
@click.option("--prize", required=True, help="prize door (1-3 or D1-D3)")
@click.option("--first", required=True, help="Alice's first pick")
@click.option("--second", default=None, help="Alice's second pick (scheme 2 only)")
@click.option("--out", required=True, type=click.Path(dir_okay=False))
def export(scheme, prize, first, second, out):
    """Write a game circuit in the text format."""
    prize_d = _parse_door_arg(prize)
    first_d = _parse_door_arg(first)
    if scheme == "1":
        circuit = scheme1.build_circuit(prize_d, first_d)
    elif scheme == "2":
        if second is None:
            raise click.UsageError("scheme 2 needs --second")
        try:
            circuit = scheme2.build_circuit(prize_d, first_d, _parse_door_arg(second))
        except RuleViolation as exc:
            raise click.UsageError(str(exc)) from None
    else:
        raise click.UsageError(f"unknown scheme {scheme!r}, expected 1 or 2")
    try:
        with open(out, "w") as fh:
            fh.write(circuit_text.export_circuit(circuit))
    except OSError as exc:
        click.echo(f"cannot write {out}: {exc}", err=True)
        sys.exit(1)
    click.echo(f"wrote {out}")


@main.command()
@click.option("--addr", envvar="QMONTY_ADDR", default=DEFAULT_ADDR, show_default=True,
              help="bind address host:port (env QMONTY_ADDR)")
@click.option("--data-dir", type=click.Path(file_okay=False), default=None,
              help="write session blobs here")
@click.option("--ui-dir", type=click.Path(file_okay=False), default="frontend/dist",
              show_default=True, help="static frontend to serve at /")
def serve(addr, data_dir, ui_dir):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    host, _, port = addr.rpartition(":")
    if not host or not port.isdigit():
        raise click.UsageError(f"bad --addr {addr!r}, expected host:port")
    app = create_app(data_dir=data_dir, frontend_dir=ui_dir)
    uvicorn.run(app, host=host, port=int(port))


if __name__ == "__main__":
    main()
