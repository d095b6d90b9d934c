"""Scheme 2: the win-verdict circuit.

Twelve qubits: prize flags D1-D3 (one-hot), Alice's first pick I11I12,
her second pick I21I22, the door-state pair S1S2, and three ancillas
A1-A3 whose measurement decides the game: Alice wins exactly when the
outcome is one-hot (100, 010 or 001).

Stages:

1. encode prize, first and second picks as X gates; prepare the
   three-door superposition on S1S2
2. Bob stage: remove the host-opened door from S, either as nine
   per-(prize, first) gadgets or as the merged form where each removal
   gadget is defined once and fired for its whole case group
3. for each of the six winning sub-cases (prize = second pick, one per
   remaining-door pair and prize), collapse S onto the sub-case's target
   basis state and flip that pair's ancilla with a multi-controlled NOT;
   losing inputs satisfy no gate's controls, so their ancillas stay |000>

Remaining-door pairs map to ancillas the way the readout expects:
{D1,D2} (D3 opened) -> A1, {D1,D3} (D2 opened) -> A2, {D2,D3} (D1
opened) -> A3.

Every stage-3 gate is gated on the prize flag plus first/second-pick
literals, because a (prize, second) pair alone does not determine which
door pair survived the Bob stage.  The two sub-cases whose survivor-pair
condition (first pick != D1) is not a single conjunction are emitted
twice, once per first-pick literal, which is why the ancilla stage holds
eight multi-controlled NOTs of 4-5 controls rather than six.

The collapse reflections are angle-matched to the amplitudes the Bob
stage actually leaves (see gadgets module), so every winning input flips
its ancilla with probability 1 and every losing input leaves |000>
exactly: the sampled verdict is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import sim
from .classical import DOORS, Door, RuleViolation, full_table, host_open
from .gadgets import door_pattern, prep_ops, remove_ops
from .gates import Circuit, controlled, decompose_mcx, mcx, reflection
from .sim import GateOp, StateVector, anti, ctrl

# qubit layout
D = {Door.D1: 0, Door.D2: 1, Door.D3: 2}
I11, I12 = 3, 4  # first pick, high/low
I21, I22 = 5, 6  # second pick, high/low
S1, S2 = 7, 8  # door-state pair, high/low
A = {Door.D1: 9, Door.D2: 10, Door.D3: 11}  # ancilla per surviving pair
N_QUBITS = 12
LABELS = ["D1", "D2", "D3", "I11", "I12", "I21", "I22", "S1", "S2", "A1", "A2", "A3"]

NINE_CASE = "nine_case"
MERGED_FOUR = "merged_four"
BOB_FORMS = (NINE_CASE, MERGED_FOUR)

NATIVE = "native"
DECOMPOSED = "decomposed"
MCX_FORMS = (NATIVE, DECOMPOSED)

WIN_PATTERNS = ("100", "010", "001")

# collapse reflection for the (sqrt3/2, 1/2) pair the D3-removal leaves
_COLLAPSE_TILTED = math.pi / 6


@dataclass
class Verdict:
    ancilla_bits: str  # measured (A1, A2, A3)
    win: bool


def removal_groups() -> dict[Door, list[tuple[Door, Door]]]:
    """Case groups of the merged Bob stage, keyed by the door removed."""
    groups: dict[Door, list[tuple[Door, Door]]] = {d: [] for d in DOORS}
    for prize in DOORS:
        for first in DOORS:
            groups[host_open(prize, first)].append((prize, first))
    return groups


def bob_stage_ops(form: str = NINE_CASE) -> list[GateOp]:
    """The door-opening stage in either form.

    nine_case: one removal gadget per (prize, first) case, gated on the
    prize flag and the full first-pick pattern.

    merged_four: each of the three removal gadgets appears once -- four
    controlled operations in all (Z+H for D1, H for D2, tilted reflection
    for D3) -- and is fired for its whole case group through one or two
    conjunctive control covers over the prize flags and first-pick bits.
    """
    ops: list[GateOp] = []
    if form == NINE_CASE:
        for prize in DOORS:
            for first in DOORS:
                extra = [ctrl(D[prize])] + door_pattern(first, I11, I12)
                ops.extend(remove_ops(host_open(prize, first), S1, S2, extra=extra))
        return ops
    if form == MERGED_FOUR:
        covers = {
            # open D1 <=> prize != D1 and first != D1
            Door.D1: [
                [anti(D[Door.D1]), ctrl(I11)],
                [anti(D[Door.D1]), ctrl(I12)],
            ],
            # open D2 <=> (prize != D2, first = D1) or (prize = D1, first = D3)
            Door.D2: [
                [anti(D[Door.D2]), anti(I11), anti(I12)],
                [ctrl(D[Door.D1]), ctrl(I11)],
            ],
            # open D3 <=> (prize = D2, first = D1) or (prize = D1, first = D2)
            Door.D3: [
                [ctrl(D[Door.D2]), anti(I11), anti(I12)],
                [ctrl(D[Door.D1]), ctrl(I12)],
            ],
        }
        for opened, cover_list in covers.items():
            for cover in cover_list:
                ops.extend(remove_ops(opened, S1, S2, extra=cover))
        return ops
    raise ValueError(f"unknown Bob-stage form {form!r}, expected one of {BOB_FORMS}")


def _win_subcases() -> list[dict]:
    """The six winning sub-cases: gate context, S collapse, ancilla flip.

    Each entry's `context` controls encode prize = second pick plus the
    first-pick literals that pin down which door pair survived; `collapse`
    maps the surviving pair onto `s_state`; the ancilla MCX adds the S
    literal that selects `s_state` (its partner state is unpopulated, so
    one S wire suffices where the pattern allows).
    """
    d1, d2, d3 = Door.D1, Door.D2, Door.D3
    subcases = []

    # pair {D1, D2} (D3 opened) -> A1
    ctx = [ctrl(D[d1]), ctrl(I12), anti(I21), anti(I22)]  # prize=D1, first=D2, second=D1
    subcases.append(
        {
            "pair": "D1D2",
            "context": ctx,
            "collapse": [
                reflection(_COLLAPSE_TILTED, S2, ctx + [anti(S1)]),
                controlled("x", ctx, S2),
            ],
            "mcx_controls": ctx + [ctrl(S2)],
            "ancilla": A[d1],
        }
    )
    ctx = [ctrl(D[d2]), anti(I11), anti(I12), ctrl(I22)]  # prize=D2, first=D1, second=D2
    subcases.append(
        {
            "pair": "D1D2",
            "context": ctx,
            "collapse": [reflection(_COLLAPSE_TILTED, S2, ctx + [anti(S1)])],
            "mcx_controls": ctx + [anti(S2)],
            "ancilla": A[d1],
        }
    )

    # pair {D1, D3} (D2 opened) -> A2
    ctx = [ctrl(D[d1]), anti(I12), anti(I21), anti(I22)]  # prize=D1, first!=D2, second=D1
    subcases.append(
        {
            "pair": "D1D3",
            "context": ctx,
            "collapse": [
                controlled("h", ctx + [anti(S2)], S1),
                controlled("x", ctx, S1),
            ],
            "mcx_controls": ctx + [ctrl(S1)],
            "ancilla": A[d2],
        }
    )
    ctx = [ctrl(D[d3]), anti(I11), anti(I12), ctrl(I21)]  # prize=D3, first=D1, second=D3
    subcases.append(
        {
            "pair": "D1D3",
            "context": ctx,
            "collapse": [controlled("h", ctx + [anti(S2)], S1)],
            "mcx_controls": ctx + [anti(S1)],
            "ancilla": A[d2],
        }
    )

    # pair {D2, D3} (D1 opened) -> A3; first != D1 needs two covers
    for first_literal in (ctrl(I12), ctrl(I11)):
        ctx = [ctrl(D[d2]), first_literal, ctrl(I22)]  # prize=D2, second=D2
        subcases.append(
            {
                "pair": "D2D3",
                "context": ctx,
                "collapse": [
                    controlled("x", ctx + [ctrl(S1)], S2),
                    controlled("h", ctx, S1),
                ],
                "mcx_controls": ctx + [ctrl(S2)],
                "ancilla": A[d3],
            }
        )
    for first_literal in (ctrl(I12), ctrl(I11)):
        ctx = [ctrl(D[d3]), first_literal, ctrl(I21)]  # prize=D3, second=D3
        subcases.append(
            {
                "pair": "D2D3",
                "context": ctx,
                "collapse": [
                    controlled("x", ctx + [ctrl(S1)], S2),
                    controlled("h", ctx, S1),
                    controlled("x", ctx, S1),
                    controlled("x", ctx, S2),
                ],
                "mcx_controls": ctx + [ctrl(S1)],
                "ancilla": A[d3],
            }
        )
    return subcases


def verdict_stage_ops(mcx_form: str = NATIVE) -> list[GateOp]:
    """Collapse transforms and ancilla MCXs for all winning sub-cases.

    In decomposed form the {D2,D3}-pair block runs first so its 4-control
    NOTs can borrow A1 and A2 -- still guaranteed |0> at that point -- as
    clean Toffoli-ladder ancillas; the 5-control blocks stay native because
    no three guaranteed-clean qubits exist for them.
    """
    if mcx_form not in MCX_FORMS:
        raise ValueError(f"unknown mcx form {mcx_form!r}, expected one of {MCX_FORMS}")
    subcases = _win_subcases()
    if mcx_form == DECOMPOSED:
        subcases = sorted(subcases, key=lambda s: s["pair"] != "D2D3")
    ops: list[GateOp] = []
    for sub in subcases:
        ops.extend(sub["collapse"])
        gate = mcx(sub["mcx_controls"], sub["ancilla"])
        if mcx_form == DECOMPOSED and len(sub["mcx_controls"]) == 4:
            borrow = [q for q in (A[Door.D1], A[Door.D2]) if q != sub["ancilla"]]
            ops.extend(decompose_mcx(gate, borrow).ops)
        else:
            ops.append(gate)
    return ops


def build_circuit(
    prize: Door,
    first: Door,
    second: Door,
    bob_form: str = NINE_CASE,
    mcx_form: str = NATIVE,
) -> Circuit:
    opened = host_open(prize, first)
    if second is opened:
        raise RuleViolation(f"second pick {second} is the door the host opened")
    c = Circuit(N_QUBITS, list(LABELS))
    c.x(D[prize])
    for reg, door in (((I11, I12), first), ((I21, I22), second)):
        b = door.value
        if (b >> 1) & 1:
            c.x(reg[0])
        if b & 1:
            c.x(reg[1])
    c.extend(prep_ops(S1, S2))
    c.extend(bob_stage_ops(bob_form))
    c.extend(verdict_stage_ops(mcx_form))
    c.measure([A[Door.D1], A[Door.D2], A[Door.D3]], "verdict")
    return c


def build_bob_stage(form: str = NINE_CASE) -> Circuit:
    """The door-opening stage alone, as a spliceable 12-qubit fragment."""
    return Circuit(N_QUBITS, list(LABELS)).extend(bob_stage_ops(form))


def bob_stage_state(prize: Door, first: Door, form: str = NINE_CASE) -> StateVector:
    """Full-register state right after the Bob stage (no second pick encoded)."""
    c = Circuit(N_QUBITS, list(LABELS))
    c.x(D[prize])
    b = first.value
    if (b >> 1) & 1:
        c.x(I11)
    if b & 1:
        c.x(I12)
    c.extend(prep_ops(S1, S2))
    c.extend(bob_stage_ops(form))
    return c.statevector()


def s_support(prize: Door, first: Door, form: str = NINE_CASE) -> set[str]:
    return set(sim.marginal(bob_stage_state(prize, first, form), [S1, S2]))


def ancilla_distribution(
    prize: Door,
    first: Door,
    second: Door,
    bob_form: str = NINE_CASE,
    mcx_form: str = NATIVE,
) -> dict[str, float]:
    """Exact pre-measurement marginal on (A1, A2, A3)."""
    psi = build_circuit(prize, first, second, bob_form, mcx_form).statevector()
    return sim.marginal(psi, [A[Door.D1], A[Door.D2], A[Door.D3]])


def verdict(
    prize: Door,
    first: Door,
    second: Door,
    rng: np.random.Generator,
    bob_form: str = NINE_CASE,
    mcx_form: str = NATIVE,
) -> Verdict:
    """Measure the ancillas; Alice wins iff the outcome is one-hot.

    The cases are mutually exclusive, so two ancillas reading 1 at once is
    an internal error.
    """
    psi = build_circuit(prize, first, second, bob_form, mcx_form).statevector()
    bits, _ = sim.measure_subset(psi, [A[Door.D1], A[Door.D2], A[Door.D3]], rng)
    if bits.count("1") > 1:
        raise sim.SimulationError(f"multiple ancillas fired at once: {bits}")
    return Verdict(bits, bits in WIN_PATTERNS)


def sweep() -> list[dict]:
    """All 18 valid triples: quantum verdict vs the oracle's case table."""
    rows = []
    rng = np.random.default_rng(0)
    for case in full_table():
        v = verdict(case.prize, case.first, case.second, rng)
        rows.append(
            {
                "prize": case.prize.name,
                "first": case.first.name,
                "second": case.second.name,
                "ancilla": v.ancilla_bits,
                "win_quantum": v.win,
                "win_classical": case.win,
                "agree": v.win == case.win,
            }
        )
    return rows


def sweep_csv() -> str:
    lines = ["prize,first,second,ancilla,win_quantum,win_classical,agree"]
    for r in sweep():
        lines.append(
            f"{r['prize']},{r['first']},{r['second']},{r['ancilla']},"
            f"{str(r['win_quantum']).lower()},{str(r['win_classical']).lower()},"
            f"{str(r['agree']).lower()}"
        )
    return "\n".join(lines) + "\n"
