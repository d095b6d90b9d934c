"""Scheme 1: the win-probability circuit.

Twelve qubits: three prize flags D1-D3 (one-hot), three primed copies
D1'-D3' kept aside as the win-readout register, Bob's door pair B1B2,
Alice's first-pick input A1A2, and Alice's final-choice pair A3A4.

Stages, in circuit order:

1. encode the prize one-hot on D and copy it to the primed register;
   encode Alice's first pick on A1A2
2. prepare the three-door superposition on B1B2 and on A3A4
3. remove Alice's picked door from B1B2 (one gadget per pick, gated on
   the A1A2 pattern)
4. remove the host-opened door from A3A4 (one gadget per (prize, first)
   case -- nine in all -- gated on the prize flag and the A1A2 pattern)
5. entangle the registers with CNOT A3->B1, A4->B2

After stage 4 the A3A4 register holds exactly the two unopened doors, so
measuring it can never produce the opened door: that is the "restricted"
measurement.  The win readout then measures the primed flag of whichever
door A3A4 collapsed to.

The A3A4 support sets are the normative contract here; amplitudes are the
exact values the gadget algebra produces (see gadgets module), not the
uniform pairs an idealized description would suggest.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import sim
from .classical import DOORS, Door, RuleViolation, host_open, switch_door
from .gadgets import door_pattern, prep_ops, remove_ops
from .gates import Circuit
from .sim import StateVector, ctrl

# qubit layout
D = {Door.D1: 0, Door.D2: 1, Door.D3: 2}
DP = {Door.D1: 3, Door.D2: 4, Door.D3: 5}  # primed copies, win readout
B1, B2 = 6, 7
A1, A2 = 8, 9
A3, A4 = 10, 11
N_QUBITS = 12
LABELS = ["D1", "D2", "D3", "D1'", "D2'", "D3'", "B1", "B2", "A1", "A2", "A3", "A4"]

MEASURE = "measure"
STRATEGIES = ("stick", "switch", MEASURE)


@dataclass
class GameResult:
    """One restricted-measurement playthrough."""

    alice_marginal: dict[str, float]
    opened: Door
    final_door: Door
    win: bool


def build_circuit(prize: Door, first: Door) -> Circuit:
    c = Circuit(N_QUBITS, list(LABELS))
    # stage 1: classical inputs compiled to X gates; primed copies via CNOT
    c.x(D[prize])
    for d in DOORS:
        c.cx(D[d], DP[d])
    fb = first.value
    if (fb >> 1) & 1:
        c.x(A1)
    if fb & 1:
        c.x(A2)
    # stage 2: three-door superpositions
    c.extend(prep_ops(B1, B2))
    c.extend(prep_ops(A3, A4))
    # stage 3: drop Alice's pick from Bob's pair, selected by the A1A2 pattern
    for pick in DOORS:
        c.extend(remove_ops(pick, B1, B2, extra=door_pattern(pick, A1, A2)))
    # stage 4: drop the opened door from A3A4, one gadget per (prize, first)
    for pz in DOORS:
        for fd in DOORS:
            extra = [ctrl(D[pz])] + door_pattern(fd, A1, A2)
            c.extend(remove_ops(host_open(pz, fd), A3, A4, extra=extra))
    # stage 5: entangle Alice's final pair with Bob's
    c.cx(A3, B1)
    c.cx(A4, B2)
    c.measure([A3, A4], "final_door")
    c.measure([DP[Door.D1], DP[Door.D2], DP[Door.D3]], "prize_readout")
    return c


def alice_amplitudes(prize: Door, first: Door) -> dict[str, complex]:
    """Exact pure-state amplitudes of A3A4 before the entangling stage.

    Computed from the two-qubit gadget algebra (prep then removal of the
    opened door); the full-circuit marginal must agree and tests check that.
    """
    opened = host_open(prize, first)
    state = sim.new_state(2)
    state = sim.apply_ops(state, prep_ops(1, 0))
    state = sim.apply_ops(state, remove_ops(opened, 1, 0))
    return {format(i, "02b"): complex(a) for i, a in enumerate(state.amps)}


def statevector(prize: Door, first: Door) -> StateVector:
    return build_circuit(prize, first).statevector()


def alice_marginal(prize: Door, first: Door) -> dict[str, float]:
    return sim.marginal(statevector(prize, first), [A3, A4])


def restricted_measurement(
    prize: Door, first: Door, rng: np.random.Generator
) -> GameResult:
    """Sample Alice's final door, then read the win flag off the primed register.

    The opened door and |11> carry zero amplitude by construction, so the
    sampled outcome always names an unopened door.
    """
    opened = host_open(prize, first)
    psi = statevector(prize, first)
    marg = sim.marginal(psi, [A3, A4])
    bits, collapsed = sim.measure_subset(psi, [A3, A4], rng)
    if bits == "11" or bits == opened.bits:
        raise sim.SimulationError(f"measured impossible A3A4 outcome {bits}")
    final = Door.from_bits(bits)
    win_bit, _ = sim.measure_subset(collapsed, [DP[final]], rng)
    return GameResult(marg, opened, final, win_bit == "1")


def sample_final_doors(
    prize: Door, first: Door, rng: np.random.Generator, shots: int
) -> dict[str, int]:
    """Histogram of `shots` restricted measurements of A3A4.

    Equivalent to repeating restricted_measurement: each run re-prepares the
    same state, so the outcomes are iid draws from one marginal.
    """
    psi = statevector(prize, first)
    probs = np.zeros(4)
    for bits, p in sim.marginal(psi, [A3, A4]).items():
        probs[int(bits, 2)] = p
    draws = rng.choice(4, p=probs / probs.sum(), size=shots)
    counts = np.bincount(draws, minlength=4)
    return {format(v, "02b"): int(c) for v, c in enumerate(counts) if c}


def win_probability(prize: Door, first: Door, strategy: str) -> float:
    """Win probability for stick, switch, or measuring the quantum register."""
    opened = host_open(prize, first)
    if strategy == "stick":
        return 1.0 if prize is first else 0.0
    if strategy == "switch":
        return 1.0 if prize is switch_door(first, opened) else 0.0
    if strategy == MEASURE:
        amp = alice_amplitudes(prize, first)[prize.bits]
        return float(abs(amp) ** 2)
    raise ValueError(f"unknown strategy {strategy!r}")


def win_given_final(prize: Door, first: Door, final: Door) -> bool:
    """Win flag read from the primed register after collapsing A3A4 to `final`."""
    opened = host_open(prize, first)
    if final is opened:
        raise RuleViolation(f"final pick {final} is the opened door")
    psi = statevector(prize, first)
    joint = sim.marginal(psi, [A3, A4, DP[final]])
    p_final = sum(p for bits, p in joint.items() if bits[:2] == final.bits)
    p_win = joint.get(final.bits + "1", 0.0)
    if p_final < sim.PROB_EPS:
        raise sim.SimulationError(f"final door {final} has zero amplitude")
    return p_win / p_final > 0.5


def sweep() -> list[dict]:
    """All nine (prize, first) cases with supports and win probabilities."""
    rows = []
    for prize in DOORS:
        for first in DOORS:
            amps = alice_amplitudes(prize, first)
            supp = sorted(
                bits for bits, a in amps.items() if abs(a) ** 2 > sim.SUPPORT_EPS
            )
            rows.append(
                {
                    "prize": prize.name,
                    "first": first.name,
                    "opened": host_open(prize, first).name,
                    "support": supp,
                    "p_stick": win_probability(prize, first, "stick"),
                    "p_switch": win_probability(prize, first, "switch"),
                    "p_measure": win_probability(prize, first, MEASURE),
                }
            )
    return rows


def sweep_csv() -> str:
    lines = ["prize,first,opened,p_stick,p_switch,p_measure"]
    for r in sweep():
        lines.append(
            f"{r['prize']},{r['first']},{r['opened']},"
            f"{r['p_stick']:.6f},{r['p_switch']:.6f},{r['p_measure']:.6f}"
        )
    return "\n".join(lines) + "\n"
