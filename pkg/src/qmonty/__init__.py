"""Quantum Monty Hall: a small statevector simulator, the win-probability
and win-verdict game circuits, a classical exhaustive oracle, and a playable
game engine with CLI and HTTP front ends."""

from .classical import Door, RuleViolation, full_table, host_open, outcome, strategy_payoff
from .gates import Circuit, circuit_unitary, controlled, decompose_mcx, mcx, std_gate
from .sim import (
    Control,
    GateOp,
    StateVector,
    anti,
    apply_gate,
    ctrl,
    marginal,
    measure_subset,
    new_state,
    probabilities,
    support,
)

__all__ = [
    "Door",
    "RuleViolation",
    "full_table",
    "host_open",
    "outcome",
    "strategy_payoff",
    "Circuit",
    "circuit_unitary",
    "controlled",
    "decompose_mcx",
    "mcx",
    "std_gate",
    "Control",
    "GateOp",
    "StateVector",
    "anti",
    "apply_gate",
    "ctrl",
    "marginal",
    "measure_subset",
    "new_state",
    "probabilities",
    "support",
]

__version__ = "0.1.0"
