"""Dense statevector simulation of a small qubit register.

Basis convention, shared by every module in this package: bit i of a basis
index is the value of qubit i, and qubit 0 is the least significant bit.
Bitstring keys therefore render qubit n-1 leftmost, so a printed key reads
like a ket label |q_{n-1} ... q_1 q_0>.  Two-qubit door registers are always
handled as (high, low) index pairs so door labels read left to right.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MAX_QUBITS = 16
NORM_TOL = 1e-9
UNITARY_TOL = 1e-12
SUPPORT_EPS = 1e-10
PROB_EPS = 1e-12


class SimulationError(RuntimeError):
    """An internal invariant broke (zero-norm branch, non-finite amplitude)."""


@dataclass(frozen=True)
class Control:
    """One control wire: the gate acts only where `qubit` holds `active_on`.

    active_on=1 is a regular control, active_on=0 an anti-control (the
    "anti-controlled" gates that open doors by zeroing a basis state).
    """

    qubit: int
    active_on: int = 1

    def __post_init__(self):
        if self.active_on not in (0, 1):
            raise ValueError(f"control polarity must be 0 or 1, got {self.active_on}")


def ctrl(qubit: int) -> Control:
    return Control(qubit, 1)


def anti(qubit: int) -> Control:
    return Control(qubit, 0)


@dataclass(frozen=True, eq=False)
class GateOp:
    """A single-qubit unitary with an arbitrary set of (anti-)controls.

    `name`/`param` identify the base operation for text export: one of
    "h", "x", "z" or "r" (real reflection by `param` radians; "h" is the
    45-degree reflection).
    """

    target: int
    u: np.ndarray
    controls: tuple[Control, ...] = ()
    name: str = ""
    param: float | None = None

    def __post_init__(self):
        u = np.asarray(self.u, dtype=np.complex128)
        if u.shape != (2, 2):
            raise ValueError(f"gate matrix must be 2x2, got {u.shape}")
        if np.abs(u.conj().T @ u - np.eye(2)).max() > UNITARY_TOL:
            raise ValueError("gate matrix is not unitary")
        u = u.copy()
        u.setflags(write=False)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "controls", tuple(self.controls))
        wires = [c.qubit for c in self.controls] + [self.target]
        if len(set(wires)) != len(wires):
            raise ValueError(f"control/target qubits overlap: {wires}")


class StateVector:
    """Complex amplitudes over the 2^n computational basis states."""

    __slots__ = ("n_qubits", "amps")

    def __init__(self, n_qubits: int, amps: np.ndarray):
        self.n_qubits = n_qubits
        self.amps = np.asarray(amps, dtype=np.complex128)
        if self.amps.shape != (1 << n_qubits,):
            raise ValueError(
                f"expected {1 << n_qubits} amplitudes, got {self.amps.shape}"
            )

    def copy(self) -> "StateVector":
        return StateVector(self.n_qubits, self.amps.copy())

    def norm(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))

    def bitstring(self, index: int) -> str:
        return format(index, f"0{self.n_qubits}b")

    def __repr__(self):
        return f"StateVector(n_qubits={self.n_qubits})"


def new_state(n_qubits: int) -> StateVector:
    """All-|0> register of 1..16 qubits."""
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise ValueError(f"n_qubits must be in 1..{MAX_QUBITS}, got {n_qubits}")
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(n_qubits, amps)


def _check_gate(state: StateVector, g: GateOp):
    n = state.n_qubits
    for q in [g.target] + [c.qubit for c in g.controls]:
        if not 0 <= q < n:
            raise ValueError(f"qubit {q} out of range for {n}-qubit register")


def apply_gate(state: StateVector, g: GateOp) -> StateVector:
    """Apply `g` to every basis pair whose controls are satisfied.

    Pure: returns a new StateVector. Norm is preserved by unitarity.
    """
    _check_gate(state, g)
    idx = np.arange(1 << state.n_qubits)
    sel = np.ones(idx.shape, dtype=bool)
    for c in g.controls:
        sel &= ((idx >> c.qubit) & 1) == c.active_on
    i0 = idx[sel & (((idx >> g.target) & 1) == 0)]
    i1 = i0 | (1 << g.target)
    out = state.amps.copy()
    a0, a1 = state.amps[i0], state.amps[i1]
    out[i0] = g.u[0, 0] * a0 + g.u[0, 1] * a1
    out[i1] = g.u[1, 0] * a0 + g.u[1, 1] * a1
    if not np.all(np.isfinite(out.view(np.float64))):
        raise SimulationError("non-finite amplitude after gate application")
    return StateVector(state.n_qubits, out)


def apply_ops(state: StateVector, ops) -> StateVector:
    for g in ops:
        state = apply_gate(state, g)
    return state


def probabilities(state: StateVector) -> dict[str, float]:
    """Born-rule distribution over basis bitstrings; entries below 1e-12 omitted."""
    probs = np.abs(state.amps) ** 2
    return {
        state.bitstring(i): float(p) for i, p in enumerate(probs) if p > PROB_EPS
    }


def _subset_index(state: StateVector, qubits: list[int]) -> np.ndarray:
    """Map each basis index to the joint value of `qubits`, first listed = high bit."""
    n = state.n_qubits
    if len(set(qubits)) != len(qubits):
        raise ValueError(f"duplicate qubit in {qubits}")
    for q in qubits:
        if not 0 <= q < n:
            raise ValueError(f"qubit {q} out of range for {n}-qubit register")
    idx = np.arange(1 << n)
    sub = np.zeros(idx.shape, dtype=np.int64)
    k = len(qubits)
    for j, q in enumerate(qubits):
        sub |= ((idx >> q) & 1) << (k - 1 - j)
    return sub


def marginal(state: StateVector, qubits: list[int]) -> dict[str, float]:
    """Distribution over the listed qubits' joint values, tracing out the rest.

    Keys are bitstrings in the order the qubits were listed (first = leftmost).
    """
    sub = _subset_index(state, qubits)
    k = len(qubits)
    probs = np.bincount(sub, weights=np.abs(state.amps) ** 2, minlength=1 << k)
    return {
        format(v, f"0{k}b"): float(p) for v, p in enumerate(probs) if p > PROB_EPS
    }


def measure_subset(
    state: StateVector, qubits: list[int], rng: np.random.Generator
) -> tuple[str, StateVector]:
    """Sample the listed qubits and collapse the register.

    Returns (outcome bits, renormalized post-measurement state). Outcome bit
    order matches marginal(): first listed qubit is the leftmost bit.
    Deterministic under a fixed rng state.
    """
    sub = _subset_index(state, qubits)
    k = len(qubits)
    probs = np.bincount(sub, weights=np.abs(state.amps) ** 2, minlength=1 << k)
    total = probs.sum()
    if abs(total - 1.0) > 1e-6:
        raise SimulationError(f"state norm {total} too far from 1 to measure")
    outcome = int(rng.choice(1 << k, p=probs / total))
    p_branch = probs[outcome]
    if p_branch < PROB_EPS:
        raise SimulationError("sampled a zero-probability measurement branch")
    amps = np.where(sub == outcome, state.amps, 0.0)
    amps = amps / np.sqrt(p_branch)
    return format(outcome, f"0{k}b"), StateVector(state.n_qubits, amps)


def support(state: StateVector, threshold: float = SUPPORT_EPS) -> set[str]:
    """Basis bitstrings with probability above `threshold`."""
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    probs = np.abs(state.amps) ** 2
    return {state.bitstring(i) for i in np.nonzero(probs > threshold)[0]}
