"""Gate constructors, circuits, multi-controlled-NOT decomposition and a
dense-matrix oracle for equivalence checks.

r(theta) = [[cos t, sin t], [sin t, -cos t]] is a real self-inverse
reflection; h is r(pi/4).  A reflection tilted to theta = atan(b/a) maps the
amplitude pair (a, b) exactly to (sqrt(a^2+b^2), 0), which is what the
door-removal gadgets rely on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .sim import GateOp, StateVector, apply_gate, ctrl, new_state

UNITARY_ORACLE_MAX_QUBITS = 10
MCX_MIN_CONTROLS = 2
MCX_MAX_CONTROLS = 5

_SQRT2_INV = 1.0 / math.sqrt(2.0)

H_MAT = np.array([[1, 1], [1, -1]], dtype=np.complex128) * _SQRT2_INV
X_MAT = np.array([[0, 1], [1, 0]], dtype=np.complex128)
Z_MAT = np.array([[1, 0], [0, -1]], dtype=np.complex128)

_NAMED = {"h": H_MAT, "x": X_MAT, "z": Z_MAT}


def reflection_matrix(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, s], [s, -c]], dtype=np.complex128)


def std_gate(name: str, target: int) -> GateOp:
    """Uncontrolled H, X or Z on `target`."""
    key = name.lower()
    if key not in _NAMED:
        raise ValueError(f"unknown gate name {name!r}, expected one of h, x, z")
    return GateOp(target, _NAMED[key], (), name=key)


def controlled(name: str, controls, target: int) -> GateOp:
    """H, X or Z on `target`, active only where every control matches.

    Anti-controls (Control(q, 0)) realize the anti-controlled gates: the
    operation fires on |0> instead of |1>.
    """
    key = name.lower()
    if key not in _NAMED:
        raise ValueError(f"unknown gate name {name!r}, expected one of h, x, z")
    return GateOp(target, _NAMED[key], tuple(controls), name=key)


def reflection(theta: float, target: int, controls=()) -> GateOp:
    """Controlled real reflection by `theta`; reflection(pi/4, t) equals H."""
    return GateOp(target, reflection_matrix(theta), tuple(controls), name="r", param=theta)


def cnot(control: int, target: int) -> GateOp:
    return controlled("x", [ctrl(control)], target)


def mcx(controls, target: int) -> GateOp:
    """X on `target` gated on 2..5 (anti-)controls."""
    controls = tuple(controls)
    if not MCX_MIN_CONTROLS <= len(controls) <= MCX_MAX_CONTROLS:
        raise ValueError(
            f"mcx takes {MCX_MIN_CONTROLS}..{MCX_MAX_CONTROLS} controls, got "
            f"{len(controls)}; use controlled() for fewer"
        )
    return GateOp(target, X_MAT, controls, name="x")


@dataclass
class Circuit:
    """Ordered gate list over a labeled register.

    `measurements` records (qubit list, tag) pairs for export; they do not
    affect statevector simulation.
    """

    n_qubits: int
    labels: list[str] = field(default_factory=list)
    ops: list[GateOp] = field(default_factory=list)
    measurements: list[tuple[list[int], str]] = field(default_factory=list)

    def __post_init__(self):
        if not self.labels:
            self.labels = [f"q{i}" for i in range(self.n_qubits)]
        if len(self.labels) != self.n_qubits:
            raise ValueError("label count must equal n_qubits")
        if len(set(self.labels)) != self.n_qubits:
            raise ValueError("labels must be unique")

    def add(self, op: GateOp) -> "Circuit":
        wires = [op.target] + [c.qubit for c in op.controls]
        if any(not 0 <= q < self.n_qubits for q in wires):
            raise ValueError(f"gate wires {wires} out of range for {self.n_qubits} qubits")
        self.ops.append(op)
        return self

    def extend(self, ops) -> "Circuit":
        for op in ops:
            self.add(op)
        return self

    def h(self, q: int) -> "Circuit":
        return self.add(std_gate("h", q))

    def x(self, q: int) -> "Circuit":
        return self.add(std_gate("x", q))

    def z(self, q: int) -> "Circuit":
        return self.add(std_gate("z", q))

    def cx(self, control: int, target: int) -> "Circuit":
        return self.add(cnot(control, target))

    def measure(self, qubits: list[int], tag: str) -> "Circuit":
        if any(not 0 <= q < self.n_qubits for q in qubits):
            raise ValueError(f"measurement qubits {qubits} out of range")
        self.measurements.append((list(qubits), tag))
        return self

    def statevector(self, initial: StateVector | None = None) -> StateVector:
        state = initial.copy() if initial is not None else new_state(self.n_qubits)
        for op in self.ops:
            state = apply_gate(state, op)
        return state


def apply_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    return circuit.statevector(initial=state)


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Dense unitary of the whole circuit, built by Kronecker products.

    Deliberately independent of sim.apply_gate so the two act as oracles for
    each other. Capped at 10 qubits (1024 x 1024).
    """
    n = circuit.n_qubits
    if n > UNITARY_ORACLE_MAX_QUBITS:
        raise ValueError(
            f"dense unitary capped at {UNITARY_ORACLE_MAX_QUBITS} qubits, got {n}"
        )
    dim = 1 << n
    total = np.eye(dim, dtype=np.complex128)
    eye2 = np.eye(2, dtype=np.complex128)
    proj = {0: np.diag([1.0, 0.0]), 1: np.diag([0.0, 1.0])}
    for op in circuit.ops:
        # active part: projectors on controls, u on target, identity elsewhere
        factors = [eye2] * n
        for c in op.controls:
            factors[c.qubit] = proj[c.active_on]
        factors[op.target] = np.asarray(op.u)
        active = np.eye(1, dtype=np.complex128)
        for f in reversed(factors):  # qubit 0 is the least significant bit
            active = np.kron(active, f)
        # idle part: same projectors with identity on target, complemented
        factors[op.target] = eye2
        gate_proj = np.eye(1, dtype=np.complex128)
        for f in reversed(factors):
            gate_proj = np.kron(gate_proj, f)
        full = active + (np.eye(dim, dtype=np.complex128) - gate_proj)
        total = full @ total
    return total


def decompose_mcx(g: GateOp, ancilla: list[int]) -> Circuit:
    """Rewrite a k>=3-control X into Toffoli-ladder form using clean ancillas.

    Requires len(ancilla) >= k-2 ancilla qubits, disjoint from the gate's
    wires and in |0> when the fragment runs; they are restored to |0>.
    Anti-controls are realized by X conjugation, so the output contains only
    positively controlled 1- and 2-control gates.
    """
    k = len(g.controls)
    if not np.array_equal(np.asarray(g.u), X_MAT):
        raise ValueError("decompose_mcx only handles X gates")
    if k < 3:
        raise ValueError(f"decompose_mcx needs >= 3 controls, got {k}")
    needed = k - 2
    if len(ancilla) < needed:
        raise ValueError(f"{k}-control X needs {needed} ancillas, got {len(ancilla)}")
    work = list(ancilla[:needed])
    wires = {g.target} | {c.qubit for c in g.controls}
    if wires & set(work):
        raise ValueError("ancilla qubits overlap the gate's own wires")

    n = max(wires | set(work)) + 1
    frag = Circuit(n)
    flips = [c.qubit for c in g.controls if c.active_on == 0]
    cq = [c.qubit for c in g.controls]

    for q in flips:
        frag.x(q)
    ladder = [controlled("x", [ctrl(cq[0]), ctrl(cq[1])], work[0])]
    for i in range(k - 3):
        ladder.append(controlled("x", [ctrl(cq[i + 2]), ctrl(work[i])], work[i + 1]))
    for op in ladder:
        frag.add(op)
    frag.add(controlled("x", [ctrl(cq[k - 1]), ctrl(work[-1])], g.target))
    for op in reversed(ladder):
        frag.add(op)  # self-inverse Toffolis uncompute the AND chain
    for q in flips:
        frag.x(q)
    return frag
