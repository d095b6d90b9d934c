"""Line-oriented circuit text format.

Grammar (one statement per line, `#` starts a comment):

    qubits N
    labels NAME,NAME,...          (optional; N comma-separated unique names)
    <mnemonic> q[i],q[j],...      (controls first, target last)
    measure q[i],q[j],... TAG     (optional measurement record)

A mnemonic is zero or more `c` prefixes followed by a base gate: `h`, `x`,
`z`, or `r(THETA)` with THETA a float literal (repr round-trips bit-exactly).
Examples: `h q[3]`, `cz q[1],q[2]`, `ch q[1],q[2]`, `ccx q[0],q[1],q[2]`,
`ccccr(0.9553166181245093) q[0],q[1],q[2],q[3],q[4]`.

All controls in a file are positive: exporting a gate with anti-controls
wraps it in `x` conjugation on those wires, so a parsed circuit simulates
identically without negative-polarity syntax.
"""

from __future__ import annotations

import re

from .gates import Circuit, GateOp, controlled, reflection, std_gate
from .sim import ctrl

_GATE_RE = re.compile(
    r"^(?P<cs>c*)(?P<base>h|x|z|r\((?P<theta>[^)]+)\))\s+(?P<qs>q\[\d+\](?:,q\[\d+\])*)$"
)
_MEASURE_RE = re.compile(r"^measure\s+(?P<qs>q\[\d+\](?:,q\[\d+\])*)\s+(?P<tag>\S+)$")
_QUBIT_RE = re.compile(r"q\[(\d+)\]")


def _gate_line(base: str, qubits: list[int]) -> str:
    refs = ",".join(f"q[{q}]" for q in qubits)
    return f"{'c' * (len(qubits) - 1)}{base} {refs}"


def export_circuit(circuit: Circuit) -> str:
    """Serialize to the text grammar; anti-controls become x conjugation."""
    lines = [f"qubits {circuit.n_qubits}", "labels " + ",".join(circuit.labels)]
    for op in circuit.ops:
        if op.name == "r":
            base = f"r({op.param!r})"
        elif op.name in ("h", "x", "z"):
            base = op.name
        else:
            raise ValueError(f"gate has no export mnemonic: {op}")
        flips = [c.qubit for c in op.controls if c.active_on == 0]
        wires = [c.qubit for c in op.controls] + [op.target]
        for q in flips:
            lines.append(_gate_line("x", [q]))
        lines.append(_gate_line(base, wires))
        for q in flips:
            lines.append(_gate_line("x", [q]))
    for qubits, tag in circuit.measurements:
        refs = ",".join(f"q[{q}]" for q in qubits)
        lines.append(f"measure {refs} {tag}")
    return "\n".join(lines) + "\n"


def _fail(lineno: int, msg: str):
    raise ValueError(f"line {lineno}: {msg}")


def parse_circuit(text: str) -> Circuit:
    """Parse the text grammar back into a Circuit."""
    n_qubits = None
    labels: list[str] | None = None
    ops: list[GateOp] = []
    measurements: list[tuple[list[int], str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("qubits"):
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit():
                _fail(lineno, f"bad qubits declaration: {raw!r}")
            n_qubits = int(parts[1])
            continue
        if line.startswith("labels"):
            labels = [s.strip() for s in line[len("labels"):].strip().split(",")]
            continue
        if n_qubits is None:
            _fail(lineno, "gate before qubits declaration")
        m = _MEASURE_RE.match(line)
        if m:
            qubits = [int(s) for s in _QUBIT_RE.findall(m.group("qs"))]
            measurements.append((qubits, m.group("tag")))
            continue
        m = _GATE_RE.match(line)
        if m is None:
            _fail(lineno, f"unrecognized statement: {raw!r}")
        qubits = [int(s) for s in _QUBIT_RE.findall(m.group("qs"))]
        n_controls = len(m.group("cs"))
        if len(qubits) != n_controls + 1:
            _fail(lineno, f"{n_controls} controls declared but {len(qubits)} qubits listed")
        controls = [ctrl(q) for q in qubits[:-1]]
        target = qubits[-1]
        base = m.group("base")
        try:
            if base.startswith("r("):
                ops.append(reflection(float(m.group("theta")), target, controls))
            elif controls:
                ops.append(controlled(base, controls, target))
            else:
                ops.append(std_gate(base, target))
        except ValueError as exc:
            _fail(lineno, str(exc))
    if n_qubits is None:
        raise ValueError("missing qubits declaration")
    circuit = Circuit(n_qubits, labels or [])
    circuit.extend(ops)
    for qubits, tag in measurements:
        circuit.measure(qubits, tag)
    return circuit
