"""Gate constructors, the dense-matrix oracle, and MCX decomposition."""

import math

import numpy as np
import pytest

from qmonty.gates import (
    Circuit,
    circuit_unitary,
    cnot,
    controlled,
    decompose_mcx,
    mcx,
    reflection,
    std_gate,
)
from qmonty.sim import anti, apply_gate, apply_ops, ctrl, new_state

SQRT2_INV = 1 / math.sqrt(2)


def test_std_gate_h():
    s = apply_gate(new_state(1), std_gate("h", 0))
    assert np.allclose(s.amps, [SQRT2_INV, SQRT2_INV])


def test_std_gate_z_flips_phase_of_one():
    s = apply_gate(new_state(1), std_gate("x", 0))
    s = apply_gate(s, std_gate("z", 0))
    assert np.allclose(s.amps, [0, -1])


def test_std_gate_x_on_high_qubit():
    s = apply_gate(new_state(2), std_gate("x", 1))
    assert np.allclose(s.amps, [0, 0, 1, 0])  # |10>


def test_unknown_gate_name_rejected():
    with pytest.raises(ValueError):
        std_gate("t", 0)
    with pytest.raises(ValueError):
        controlled("swap", [ctrl(1)], 0)


def test_controlled_h_fires_on_one():
    s = apply_gate(new_state(2), std_gate("x", 1))  # |10>
    s = apply_gate(s, controlled("h", [ctrl(1)], 0))
    assert np.allclose(s.amps, [0, 0, SQRT2_INV, SQRT2_INV])


def _three_door_state():
    """H, H, CH(q1->q0) on |00>: amplitudes (1/2, 1/2, 1/sqrt2, 0)."""
    return apply_ops(
        new_state(2),
        [std_gate("h", 1), std_gate("h", 0), controlled("h", [ctrl(1)], 0)],
    )


def test_anti_controlled_h_removes_01():
    s = apply_gate(_three_door_state(), controlled("h", [anti(1)], 0))
    probs = np.abs(s.amps) ** 2
    assert probs[1] < 1e-20 and probs[3] < 1e-20
    assert {i for i, p in enumerate(probs) if p > 1e-10} == {0, 2}


def test_anti_controlled_z_then_h_removes_00():
    s = apply_ops(
        _three_door_state(),
        [controlled("z", [anti(1)], 0), controlled("h", [anti(1)], 0)],
    )
    probs = np.abs(s.amps) ** 2
    assert {i for i, p in enumerate(probs) if p > 1e-10} == {1, 2}


def test_mcx_flips_when_all_controls_active():
    s = new_state(5)
    for q in range(1, 5):
        s = apply_gate(s, std_gate("x", q))
    s = apply_gate(s, mcx([ctrl(1), ctrl(2), ctrl(3), ctrl(4)], 0))
    assert np.allclose(s.amps[0b11111], 1.0)


def test_mcx_idle_when_any_control_inactive():
    s = new_state(5)
    for q in (1, 2, 3):  # q4 stays |0>
        s = apply_gate(s, std_gate("x", q))
    before = s.amps.copy()
    s = apply_gate(s, mcx([ctrl(1), ctrl(2), ctrl(3), ctrl(4)], 0))
    assert np.array_equal(s.amps, before)


def test_mcx_matrix_equals_controlled_x():
    controls = [ctrl(1), anti(2), ctrl(3)]
    a = Circuit(4).add(mcx(controls, 0))
    b = Circuit(4).add(controlled("x", controls, 0))
    assert np.abs(circuit_unitary(a) - circuit_unitary(b)).max() < 1e-12


def test_mcx_control_count_bounds():
    with pytest.raises(ValueError):
        mcx([ctrl(1)], 0)
    with pytest.raises(ValueError):
        mcx([ctrl(q) for q in range(1, 7)], 0)


# ---------------------------------------------------------------------------
# dense unitary oracle
# ---------------------------------------------------------------------------

def test_empty_circuit_unitary_is_identity():
    assert np.array_equal(circuit_unitary(Circuit(2)), np.eye(4))


def test_single_h_unitary():
    u = circuit_unitary(Circuit(1).h(0))
    assert np.abs(u - np.array([[1, 1], [1, -1]]) * SQRT2_INV).max() < 1e-12


def test_h_h_ch_unitary_column_zero():
    """First column of the H,H,CH product, multiplied out by hand:
    (1/2, 1/2, 1/sqrt2, 0) on (|00>, |01>, |10>, |11>)."""
    c = Circuit(2).h(1).h(0).add(controlled("h", [ctrl(1)], 0))
    col = circuit_unitary(c)[:, 0]
    assert np.abs(col - np.array([0.5, 0.5, SQRT2_INV, 0.0])).max() < 1e-12


def test_unitary_cap_at_ten_qubits():
    with pytest.raises(ValueError):
        circuit_unitary(Circuit(11))


def test_oracle_agrees_with_simulator_on_random_circuits():
    rng = np.random.default_rng(8)
    for _ in range(10):
        n = int(rng.integers(2, 7))
        c = Circuit(n)
        for _ in range(30):
            q = rng.permutation(n)
            target = int(q[0])
            n_controls = int(rng.integers(0, 3))
            controls = [
                (ctrl if rng.integers(2) else anti)(int(q[i + 1]))
                for i in range(n_controls)
            ]
            name = ("h", "x", "z")[int(rng.integers(3))]
            c.add(controlled(name, controls, target) if controls
                  else std_gate(name, target))
        u = circuit_unitary(c)
        for basis in rng.integers(0, 1 << n, size=4):
            s = new_state(n)
            for q in range(n):
                if (int(basis) >> q) & 1:
                    s = apply_gate(s, std_gate("x", q))
            final = c.statevector(initial=s)
            assert np.abs(final.amps - u[:, int(basis)]).max() < 1e-10


def test_anti_control_identity_as_matrices():
    u_anti = circuit_unitary(Circuit(2).add(controlled("h", [anti(1)], 0)))
    conj = Circuit(2).x(1).add(controlled("h", [ctrl(1)], 0)).x(1)
    assert np.abs(u_anti - circuit_unitary(conj)).max() < 1e-12


def test_reflection_at_45_degrees_is_hadamard():
    r = reflection(math.pi / 4, 0)
    assert np.abs(np.asarray(r.u) - np.array([[1, 1], [1, -1]]) * SQRT2_INV).max() < 1e-12


# ---------------------------------------------------------------------------
# multi-controlled NOT decomposition
# ---------------------------------------------------------------------------

def _ancilla_zero_block(u, n, ancilla):
    keep = [i for i in range(1 << n) if all((i >> a) & 1 == 0 for a in ancilla)]
    return u[np.ix_(keep, keep)], u[:, keep]


@pytest.mark.parametrize("k", [3, 4, 5])
def test_decomposition_matches_direct_gate(k):
    controls = [ctrl(i) if i % 2 else anti(i) for i in range(k)]
    target = k
    ancilla = list(range(k + 1, k + 1 + (k - 2)))
    n = k + 1 + (k - 2)
    gate = mcx(controls, target)
    frag = decompose_mcx(gate, ancilla)
    assert frag.n_qubits <= n
    assert all(len(op.controls) <= 2 for op in frag.ops)

    u_frag = circuit_unitary(Circuit(n).extend(frag.ops))
    u_direct = circuit_unitary(Circuit(n).add(gate))
    block_frag, cols = _ancilla_zero_block(u_frag, n, ancilla)
    block_direct, _ = _ancilla_zero_block(u_direct, n, ancilla)
    # equal on the ancilla-|0> subspace, which is also left invariant
    assert np.abs(block_frag - block_direct).max() < 1e-10
    keep = [i for i in range(1 << n) if all((i >> a) & 1 == 0 for a in ancilla)]
    drop = [i for i in range(1 << n) if i not in keep]
    assert np.abs(cols[drop, :]).max() < 1e-10


def test_decomposition_requires_enough_ancillas():
    gate = mcx([ctrl(0), ctrl(1), ctrl(2), ctrl(3)], 4)
    with pytest.raises(ValueError):
        decompose_mcx(gate, [5])


def test_decomposition_rejects_two_controls():
    with pytest.raises(ValueError):
        decompose_mcx(mcx([ctrl(0), ctrl(1)], 2), [3])


def test_decomposition_rejects_overlapping_ancilla():
    gate = mcx([ctrl(0), ctrl(1), ctrl(2)], 3)
    with pytest.raises(ValueError):
        decompose_mcx(gate, [2])


def test_cnot_convenience():
    s = apply_gate(new_state(2), std_gate("x", 0))
    s = apply_gate(s, cnot(0, 1))
    assert np.allclose(s.amps, [0, 0, 0, 1])
