"""Win-probability circuit: supports, exact amplitudes, restricted measurement.

Expected amplitudes below were fixed by multiplying the two-qubit gadget
matrices against the register by hand before the build (see also the gadget
checks in test_gates): after the three-door prep, removing the opened door
leaves

    opened D1 -> (0, 1/sqrt2, 1/sqrt2, 0)
    opened D2 -> (1/sqrt2, 0, 1/sqrt2, 0)
    opened D3 -> (sqrt3/2, 1/2, 0, 0)

on (|00>, |01>, |10>, |11>).
"""

import math

import numpy as np
import pytest

from qmonty import scheme1, sim
from qmonty.classical import DOORS, Door, RuleViolation, host_open, outcome, switch_door
from qmonty.gates import Circuit

SQRT2_INV = 1 / math.sqrt(2)

EXPECTED_AMPS = {
    Door.D1: {"00": 0.0, "01": SQRT2_INV, "10": SQRT2_INV, "11": 0.0},
    Door.D2: {"00": SQRT2_INV, "01": 0.0, "10": SQRT2_INV, "11": 0.0},
    Door.D3: {"00": math.sqrt(3) / 2, "01": 0.5, "10": 0.0, "11": 0.0},
}

ALL_CASES = [(p, f) for p in DOORS for f in DOORS]


@pytest.mark.parametrize("prize,first", ALL_CASES)
def test_support_equals_unopened_doors(prize, first):
    opened = host_open(prize, first)
    marg = scheme1.alice_marginal(prize, first)
    supp = {b for b, p in marg.items() if p > 1e-10}
    assert supp == {d.bits for d in DOORS if d is not opened}


@pytest.mark.parametrize("prize,first", ALL_CASES)
def test_opened_door_and_11_have_no_amplitude(prize, first):
    opened = host_open(prize, first)
    amps = scheme1.alice_amplitudes(prize, first)
    assert abs(amps[opened.bits]) < 1e-10
    assert abs(amps["11"]) < 1e-10


def test_paper_case_supports():
    # Alice picks D1: prize D3 leaves {00,10}; prize D2 leaves {00,01};
    # Alice picks D2 with prize D3 leaves {01,10}
    for prize, first, want in [
        (Door.D3, Door.D1, {"00", "10"}),
        (Door.D2, Door.D1, {"00", "01"}),
        (Door.D1, Door.D1, {"00", "10"}),
        (Door.D3, Door.D2, {"01", "10"}),
    ]:
        amps = scheme1.alice_amplitudes(prize, first)
        assert {b for b, a in amps.items() if abs(a) ** 2 > 1e-10} == want


@pytest.mark.parametrize("prize,first", ALL_CASES)
def test_amplitudes_match_hand_computed_values(prize, first):
    opened = host_open(prize, first)
    amps = scheme1.alice_amplitudes(prize, first)
    for bits, want in EXPECTED_AMPS[opened].items():
        assert abs(amps[bits] - want) < 1e-12, (bits, amps[bits], want)


@pytest.mark.parametrize("prize,first", ALL_CASES)
def test_full_circuit_marginal_agrees_with_gadget_amplitudes(prize, first):
    """Dual route: 12-qubit circuit marginal vs 2-qubit gadget algebra."""
    marg = scheme1.alice_marginal(prize, first)
    amps = scheme1.alice_amplitudes(prize, first)
    for bits, amp in amps.items():
        assert abs(marg.get(bits, 0.0) - abs(amp) ** 2) < 1e-10


def test_entangling_stage_does_not_disturb_alice_marginal():
    for prize, first in ALL_CASES:
        full = scheme1.build_circuit(prize, first)
        trimmed = Circuit(full.n_qubits, list(full.labels))
        trimmed.extend(full.ops[:-2])  # the build ends with the two CNOTs
        with_cx = sim.marginal(full.statevector(), [scheme1.A3, scheme1.A4])
        without = sim.marginal(trimmed.statevector(), [scheme1.A3, scheme1.A4])
        for bits in set(with_cx) | set(without):
            assert abs(with_cx.get(bits, 0) - without.get(bits, 0)) < 1e-12


def _xor_bits(a: str, b: str) -> str:
    return format(int(a, 2) ^ int(b, 2), f"0{len(a)}b")


@pytest.mark.parametrize("prize,first", ALL_CASES)
def test_bob_alice_registers_are_perfectly_correlated(prize, first):
    """After the CNOTs the joint (B1B2, A3A4) support is the XOR-shifted
    product of Bob's pre-link support with Alice's: conditioned on Alice's
    branch, Bob's states across branches never overlap, so reading one
    register pins down the other."""
    opened = host_open(prize, first)
    psi = scheme1.statevector(prize, first)
    joint = sim.marginal(psi, [scheme1.B1, scheme1.B2, scheme1.A3, scheme1.A4])
    supp_b_pre = {d.bits for d in DOORS if d is not first}
    supp_a = {d.bits for d in DOORS if d is not opened}
    want = {_xor_bits(b, a) + a for b in supp_b_pre for a in supp_a}
    assert {k for k, p in joint.items() if p > 1e-10} == want
    by_branch = {}
    for key, p in joint.items():
        if p > 1e-10:
            by_branch.setdefault(key[2:], set()).add(key[:2])
    branches = list(by_branch.values())
    assert len(branches) == 2
    assert not branches[0] & branches[1]


@pytest.mark.parametrize("prize,first", ALL_CASES)
def test_restricted_measurement_never_yields_opened_door(prize, first):
    opened = host_open(prize, first)
    for seed in range(12):
        r = scheme1.restricted_measurement(prize, first, np.random.default_rng(seed))
        assert r.final_door is not opened
        assert r.opened is opened
        assert r.win == (r.final_door is prize)


def test_restricted_measurement_examples():
    for seed in range(10):
        r = scheme1.restricted_measurement(Door.D2, Door.D1, np.random.default_rng(seed))
        assert r.final_door in (Door.D1, Door.D2)  # D3 was opened
        r = scheme1.restricted_measurement(Door.D3, Door.D1, np.random.default_rng(seed))
        assert r.final_door in (Door.D1, Door.D3)


def test_restricted_measurement_deterministic_under_seed():
    a = scheme1.restricted_measurement(Door.D3, Door.D1, np.random.default_rng(5))
    b = scheme1.restricted_measurement(Door.D3, Door.D1, np.random.default_rng(5))
    assert (a.final_door, a.win) == (b.final_door, b.win)
    assert a.alice_marginal == b.alice_marginal


def test_sampled_frequencies_match_marginal():
    rng = np.random.default_rng(777)
    counts = scheme1.sample_final_doors(Door.D3, Door.D1, rng, shots=100_000)
    p_d1 = counts.get("00", 0) / 100_000
    amp00 = scheme1.alice_amplitudes(Door.D3, Door.D1)["00"]
    assert abs(p_d1 - abs(amp00) ** 2) < 0.01


def test_win_probability_stick_switch_averages():
    stick = [scheme1.win_probability(p, f, "stick") for p, f in ALL_CASES]
    switch = [scheme1.win_probability(p, f, "switch") for p, f in ALL_CASES]
    assert sum(stick) / 9 == pytest.approx(1 / 3)
    assert sum(switch) / 9 == pytest.approx(2 / 3)


def test_win_probability_agrees_with_oracle_per_case():
    for prize, first in ALL_CASES:
        opened = host_open(prize, first)
        assert scheme1.win_probability(prize, first, "stick") == float(
            outcome(prize, first, first)
        )
        assert scheme1.win_probability(prize, first, "switch") == float(
            outcome(prize, first, switch_door(first, opened))
        )


def test_win_probability_measure_values():
    """Quantum measurement payoff per case: |amp(prize)|^2 of the final register."""
    for prize, first in ALL_CASES:
        opened = host_open(prize, first)
        want = EXPECTED_AMPS[opened][prize.bits] ** 2
        got = scheme1.win_probability(prize, first, scheme1.MEASURE)
        assert got == pytest.approx(want, abs=1e-12)
    # the two tilted cases stand out from the rest
    assert scheme1.win_probability(Door.D1, Door.D2, "measure") == pytest.approx(0.75)
    assert scheme1.win_probability(Door.D2, Door.D1, "measure") == pytest.approx(0.25)


def test_win_probability_rejects_unknown_strategy():
    with pytest.raises(ValueError):
        scheme1.win_probability(Door.D1, Door.D1, "pray")


def test_win_given_final_matches_oracle():
    for prize, first in ALL_CASES:
        opened = host_open(prize, first)
        for final in DOORS:
            if final is opened:
                with pytest.raises(RuleViolation):
                    scheme1.win_given_final(prize, first, final)
            else:
                assert scheme1.win_given_final(prize, first, final) == outcome(
                    prize, first, final
                )


def test_sweep_shape():
    rows = scheme1.sweep()
    assert len(rows) == 9
    for row in rows:
        assert len(row["support"]) == 2
    csv = scheme1.sweep_csv().splitlines()
    assert csv[0] == "prize,first,opened,p_stick,p_switch,p_measure"
    assert len(csv) == 10


def test_circuit_has_twelve_labeled_qubits():
    c = scheme1.build_circuit(Door.D1, Door.D1)
    assert c.n_qubits == 12
    assert len(set(c.labels)) == 12
    assert c.measurements[0] == ([scheme1.A3, scheme1.A4], "final_door")
