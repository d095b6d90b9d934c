"""Two-qubit door-register gadgets shared by both game circuits.

A door register is a (high, low) qubit pair holding D1=|00>, D2=|01>,
D3=|10>.  `prep_ops` builds the three-door state with H, H, CH; that leaves
amplitudes (1/2, 1/2, 1/sqrt2, 0), i.e. probabilities (1/4, 1/4, 1/2, 0) --
the |11> state is suppressed but the superposition is not uniform.

Each removal gadget zeroes one door's basis state so that the remaining two
doors keep all the probability:

    remove D1 |00>:  anti-controlled Z then anti-controlled H  (high -> low)
    remove D2 |01>:  anti-controlled H                         (high -> low)
    remove D3 |10>:  anti-controlled reflection                (low -> high)

The D1/D2 gadgets act on the equal-amplitude (1/2, 1/2) pair, so the plain
Hadamard cancels the unwanted state exactly.  The D3 gadget's pair is
(1/2, 1/sqrt2); a 45-degree reflection leaves a residual there, so it uses
the reflection matched to that ratio, theta = atan(sqrt2).  Post-removal
amplitudes (high,low order):

    remove D1 -> (0, 1/sqrt2, 1/sqrt2, 0)
    remove D2 -> (1/sqrt2, 0, 1/sqrt2, 0)
    remove D3 -> (sqrt3/2, 1/2, 0, 0)
"""

from __future__ import annotations

import math

import numpy as np

from .classical import Door
from .gates import controlled, reflection, std_gate
from .sim import Control, GateOp, anti

# reflection angle that zeroes the (1/2, 1/sqrt2) pair's second component
REMOVE_D3_ANGLE = math.atan(math.sqrt(2.0))

_S2 = 1.0 / math.sqrt(2.0)
_S3 = math.sqrt(3.0) / 2.0

# frozen post-removal amplitudes, indexed |hi lo> = 00,01,10,11
REMOVED_AMPS = {
    Door.D1: np.array([0.0, _S2, _S2, 0.0]),
    Door.D2: np.array([_S2, 0.0, _S2, 0.0]),
    Door.D3: np.array([_S3, 0.5, 0.0, 0.0]),
}


def door_pattern(door: Door, hi: int, lo: int) -> list[Control]:
    """Controls that match a door's two-bit encoding on the (hi, lo) pair."""
    b = door.value
    return [Control(hi, (b >> 1) & 1), Control(lo, b & 1)]


def prep_ops(hi: int, lo: int, extra=()) -> list[GateOp]:
    """H, H, CH(hi -> lo): the three-door superposition with |11> suppressed."""
    extra = list(extra)
    if extra:
        return [
            controlled("h", extra, hi),
            controlled("h", extra, lo),
            controlled("h", extra + [Control(hi, 1)], lo),
        ]
    return [
        std_gate("h", hi),
        std_gate("h", lo),
        controlled("h", [Control(hi, 1)], lo),
    ]


def remove_ops(door: Door, hi: int, lo: int, extra=()) -> list[GateOp]:
    """Gadget that zeroes `door`'s basis state on the (hi, lo) register.

    `extra` controls gate the whole gadget (used to select game cases).
    """
    extra = list(extra)
    if door is Door.D1:
        return [
            controlled("z", extra + [anti(hi)], lo),
            controlled("h", extra + [anti(hi)], lo),
        ]
    if door is Door.D2:
        return [controlled("h", extra + [anti(hi)], lo)]
    return [reflection(REMOVE_D3_ANGLE, hi, extra + [anti(lo)])]
