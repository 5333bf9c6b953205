"""Bit-packed forward propagation of unit faults.

Unknown 2i is an X and unknown 2i + 1 a Z at erased location i. All unit faults
travel through the circuit together as bit-planes, one uint64 row of words per
qubit, so the constraint rows [[<-S_c, e]] come out of the measurements they flip
without materializing any spacetime stabilizer.
"""
from dataclasses import dataclass
import logging

import numpy as np

from random_circuit_codes.gf2 import WORD_BITS
from random_circuit_codes.spacetime.outcome import SpacetimeCode

logger = logging.getLogger(__name__)


@dataclass
class FaultResponse:
    """Packed check rows and final data-block planes of the unit faults at `locations`."""

    locations: np.ndarray
    check_rows: np.ndarray
    data_x: np.ndarray
    data_z: np.ndarray

    @property
    def num_unknowns(self) -> int:
        return 2 * len(self.locations)


def _set_bits(planes: np.ndarray, qubits: np.ndarray, columns: np.ndarray) -> None:
    words = columns // WORD_BITS
    masks = np.left_shift(np.uint64(1), (columns % WORD_BITS).astype(np.uint64))
    np.bitwise_xor.at(planes, (qubits, words), masks)


def _observable_flips(x: np.ndarray, z: np.ndarray, event) -> np.ndarray:
    flips = np.zeros(x.shape[1], dtype=np.uint64)
    for qubit, label in zip(event.qubits, event.labels):
        if label in ("Z", "Y"):
            flips ^= x[qubit]
        if label in ("X", "Y"):
            flips ^= z[qubit]
    return flips


def propagate_unit_faults(stcode: SpacetimeCode, locations: np.ndarray) -> FaultResponse:
    """Push every unit fault on `locations` (rows of (step, qubit)) through the circuit."""
    circuit = stcode.circuit
    locations = np.asarray(locations, dtype=int).reshape(-1, 2)
    words = max(1, -(-2 * len(locations) // WORD_BITS))
    x = np.zeros((circuit.n, words), dtype=np.uint64)
    z = np.zeros((circuit.n, words), dtype=np.uint64)
    columns = 2 * np.arange(len(locations))
    steps = locations[:, 0]
    events = circuit.events_by_level()
    flips = np.zeros((len(circuit.measurements), words), dtype=np.uint64)
    for step in range(circuit.delta + 1):
        if step:
            circuit.layers[step - 1].propagate_planes(x, z)
        here = steps == step
        if here.any():
            _set_bits(x, locations[here, 1], columns[here])
            _set_bits(z, locations[here, 1], columns[here] + 1)
        for index in events.get(step, ()):
            flips[index] = _observable_flips(x, z, circuit.measurements[index])
    check_rows = np.zeros((stcode.num_checks, words), dtype=np.uint64)
    for row, members in enumerate(stcode.checks):
        check_rows[row] = np.bitwise_xor.reduce(flips[members], axis=0)
    data = stcode.protocol.data_qubits
    logger.debug("Propagated %d unit faults over %d levels", 2 * len(locations), circuit.delta)
    return FaultResponse(locations, check_rows, x[data].copy(), z[data].copy())
