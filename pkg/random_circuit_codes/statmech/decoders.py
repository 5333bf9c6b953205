"""Decoders built on spin-model contractions."""
import logging
from typing import List, Tuple

import numpy as np

from random_circuit_codes.codes import CircuitCode, canonical_error
from random_circuit_codes.pauli import PauliOperator
from random_circuit_codes.statmech.model import SpinMode, build_spin_model, nishimori_beta, term_signs
from random_circuit_codes.statmech.network import (
    Semiring,
    build_tensor_network,
    contract_partition,
    contract_tropical,
)

logger = logging.getLogger(__name__)

LOGICAL_CLASSES = ("I", "X", "Y", "Z")


def logical_representative(code: CircuitCode, logical: int, label: str) -> PauliOperator:
    """L_j^sigma up to phase for sigma in {I, X, Y, Z}."""
    x = np.zeros(code.n, dtype=np.uint8)
    z = np.zeros(code.n, dtype=np.uint8)
    if label in ("X", "Y"):
        x ^= code.logical_x[logical].x
        z ^= code.logical_x[logical].z
    if label in ("Z", "Y"):
        x ^= code.logical_z[logical].x
        z ^= code.logical_z[logical].z
    return PauliOperator(x, z)


def _times(first: PauliOperator, second: PauliOperator) -> PauliOperator:
    return PauliOperator(first.x ^ second.x, first.z ^ second.z)


def class_free_energies(code: CircuitCode, bits, p: float) -> np.ndarray:
    """ln Z of the classes L_j^sigma C_s, shape (k, 4) in I, X, Y, Z order.

    Spins carry the stabilizers and every logical except j, so each entry sums the
    probability of all errors acting as sigma on logical j.
    """
    beta_j = nishimori_beta(p)
    base = canonical_error(code, bits)
    energies = np.empty((code.k, len(LOGICAL_CLASSES)))
    for logical in range(code.k):
        model = build_spin_model(code, base, SpinMode.EXCLUDE_LOGICAL, logical)
        network = build_tensor_network(model, Semiring.REAL)
        for column, label in enumerate(LOGICAL_CLASSES):
            error = _times(logical_representative(code, logical, label), base)
            energies[logical, column] = contract_partition(network.resigned(term_signs(error)), beta_j)
    return energies


def marginal_decode(code: CircuitCode, bits, p: float) -> List[str]:
    """Most likely logical class of each logical qubit given the syndrome."""
    energies = class_free_energies(code, bits, p)
    return [LOGICAL_CLASSES[int(index)] for index in np.argmax(energies, axis=1)]


def marginal_correction(code: CircuitCode, bits, classes) -> PauliOperator:
    """C_s times the chosen logical representative of every logical qubit."""
    correction = canonical_error(code, bits)
    for logical, label in enumerate(classes):
        correction = _times(correction, logical_representative(code, logical, label))
    return correction


def minimum_weight_decode(code: CircuitCode, bits) -> PauliOperator:
    """Lowest-weight Pauli with the given syndrome, from the tropical ground state."""
    correction, _ = minimum_weight_ground_state(code, bits)
    return correction


def minimum_weight_ground_state(code: CircuitCode, bits) -> Tuple[PauliOperator, float]:
    """Minimum-weight correction and the ground-state energy 4 weight - 3n."""
    return _tropical_ground_state(code, bits, -1.0)


def maximum_weight_decode(code: CircuitCode, bits) -> PauliOperator:
    """Highest-weight Pauli with the given syndrome.

    At p = 1 every qubit carries X, Y or Z, so only full-support errors occur and the
    heaviest equivalent error takes the place of the Nishimori contraction.
    """
    correction, _ = _tropical_ground_state(code, bits, 1.0)
    return correction


def _tropical_ground_state(code: CircuitCode, bits, coupling: float) -> Tuple[PauliOperator, float]:
    base = canonical_error(code, bits)
    model = build_spin_model(code, base, SpinMode.ALL_GENERATORS)
    network = build_tensor_network(model, Semiring.TROPICAL)
    energy, spins = contract_tropical(network, coupling)
    correction = model.flipped_error(base, spins)
    logger.debug("Tropical ground state energy %.1f, correction weight %d", energy, correction.weight)
    return correction, energy
