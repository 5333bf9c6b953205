"""Noisy encoded state preparation and transversal bit/phase flip checks.

Levels are counted on a global clock: a gate layer at level l is followed by the
erasure step l + 0.5, and a readout at level l sees the step l + 0.5 first.
"""
import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from random_circuit_codes.clifford import transversal_cnot
from random_circuit_codes.codes import CircuitCode, Role
from random_circuit_codes.errors import CodeError, ProtocolError
from random_circuit_codes.protocol.erasure import ErasureRecord, ErasureSampler
from random_circuit_codes.stabilizer import MixedStabilizerState

logger = logging.getLogger(__name__)

BASES = ("zero", "plus")


def encoded_input_labels(code: CircuitCode, basis: str) -> str:
    """Product input: + on x-stabilizer inputs, 0 on z-stabilizer inputs, basis on logicals."""
    if basis not in BASES:
        raise ProtocolError(f"Basis must be one of {BASES}, got {basis!r}")
    logical = "Z" if basis == "zero" else "X"
    labels = {Role.Z_STABILIZER: "Z", Role.X_STABILIZER: "X", Role.LOGICAL: logical}
    return "".join(labels[role] for role in code.layout.roles)


def block_labels(block: int, n: int) -> np.ndarray:
    """Global qubit indices of block `block`."""
    return block * n + np.arange(n)


def _sampler(sampler: Optional[ErasureSampler], p: float, rng: np.random.Generator) -> ErasureSampler:
    return sampler if sampler is not None else ErasureSampler(p, rng)


def prepare_noisy_encoded_state(
    code: CircuitCode,
    basis: str,
    p: float,
    rng: np.random.Generator,
    sampler: Optional[ErasureSampler] = None,
    block: int = 0,
    start_level: int = 0,
) -> Tuple[MixedStabilizerState, ErasureRecord]:
    """Encode |0>^k or |+>^k with every qubit exposed after each encoding layer."""
    if not code.is_css:
        raise CodeError("Encoded ancillas need a CSS code")
    sampler = _sampler(sampler, p, rng)
    state = MixedStabilizerState.product_state(encoded_input_labels(code, basis))
    labels = block_labels(block, code.n)
    qubits = np.arange(code.n)
    for offset, layer in enumerate(code.circuit.layers, 1):
        state.apply_layer(layer)
        sampler.expose(state, qubits, start_level + offset + 0.5, labels)
    return state, sampler.record


def _transversal_check(
    keep: MixedStabilizerState,
    measure: MixedStabilizerState,
    basis: str,
    sampler: ErasureSampler,
    rng: np.random.Generator,
    level: int,
    keep_qubits: Optional[Sequence[int]],
    blocks: Tuple[int, int],
) -> Tuple[MixedStabilizerState, np.ndarray]:
    n = measure.n
    keep_qubits = np.arange(n) if keep_qubits is None else np.asarray(keep_qubits, dtype=int)
    if keep_qubits.size != n:
        raise ProtocolError(f"Check pairs {keep_qubits.size} qubits with a {n}-qubit block")
    measured = keep.n + np.arange(n)
    joint = keep.tensor(measure)
    if basis == "Z":
        joint.apply_layer(transversal_cnot(keep_qubits, measured))
    else:
        joint.apply_layer(transversal_cnot(measured, keep_qubits))
    exposed = np.concatenate([keep_qubits, measured])
    labels = np.concatenate([block_labels(blocks[0], n), block_labels(blocks[1], n)])
    for step in (level + 0.5, level + 1.5):
        sampler.expose(joint, exposed, step, labels)
    bits = joint.measure_qubits(measured, basis, rng)
    joint.discard_qubits(measured)
    return joint, bits


def bit_flip_check(
    keep: MixedStabilizerState,
    measure: MixedStabilizerState,
    p: float,
    rng: np.random.Generator,
    sampler: Optional[ErasureSampler] = None,
    level: int = 1,
    keep_qubits: Optional[Sequence[int]] = None,
    blocks: Tuple[int, int] = (0, 1),
) -> Tuple[MixedStabilizerState, np.ndarray, ErasureRecord]:
    """Transversal CNOT keep -> measure, then Z readout of the measure block.

    The CNOT sits at `level` and the readout at `level + 1`. `keep_qubits` places the
    kept block inside a larger register. Returns the kept state, the readout bits and
    the erasure record.
    """
    sampler = _sampler(sampler, p, rng)
    state, bits = _transversal_check(keep, measure, "Z", sampler, rng, level, keep_qubits, blocks)
    return state, bits, sampler.record


def phase_flip_check(
    keep: MixedStabilizerState,
    measure: MixedStabilizerState,
    p: float,
    rng: np.random.Generator,
    sampler: Optional[ErasureSampler] = None,
    level: int = 1,
    keep_qubits: Optional[Sequence[int]] = None,
    blocks: Tuple[int, int] = (0, 1),
) -> Tuple[MixedStabilizerState, np.ndarray, ErasureRecord]:
    """Transversal CNOT measure -> keep, then X readout of the measure block."""
    sampler = _sampler(sampler, p, rng)
    state, bits = _transversal_check(keep, measure, "X", sampler, rng, level, keep_qubits, blocks)
    return state, bits, sampler.record
