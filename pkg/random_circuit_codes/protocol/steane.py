"""Steane error correction with distilled ancillas."""
from dataclasses import dataclass
import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from random_circuit_codes.codes import CircuitCode, css_correction
from random_circuit_codes.pauli import PauliOperator
from random_circuit_codes.protocol.distill import combine_frame, distill, readout_syndrome
from random_circuit_codes.protocol.erasure import ErasureSampler
from random_circuit_codes.protocol.gadgets import bit_flip_check, block_labels, phase_flip_check
from random_circuit_codes.stabilizer import MixedStabilizerState

logger = logging.getLogger(__name__)

STEANE_LEVELS = 4


def round_span(d: int, q: int) -> int:
    """Levels of one EC round: d encoding and 2q distillation levels, then the Steane levels."""
    return d + 2 * q + STEANE_LEVELS


@dataclass
class SteaneTranscript:
    z_bits: np.ndarray
    x_bits: np.ndarray
    z_syndrome: np.ndarray
    x_syndrome: np.ndarray
    correction: PauliOperator


def steane_ec_round(
    data: MixedStabilizerState,
    code: CircuitCode,
    p: float,
    rng: np.random.Generator,
    q: int = 1,
    sampler: Optional[ErasureSampler] = None,
    level: int = 0,
    data_qubits: Optional[Sequence[int]] = None,
    ancillas: Optional[Tuple[MixedStabilizerState, MixedStabilizerState]] = None,
    data_block: int = 0,
    first_ancilla_block: int = 1,
) -> Tuple[MixedStabilizerState, SteaneTranscript]:
    """One round of Steane syndrome extraction on levels level + 1 .. level + 4.

    Without explicit `ancillas`, a |+> and a |0> ancilla are distilled with q rounds
    each, finishing at `level`, while the data block idles and takes erasures on
    every level from level - d - 2q + 1 on. The plus ancilla reads Z-type syndromes
    through a bit flip check, then the zero ancilla, idle so far, reads X-type
    syndromes through a phase flip check.
    """
    sampler = sampler if sampler is not None else ErasureSampler(p, rng)
    n = code.n
    plus_block = first_ancilla_block
    zero_block = first_ancilla_block + 2 ** q
    if ancillas is None:
        start = level - code.circuit.d - 2 * q
        idle = np.arange(n) if data_qubits is None else np.asarray(data_qubits, dtype=int)
        for step in range(start + 1, level + 1):
            sampler.expose(data, idle, step + 0.5, block_labels(data_block, n))
        plus, _ = distill(code, "plus", q, p, rng, sampler, first_block=plus_block, start_level=start)
        zero, _ = distill(code, "zero", q, p, rng, sampler, first_block=zero_block, start_level=start)
    else:
        plus, zero = (ancilla.copy() for ancilla in ancillas)
    data, z_bits, _ = bit_flip_check(
        data, plus, p, rng, sampler, level + 1, data_qubits, (data_block, plus_block)
    )
    for step in (level + 1.5, level + 2.5):
        sampler.expose(zero, np.arange(n), step, block_labels(zero_block, n))
    data, x_bits, _ = phase_flip_check(
        data, zero, p, rng, sampler, level + 3, data_qubits, (data_block, zero_block)
    )
    z_syndrome = readout_syndrome(code, "Z", z_bits)
    x_syndrome = readout_syndrome(code, "X", x_bits)
    correction = combine_frame(
        css_correction(code, "Z", z_syndrome), css_correction(code, "X", x_syndrome)
    )
    logger.debug(
        "Steane round at level %d: %d Z and %d X syndrome bits set",
        level,
        int(z_syndrome.sum()),
        int(x_syndrome.sum()),
    )
    return data, SteaneTranscript(z_bits, x_bits, z_syndrome, x_syndrome, correction)
