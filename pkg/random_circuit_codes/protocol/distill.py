"""Recursive distillation of noisy encoded ancillas."""
from dataclasses import dataclass, field
import logging
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from random_circuit_codes.codes import CircuitCode, css_correction
from random_circuit_codes.errors import ProtocolError
from random_circuit_codes.pauli import PauliOperator
from random_circuit_codes.protocol.erasure import ErasureRecord, ErasureSampler
from random_circuit_codes.protocol.gadgets import (
    bit_flip_check,
    phase_flip_check,
    prepare_noisy_encoded_state,
)
from random_circuit_codes.stabilizer import MixedStabilizerState

logger = logging.getLogger(__name__)


@dataclass
class CheckRecord:
    round: int
    kind: str
    keep: int
    measured: int
    bits: np.ndarray
    syndrome: np.ndarray


@dataclass
class ProtocolState:
    blocks: List[MixedStabilizerState]
    block_ids: List[int]
    frames: List[PauliOperator]
    record: ErasureRecord
    transcript: List[CheckRecord] = field(default_factory=list)
    checkpoints: Dict[int, int] = field(default_factory=dict)

    def apply_frames(self) -> None:
        """Apply every pending frame to its block and reset it."""
        for index, (block, frame) in enumerate(zip(self.blocks, self.frames)):
            block.apply_pauli(frame)
            self.frames[index] = PauliOperator.identity(frame.n)


def check_kind(round_index: int) -> str:
    """Odd rounds check bit flips against Z-type stabilizers, even rounds phase flips."""
    return "Z" if round_index % 2 else "X"


def combine_frame(frame: PauliOperator, correction: PauliOperator) -> PauliOperator:
    return PauliOperator(frame.x ^ correction.x, frame.z ^ correction.z)


def readout_syndrome(code: CircuitCode, kind: str, bits: np.ndarray) -> np.ndarray:
    """Parities of a block readout against the `kind`-type stabilizers."""
    return (code.check_matrix(kind).astype(np.int64) @ bits.astype(np.int64) % 2).astype(np.uint8)


def distill(
    code: CircuitCode,
    basis: str,
    q: int,
    p: float,
    rng: np.random.Generator,
    sampler: Optional[ErasureSampler] = None,
    checkpoints: Iterable[int] = (),
    first_block: int = 0,
    start_level: int = 0,
) -> Tuple[MixedStabilizerState, ProtocolState]:
    """Prepare 2^q noisy blocks and halve them q times with alternating checks.

    Survivors pair up as (0, 1), (2, 3), ... and the even one is kept. Round r uses
    the levels start_level + d + 2r - 1 and start_level + d + 2r. The entropy of
    survivor 0 is recorded after every round listed in `checkpoints`.
    """
    if q < 1:
        raise ProtocolError(f"Distillation needs at least one round, got q={q}")
    sampler = sampler if sampler is not None else ErasureSampler(p, rng)
    checkpoints = set(checkpoints)
    block_ids = [first_block + index for index in range(2 ** q)]
    blocks = [
        prepare_noisy_encoded_state(code, basis, p, rng, sampler, block, start_level)[0]
        for block in block_ids
    ]
    protocol = ProtocolState(
        blocks=blocks,
        block_ids=block_ids,
        frames=[PauliOperator.identity(code.n) for _ in blocks],
        record=sampler.record,
    )
    depth = code.circuit.d
    for round_index in range(1, q + 1):
        kind = check_kind(round_index)
        check = bit_flip_check if kind == "Z" else phase_flip_check
        level = start_level + depth + 2 * round_index - 1
        survivors, ids, frames = [], [], []
        for pair in range(0, len(protocol.blocks), 2):
            keep_id, measured_id = protocol.block_ids[pair], protocol.block_ids[pair + 1]
            state, bits, _ = check(
                protocol.blocks[pair],
                protocol.blocks[pair + 1],
                p,
                rng,
                sampler=sampler,
                level=level,
                blocks=(keep_id, measured_id),
            )
            syndrome = readout_syndrome(code, kind, bits)
            frame = combine_frame(protocol.frames[pair], css_correction(code, kind, syndrome))
            protocol.transcript.append(
                CheckRecord(round_index, kind, keep_id, measured_id, bits, syndrome)
            )
            survivors.append(state)
            ids.append(keep_id)
            frames.append(frame)
        protocol.blocks, protocol.block_ids, protocol.frames = survivors, ids, frames
        if round_index in checkpoints:
            protocol.checkpoints[round_index] = protocol.blocks[0].entropy()
    logger.debug(
        "Distilled %s ancilla over %d rounds with %d erasures",
        basis,
        q,
        protocol.record.count,
    )
    return protocol.blocks[0], protocol
