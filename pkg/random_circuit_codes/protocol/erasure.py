"""Circuit-level erasure sampling."""
from dataclasses import dataclass, field
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from random_circuit_codes.errors import ProtocolError
from random_circuit_codes.stabilizer import MixedStabilizerState

logger = logging.getLogger(__name__)


@dataclass
class ErasureRecord:
    """Erasure events as (time step, global qubit) pairs at rate p per qubit and step."""

    rate: float
    events: List[Tuple[float, int]] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.events)

    def at_step(self, step: float) -> List[int]:
        return [qubit for event_step, qubit in self.events if event_step == step]


class ErasureSampler:
    """Erases each exposed qubit independently with probability p and keeps a record."""

    def __init__(self, p: float, rng: np.random.Generator):
        if not 0 <= p <= 1:
            raise ProtocolError(f"Erasure rate must lie in [0, 1], got {p}")
        self.p = p
        self.rng = rng
        self.record = ErasureRecord(rate=p)

    def expose(
        self,
        state: MixedStabilizerState,
        qubits: Sequence[int],
        step: float,
        labels: Optional[Sequence[int]] = None,
    ) -> np.ndarray:
        """One time step of exposure for `qubits` of `state`; returns the erased qubits.

        `labels` are the global qubit indices written to the record, defaulting to the
        state's own indices.
        """
        qubits = np.asarray(qubits, dtype=int)
        if self.p == 0 or qubits.size == 0:
            return qubits[:0]
        hits = self.rng.random(qubits.size) < self.p
        erased = qubits[hits]
        if erased.size:
            state.erase_qubits(erased)
            names = erased if labels is None else np.asarray(labels, dtype=int)[hits]
            self.record.events.extend((float(step), int(q)) for q in names)
        return erased
