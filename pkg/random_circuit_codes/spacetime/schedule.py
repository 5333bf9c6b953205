"""Located circuit of the full protocol on a global level clock.

The data block is encoded noiselessly on levels 1..d. EC round r (1-based) starts at
S = d + (r - 1)(d + 2q + 4): fresh |+> and |0> ancilla trees are encoded from level
S + 1 and distilled by T = S + d + 2q, then the Steane levels T + 1 .. T + 4 run
CNOT data -> plus, Z readout, CNOT zero -> data, X readout. The data stabilizers are
measured perfectly at the last level Delta = d + R(d + 2q + 4). A block is exposed
to erasure from its first encoding step until its readout step; the data block on
every level of every EC round, idle ones included. Measured qubits are never reused.
"""
from dataclasses import dataclass
import logging
from typing import Dict, List

import numpy as np

from random_circuit_codes.clifford import GateLayer, cnot
from random_circuit_codes.codes import CircuitCode
from random_circuit_codes.errors import CodeError, ProtocolError
from random_circuit_codes.protocol import check_kind, encoded_input_labels, round_span
from random_circuit_codes.spacetime.circuit import LocatedCircuit, MeasurementEvent

logger = logging.getLogger(__name__)

READOUT_KINDS = ("Z", "X", "stabilizers")


@dataclass(frozen=True)
class Readout:
    """A group of measurement events: a block read in Z or X, or the final stabilizers."""

    level: int
    kind: str
    qubits: np.ndarray
    events: np.ndarray


@dataclass
class ProtocolCircuit:
    circuit: LocatedCircuit
    code: CircuitCode
    q: int
    ec_rounds: int
    data_qubits: np.ndarray
    readouts: List[Readout]


class _ScheduleBuilder:
    def __init__(self, code: CircuitCode, delta: int):
        self.code = code
        self.delta = delta
        self.gates: List[list] = [[] for _ in range(delta)]
        self.events: List[MeasurementEvent] = []
        self.readouts: List[Readout] = []
        self.exposure: Dict[int, list] = {}
        self.labels: List[str] = []

    def allocate_block(self, basis: str) -> np.ndarray:
        start = len(self.labels)
        self.labels.extend(encoded_input_labels(self.code, basis))
        return np.arange(start, len(self.labels))

    def encode(self, block: np.ndarray, first_level: int) -> None:
        for offset, layer in enumerate(self.code.circuit.layers):
            for tableau, qubits in layer:
                self.gates[first_level + offset - 1].append((tableau, tuple(block[list(qubits)])))

    def transversal(self, level: int, controls: np.ndarray, targets: np.ndarray) -> None:
        gate = cnot()
        self.gates[level - 1].extend((gate, (int(c), int(t))) for c, t in zip(controls, targets))

    def expose(self, block: np.ndarray, first_step: int, last_step: int) -> None:
        for step in range(first_step, last_step + 1):
            self.exposure.setdefault(step, []).extend(int(q) for q in block)

    def readout(self, level: int, block: np.ndarray, kind: str) -> None:
        start = len(self.events)
        if kind == "stabilizers":
            for stabilizer in self.code.stabilizers:
                support = stabilizer.support
                self.events.append(
                    MeasurementEvent(
                        level,
                        tuple(int(q) for q in block[support]),
                        stabilizer.restricted(support).labels(),
                    )
                )
        else:
            self.events.extend(MeasurementEvent(level, (int(q),), kind) for q in block)
        self.readouts.append(Readout(level, kind, block, np.arange(start, len(self.events))))

    def distillation_tree(self, basis: str, q: int, start: int) -> np.ndarray:
        """Blocks encoded from level start + 1 and distilled to one survivor."""
        d = self.code.circuit.d
        survivors = [self.allocate_block(basis) for _ in range(2 ** q)]
        for block in survivors:
            self.encode(block, start + 1)
        for round_index in range(1, q + 1):
            kind = check_kind(round_index)
            level = start + d + 2 * round_index - 1
            kept = []
            for keep, measured in zip(survivors[::2], survivors[1::2]):
                if kind == "Z":
                    self.transversal(level, keep, measured)
                else:
                    self.transversal(level, measured, keep)
                self.readout(level + 1, measured, kind)
                self.expose(measured, start + 1, level + 1)
                kept.append(keep)
            survivors = kept
        return survivors[0]

    def build(self, q: int, ec_rounds: int) -> ProtocolCircuit:
        d = self.code.circuit.d
        span = round_span(d, q)
        data = self.allocate_block("zero")
        self.encode(data, 1)
        for round_index in range(1, ec_rounds + 1):
            start = d + span * (round_index - 1)
            top = start + d + 2 * q
            plus = self.distillation_tree("plus", q, start)
            zero = self.distillation_tree("zero", q, start)
            self.transversal(top + 1, data, plus)
            self.readout(top + 2, plus, "Z")
            self.transversal(top + 3, zero, data)
            self.readout(top + 4, zero, "X")
            self.expose(plus, start + 1, top + 2)
            self.expose(zero, start + 1, top + 4)
            self.expose(data, start + 1, top + 4)
        self.readout(self.delta, data, "stabilizers")
        n = len(self.labels)
        circuit = LocatedCircuit(
            n,
            [GateLayer(gates) for gates in self.gates],
            self.events,
            self.exposure,
            "".join(self.labels),
        )
        return ProtocolCircuit(circuit, self.code, q, ec_rounds, data, self.readouts)


def build_protocol_circuit(code: CircuitCode, q: int, ec_rounds: int) -> ProtocolCircuit:
    """Distillation trees, Steane rounds and the final perfect stabilizer measurement."""
    if not code.is_css:
        raise CodeError("The protocol needs a CSS code")
    if q < 1:
        raise ProtocolError(f"Ancilla distillation needs q >= 1, got {q}")
    if ec_rounds < 1:
        raise ProtocolError(f"At least one EC round is required, got {ec_rounds}")
    delta = code.circuit.d + round_span(code.circuit.d, q) * ec_rounds
    protocol = _ScheduleBuilder(code, delta).build(q, ec_rounds)
    logger.debug(
        "Protocol circuit: %d qubits, %d levels, %d measurements, %d exposed locations",
        protocol.circuit.n,
        delta,
        len(protocol.circuit.measurements),
        len(protocol.circuit.exposed_locations()),
    )
    return protocol
