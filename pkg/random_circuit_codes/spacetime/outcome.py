"""Outcome code of the protocol and its spacetime stabilizers.

Every block readout contributes one parity check per stabilizer of the matching
type, on the readout bits of that stabilizer's support; every perfect stabilizer
measurement of the data block is a check by itself. Check i has a fault operator
S_i, the measured observables placed at their readout steps, and the syndrome of
any fault E is [[<-S_i, E]].
"""
import functools
import logging
from typing import Dict, List

import numpy as np

from random_circuit_codes import gf2
from random_circuit_codes.spacetime.circuit import FaultOperator, LocatedCircuit, back_cumulant, cumulant
from random_circuit_codes.spacetime.schedule import ProtocolCircuit

logger = logging.getLogger(__name__)


class SpacetimeCode:
    """Checks over measurement bits, each a tuple of measurement event indices."""

    def __init__(self, protocol: ProtocolCircuit, checks: List[np.ndarray]):
        self.protocol = protocol
        self.checks = checks

    @property
    def circuit(self) -> LocatedCircuit:
        return self.protocol.circuit

    @property
    def num_checks(self) -> int:
        return len(self.checks)

    @property
    def num_measurements(self) -> int:
        return len(self.circuit.measurements)

    def check_matrix(self) -> np.ndarray:
        """Dense A with A[i, j] = 1 when measurement j enters check i."""
        matrix = np.zeros((self.num_checks, self.num_measurements), dtype=np.uint8)
        for row, events in enumerate(self.checks):
            matrix[row, events] = 1
        return matrix

    def outcome_syndrome(self, outcomes) -> np.ndarray:
        """A m for a measurement record m."""
        outcomes = np.asarray(outcomes, dtype=np.uint8)
        return np.array([outcomes[events].sum() % 2 for events in self.checks], dtype=np.uint8)

    def check_fault(self, index: int) -> FaultOperator:
        """S_i: the observables of check i at their readout steps."""
        circuit = self.circuit
        fault = FaultOperator.identity(circuit.delta, circuit.n)
        for event_index in self.checks[index]:
            event = circuit.measurements[event_index]
            observable = event.observable(circuit.n)
            fault.x[event.level] ^= observable.x
            fault.z[event.level] ^= observable.z
        return fault

    @functools.cached_property
    def data_stabilizer_matrix(self) -> np.ndarray:
        """(x | z) rows of the data block's stabilizers."""
        code = self.protocol.code
        return np.hstack([code.stabilizer_x, code.stabilizer_z])

    def describe(self) -> Dict[str, int]:
        """Sizes of A and of the spacetime stabilizers."""
        return {
            "qubits": self.circuit.n,
            "levels": self.circuit.delta,
            "measurements": self.num_measurements,
            "checks": self.num_checks,
            "locations": self.circuit.num_locations,
            "exposed_locations": int(len(self.circuit.exposed_locations())),
        }

    def __repr__(self) -> str:
        return f"SpacetimeCode(checks={self.num_checks}, measurements={self.num_measurements})"


def build_outcome_code(protocol: ProtocolCircuit) -> SpacetimeCode:
    """Parity checks A with A m = 0 on every noiseless run."""
    code = protocol.code
    supports = {
        kind: [np.flatnonzero(row) for row in code.check_matrix(kind)] for kind in ("Z", "X")
    }
    checks = []
    for readout in protocol.readouts:
        if readout.kind == "stabilizers":
            checks.extend(np.array([event]) for event in readout.events)
        else:
            checks.extend(readout.events[support] for support in supports[readout.kind])
    stcode = SpacetimeCode(protocol, checks)
    logger.debug("Outcome code %s", stcode.describe())
    return stcode


def spacetime_stabilizers(stcode: SpacetimeCode) -> List[FaultOperator]:
    """<-S_i for every check, materialized; intended for small circuits."""
    return [back_cumulant(stcode.circuit, stcode.check_fault(i)) for i in range(stcode.num_checks)]


def measurement_flips(circuit: LocatedCircuit, fault: FaultOperator) -> np.ndarray:
    """Bit j is 1 when the propagated fault anticommutes with measurement j."""
    forward = cumulant(circuit, fault)
    flips = np.zeros(len(circuit.measurements), dtype=np.uint8)
    for index, event in enumerate(circuit.measurements):
        observable = event.observable(circuit.n)
        flips[index] = not forward.slice(event.level).commutes_with(observable)
    return flips


def spacetime_syndrome(stcode: SpacetimeCode, fault: FaultOperator) -> np.ndarray:
    """Outcome-code syndrome of a fault, from forward propagation."""
    return stcode.outcome_syndrome(measurement_flips(stcode.circuit, fault))


def residual_fails(stcode: SpacetimeCode, residual: FaultOperator) -> bool:
    """Whether the propagated residual leaves a nontrivial logical on the data block."""
    final = cumulant(stcode.circuit, residual).slice(stcode.circuit.delta)
    data = final.restricted(stcode.protocol.data_qubits)
    return not gf2.in_rowspace(stcode.data_stabilizer_matrix, data.bits)
