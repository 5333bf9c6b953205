"""Stepwise simulation of a located circuit with injected Pauli faults."""
import logging
from typing import Union

import numpy as np

from random_circuit_codes.pauli import PauliOperator
from random_circuit_codes.spacetime.circuit import FaultOperator, LocatedCircuit
from random_circuit_codes.spacetime.schedule import ProtocolCircuit
from random_circuit_codes.stabilizer import MixedStabilizerState

logger = logging.getLogger(__name__)


def simulate_outcomes(
    circuit: Union[ProtocolCircuit, LocatedCircuit], fault: FaultOperator, rng: np.random.Generator
) -> np.ndarray:
    """Measurement record of one run with `fault` applied; bit 1 means outcome -1.

    Each fault slice is applied right after its layer and before that level's
    measurements.
    """
    if isinstance(circuit, ProtocolCircuit):
        circuit = circuit.circuit
    state = MixedStabilizerState.product_state(circuit.initial_labels)
    outcomes = np.zeros(len(circuit.measurements), dtype=np.uint8)
    events = circuit.events_by_level()
    for step in range(circuit.delta + 1):
        if step:
            state.apply_layer(circuit.layers[step - 1])
        if fault.x[step].any() or fault.z[step].any():
            state.apply_pauli(PauliOperator(fault.x[step], fault.z[step]))
        for index in events.get(step, ()):
            observable = circuit.measurements[index].observable(circuit.n)
            outcomes[index] = state.measure_pauli(observable, rng) == -1
    return outcomes
