"""Brickwork encoding circuits."""
import enum
import logging
from typing import List, Set

import numpy as np

from random_circuit_codes.clifford import (
    GateLayer,
    sample_css_two_qubit_gate,
    sample_two_qubit_clifford,
)
from random_circuit_codes.errors import CircuitError

logger = logging.getLogger(__name__)


class Boundary(str, enum.Enum):
    OPEN = "open"
    PERIODIC = "periodic"


class BrickworkCircuit:
    """Layers of nearest-neighbour two-qubit gates with alternating offsets."""

    def __init__(self, n: int, layers: List[GateLayer], boundary: Boundary = Boundary.OPEN, css: bool = False):
        if n < 2:
            raise CircuitError(f"A brickwork circuit needs at least 2 qubits, got {n}")
        boundary = Boundary(boundary)
        for layer in layers:
            for qubits in layer.placements:
                if max(qubits) >= n:
                    raise CircuitError(f"Gate on {qubits} outside a {n}-qubit register")
                first, second = qubits
                adjacent = (second - first) % n == 1 or (first - second) % n == 1
                wraps = {first, second} == {0, n - 1} and n > 2
                if not adjacent or (wraps and boundary == Boundary.OPEN):
                    raise CircuitError(f"Gate on {qubits} is not nearest-neighbour")
        self.n = n
        self.boundary = boundary
        self.css = css
        self.layers = list(layers)

    @property
    def d(self) -> int:
        return len(self.layers)

    def apply_to_rows(self, x: np.ndarray, z: np.ndarray, phases: np.ndarray) -> None:
        """Conjugate Pauli rows through every layer in order."""
        for layer in self.layers:
            layer.apply_to_rows(x, z, phases)

    def reverse_light_cone(self, qubit: int) -> Set[int]:
        """Input qubits that can influence output `qubit`."""
        cone = {qubit}
        for layer in reversed(self.layers):
            for qubits in layer.placements:
                if cone.intersection(qubits):
                    cone.update(qubits)
        return cone

    def forward_light_cone(self, qubit: int) -> Set[int]:
        """Output qubits that input `qubit` can influence."""
        cone = {qubit}
        for layer in self.layers:
            for qubits in layer.placements:
                if cone.intersection(qubits):
                    cone.update(qubits)
        return cone

    def __repr__(self) -> str:
        return f"BrickworkCircuit(n={self.n}, d={self.d}, boundary={self.boundary.value}, css={self.css})"


def brick_pairs(n: int, layer: int, boundary: Boundary) -> List[tuple]:
    """Qubit pairs of brickwork layer `layer`: (i, i+1) with i = layer mod 2, layer mod 2 + 2, ..."""
    boundary = Boundary(boundary)
    pairs = []
    for first in range(layer % 2, n, 2):
        second = first + 1
        if second < n:
            pairs.append((first, second))
        elif boundary == Boundary.PERIODIC and n > 2 and pairs and pairs[0][0] != 0:
            pairs.append((first, 0))
    return pairs


def build_brickwork_circuit(
    n: int, d: int, boundary: Boundary, css: bool, rng: np.random.Generator
) -> BrickworkCircuit:
    """Random brickwork circuit of depth d; `css` restricts gates to the CSS-preserving set."""
    if n < 2:
        raise CircuitError(f"A brickwork circuit needs at least 2 qubits, got {n}")
    if d < 0:
        raise CircuitError(f"Depth must be nonnegative, got {d}")
    sampler = sample_css_two_qubit_gate if css else sample_two_qubit_clifford
    layers = []
    for layer in range(d):
        gates = [(sampler(rng), pair) for pair in brick_pairs(n, layer, boundary)]
        layers.append(GateLayer(gates))
    logger.debug("Built %s brickwork circuit on %d qubits with depth %d", boundary, n, d)
    return BrickworkCircuit(n, layers, boundary=boundary, css=css)
