"""Located circuits and fault operators.

A circuit with layers U_1..U_Delta on n qubits has n (Delta + 1) locations. Location
(l, q) is qubit q at time step l + 0.5, right after layer l; step 0.5 precedes the
first layer. A fault operator assigns a Pauli to every location, stored as bit
arrays of shape (Delta + 1, n); phases are never tracked.
"""
from dataclasses import dataclass
import logging
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from random_circuit_codes.clifford import CliffordTableau, GateLayer
from random_circuit_codes.errors import CircuitError, PauliSizeError
from random_circuit_codes.pauli import PauliOperator, symplectic_product

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MeasurementEvent:
    """Measurement of a sparse Pauli observable at `level`, seeing step level + 0.5."""

    level: int
    qubits: Tuple[int, ...]
    labels: str

    def observable(self, n: int) -> PauliOperator:
        return PauliOperator.from_sparse(n, self.qubits, self.labels)


class LocatedCircuit:
    """Layers U_1..U_Delta with measurement events, exposed locations and input states."""

    def __init__(
        self,
        n: int,
        layers: Sequence[GateLayer],
        measurements: Sequence[MeasurementEvent] = (),
        exposure: Optional[Mapping[int, Iterable[int]]] = None,
        initial_labels: Optional[str] = None,
    ):
        self.n = n
        self.layers = list(layers)
        for layer in self.layers:
            for qubits in layer.placements:
                if max(qubits) >= n:
                    raise CircuitError(f"Gate on {qubits} outside a {n}-qubit register")
        self.measurements = list(measurements)
        for event in self.measurements:
            if not 0 <= event.level <= self.delta:
                raise CircuitError(f"Measurement at level {event.level} outside 0..{self.delta}")
        self.exposure: Dict[int, np.ndarray] = {
            int(step): np.unique(np.asarray(list(qubits), dtype=int))
            for step, qubits in (exposure or {}).items()
        }
        for step in self.exposure:
            if not 0 <= step <= self.delta:
                raise CircuitError(f"Exposure at step {step} outside 0..{self.delta}")
        self.initial_labels = initial_labels if initial_labels is not None else "Z" * n
        if len(self.initial_labels) != n:
            raise PauliSizeError(f"{len(self.initial_labels)} input labels for {n} qubits")

    @property
    def delta(self) -> int:
        return len(self.layers)

    @property
    def num_locations(self) -> int:
        return self.n * (self.delta + 1)

    def exposed_locations(self) -> np.ndarray:
        """Exposed (step, qubit) pairs sorted by step then qubit, shape (m, 2)."""
        rows = [
            np.column_stack([np.full(qubits.size, step), qubits])
            for step, qubits in sorted(self.exposure.items())
            if qubits.size
        ]
        if not rows:
            return np.zeros((0, 2), dtype=int)
        return np.vstack(rows).astype(int)

    def events_by_level(self) -> Dict[int, List[int]]:
        grouped: Dict[int, List[int]] = {}
        for index, event in enumerate(self.measurements):
            grouped.setdefault(event.level, []).append(index)
        return grouped

    def propagator(self, start: int, stop: int) -> CliffordTableau:
        """U_{start,stop} = U_stop ... U_{start+1} as a dense tableau."""
        if not 0 <= start <= stop <= self.delta:
            raise CircuitError(f"Invalid propagator range {start}..{stop}")
        result = CliffordTableau.identity(self.n)
        for layer in self.layers[start:stop]:
            result = result.then(layer.tableau(self.n))
        return result

    def __repr__(self) -> str:
        return f"LocatedCircuit(n={self.n}, delta={self.delta}, measurements={len(self.measurements)})"


class FaultOperator:
    """Pauli slices F_{l+0.5} for l = 0..Delta."""

    __slots__ = ("x", "z")

    def __init__(self, x, z):
        x = (np.asarray(x) % 2).astype(np.uint8)
        z = (np.asarray(z) % 2).astype(np.uint8)
        if x.shape != z.shape or x.ndim != 2:
            raise PauliSizeError(f"Fault slices of shapes {x.shape} and {z.shape}")
        self.x = x
        self.z = z

    @classmethod
    def identity(cls, delta: int, n: int) -> "FaultOperator":
        return cls(np.zeros((delta + 1, n), dtype=np.uint8), np.zeros((delta + 1, n), dtype=np.uint8))

    @classmethod
    def from_locations(cls, delta: int, n: int, faults: Mapping[Tuple[int, int], str]) -> "FaultOperator":
        """Build from {(step, qubit): 'X' | 'Y' | 'Z'}."""
        fault = cls.identity(delta, n)
        for (step, qubit), label in faults.items():
            fault.x[step, qubit] ^= label in ("X", "Y")
            fault.z[step, qubit] ^= label in ("Y", "Z")
        return fault

    @classmethod
    def from_slices(cls, slices: Sequence[PauliOperator]) -> "FaultOperator":
        return cls(np.array([s.x for s in slices]), np.array([s.z for s in slices]))

    @property
    def delta(self) -> int:
        return self.x.shape[0] - 1

    @property
    def n(self) -> int:
        return self.x.shape[1]

    @property
    def weight(self) -> int:
        """Sum of the slice weights."""
        return int((self.x | self.z).sum())

    def slice(self, step: int) -> PauliOperator:
        return PauliOperator(self.x[step], self.z[step])

    def commutator(self, other: "FaultOperator") -> int:
        """[[F, G]] as a bit: 1 when the faults anticommute."""
        self._check(other)
        return int(symplectic_product(self.x.ravel(), self.z.ravel(), other.x.ravel(), other.z.ravel()))

    def _check(self, other: "FaultOperator") -> None:
        if self.x.shape != other.x.shape:
            raise PauliSizeError(f"Faults of shapes {self.x.shape} and {other.x.shape}")

    def __mul__(self, other: "FaultOperator") -> "FaultOperator":
        self._check(other)
        return FaultOperator(self.x ^ other.x, self.z ^ other.z)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FaultOperator):
            return NotImplemented
        return np.array_equal(self.x, other.x) and np.array_equal(self.z, other.z)

    def __hash__(self) -> int:
        return hash((self.x.tobytes(), self.z.tobytes()))

    def __repr__(self) -> str:
        return f"FaultOperator(delta={self.delta}, n={self.n}, weight={self.weight})"


def _check_fault(circuit: LocatedCircuit, fault: FaultOperator) -> None:
    if fault.x.shape != (circuit.delta + 1, circuit.n):
        raise PauliSizeError(
            f"Fault of shape {fault.x.shape} for a circuit with delta={circuit.delta}, n={circuit.n}"
        )


def cumulant(circuit: LocatedCircuit, fault: FaultOperator) -> FaultOperator:
    """Forward propagation: slice l collects every earlier slice pushed through to step l."""
    _check_fault(circuit, fault)
    x = np.zeros_like(fault.x)
    z = np.zeros_like(fault.z)
    running_x = fault.x[0].reshape(-1, 1).copy()
    running_z = fault.z[0].reshape(-1, 1).copy()
    x[0], z[0] = running_x[:, 0], running_z[:, 0]
    for step, layer in enumerate(circuit.layers, 1):
        layer.propagate_planes(running_x, running_z)
        running_x[:, 0] ^= fault.x[step]
        running_z[:, 0] ^= fault.z[step]
        x[step], z[step] = running_x[:, 0], running_z[:, 0]
    return FaultOperator(x, z)


def back_cumulant(circuit: LocatedCircuit, fault: FaultOperator) -> FaultOperator:
    """Backward propagation: slice l collects every later slice pulled back to step l."""
    _check_fault(circuit, fault)
    delta = circuit.delta
    x = np.zeros_like(fault.x)
    z = np.zeros_like(fault.z)
    running_x = fault.x[delta].reshape(-1, 1).copy()
    running_z = fault.z[delta].reshape(-1, 1).copy()
    x[delta], z[delta] = running_x[:, 0], running_z[:, 0]
    for step in range(delta - 1, -1, -1):
        circuit.layers[step].propagate_planes(running_x, running_z, inverse=True)
        running_x[:, 0] ^= fault.x[step]
        running_z[:, 0] ^= fault.z[step]
        x[step], z[step] = running_x[:, 0], running_z[:, 0]
    return FaultOperator(x, z)
