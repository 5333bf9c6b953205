"""Stabilizer codes defined by an encoding circuit and an input layout."""
import functools
import logging
from typing import List, Optional, Union
from fractions import Fraction

import numpy as np

from random_circuit_codes.codes.circuit import Boundary, BrickworkCircuit, build_brickwork_circuit
from random_circuit_codes.codes.layout import InputLayout, Role, assign_inputs
from random_circuit_codes.errors import CodeError, PauliSizeError
from random_circuit_codes.pauli import PauliOperator, symplectic_product

logger = logging.getLogger(__name__)


class CircuitCode:
    """Stabilizers U Z_i U^dagger (or U X_i U^dagger) and logicals of an encoding circuit U."""

    def __init__(
        self,
        circuit: BrickworkCircuit,
        layout: InputLayout,
        stabilizers: List[PauliOperator],
        logical_x: List[PauliOperator],
        logical_z: List[PauliOperator],
        partners: List[PauliOperator],
    ):
        self.circuit = circuit
        self.layout = layout
        self.stabilizers = list(stabilizers)
        self.logical_x = list(logical_x)
        self.logical_z = list(logical_z)
        self.partners = list(partners)

    @property
    def n(self) -> int:
        return self.circuit.n

    @property
    def k(self) -> int:
        return len(self.logical_x)

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    @property
    def is_css(self) -> bool:
        return self.circuit.css

    @functools.cached_property
    def stabilizer_types(self) -> List[str]:
        """'X' for generators from x-stabilizer inputs and 'Z' otherwise."""
        return [
            "X" if self.layout.roles[i] == Role.X_STABILIZER else "Z"
            for i in self.layout.stabilizer_inputs
        ]

    @functools.cached_property
    def stabilizer_x(self) -> np.ndarray:
        return _matrix([s.x for s in self.stabilizers], self.n)

    @functools.cached_property
    def stabilizer_z(self) -> np.ndarray:
        return _matrix([s.z for s in self.stabilizers], self.n)

    def sector(self, kind: str) -> np.ndarray:
        """Indices of the stabilizers of type `kind` ('X' or 'Z')."""
        return np.array([i for i, t in enumerate(self.stabilizer_types) if t == kind], dtype=int)

    def check_matrix(self, kind: str) -> np.ndarray:
        """Classical parity checks of one CSS sector.

        For kind 'Z' rows are the z-bits of Z-type stabilizers, which constrain Z-basis
        readouts; for kind 'X' rows are the x-bits of X-type stabilizers.
        """
        rows = self.sector(kind)
        source = self.stabilizer_z if kind == "Z" else self.stabilizer_x
        return source[rows]

    def __repr__(self) -> str:
        return f"CircuitCode(n={self.n}, k={self.k}, d={self.circuit.d}, css={self.is_css})"


def _matrix(rows, n: int) -> np.ndarray:
    if not rows:
        return np.zeros((0, n), dtype=np.uint8)
    return np.array(rows, dtype=np.uint8)


def derive_code(circuit: BrickworkCircuit, layout: InputLayout) -> CircuitCode:
    """Conjugate the input operators of every role through the encoding circuit."""
    if circuit.n != layout.n:
        raise PauliSizeError(f"Circuit has {circuit.n} qubits but the layout {layout.n}")
    n = circuit.n
    stabilizer_inputs = layout.stabilizer_inputs
    logical_inputs = layout.logical_inputs
    x_rows = []
    z_rows = []

    def add(qubit: int, label: str) -> None:
        x_rows.append(np.eye(n, dtype=np.uint8)[qubit] * (label == "X"))
        z_rows.append(np.eye(n, dtype=np.uint8)[qubit] * (label == "Z"))

    for qubit in stabilizer_inputs:
        add(qubit, "X" if layout.roles[qubit] == Role.X_STABILIZER else "Z")
    for qubit in logical_inputs:
        add(qubit, "X")
    for qubit in logical_inputs:
        add(qubit, "Z")
    for qubit in stabilizer_inputs:
        add(qubit, "Z" if layout.roles[qubit] == Role.X_STABILIZER else "X")
    x = _matrix(x_rows, n)
    z = _matrix(z_rows, n)
    phases = np.zeros(len(x_rows), dtype=np.int64)
    circuit.apply_to_rows(x, z, phases)
    operators = [PauliOperator(x[i], z[i], phases[i]) for i in range(len(phases))]
    r = len(stabilizer_inputs)
    k = len(logical_inputs)
    code = CircuitCode(
        circuit=circuit,
        layout=layout,
        stabilizers=operators[:r],
        logical_x=operators[r : r + k],
        logical_z=operators[r + k : r + 2 * k],
        partners=[partner.unsigned() for partner in operators[r + 2 * k :]],
    )
    logger.debug("Derived %s", code)
    return code


def generate_code(
    n: int,
    rate: Union[str, float, Fraction],
    d: int,
    boundary: Boundary,
    css: bool,
    rng: np.random.Generator,
    padding: Optional[int] = None,
) -> CircuitCode:
    """Sample a random brickwork code with n bulk qubits."""
    layout = assign_inputs(n, rate, d, boundary, css, padding=padding)
    circuit = build_brickwork_circuit(layout.n, d, boundary, css, rng)
    return derive_code(circuit, layout)


def syndrome(code: CircuitCode, error: PauliOperator) -> np.ndarray:
    """Bit i is 1 iff stabilizer i anticommutes with the error."""
    if error.n != code.n:
        raise PauliSizeError(f"Error on {error.n} qubits for a {code.n}-qubit code")
    return symplectic_product(code.stabilizer_x, code.stabilizer_z, error.x, error.z).astype(np.uint8)


def _partner_product(partners: List[PauliOperator], bits: np.ndarray, n: int) -> PauliOperator:
    x = np.zeros(n, dtype=np.uint8)
    z = np.zeros(n, dtype=np.uint8)
    for index in np.flatnonzero(bits):
        x ^= partners[index].x
        z ^= partners[index].z
    return PauliOperator(x, z)


def canonical_error(code: CircuitCode, bits) -> PauliOperator:
    """Fixed Pauli with syndrome `bits`: the product of the anticommuting partners.

    The partner of the generator from input i is the conjugated input operator of the
    opposite type, which anticommutes with that generator only and commutes with every
    logical operator.
    """
    bits = np.asarray(bits, dtype=np.uint8).ravel()
    if bits.size != len(code.stabilizers):
        raise CodeError(f"Syndrome has {bits.size} bits for {len(code.stabilizers)} stabilizers")
    return _partner_product(code.partners, bits, code.n)


def css_correction(code: CircuitCode, kind: str, bits) -> PauliOperator:
    """Canonical correction for a syndrome of the `kind`-type stabilizers of a CSS code.

    Z-type syndromes are cured by a pure X operator and X-type syndromes by a pure Z one.
    """
    if not code.is_css:
        raise CodeError("CSS corrections need a CSS code")
    rows = code.sector(kind)
    bits = np.asarray(bits, dtype=np.uint8).ravel()
    if bits.size != rows.size:
        raise CodeError(f"Syndrome has {bits.size} bits for {rows.size} {kind}-type stabilizers")
    full = np.zeros(len(code.stabilizers), dtype=np.uint8)
    full[rows] = bits
    return _partner_product(code.partners, full, code.n)


def logical_failures(code: CircuitCode, residual: PauliOperator) -> np.ndarray:
    """Logical m fails iff the residual anticommutes with its X or Z logical."""
    fails = np.zeros(code.k, dtype=bool)
    for m in range(code.k):
        fails[m] = bool(
            symplectic_product(residual.x, residual.z, code.logical_x[m].x, code.logical_x[m].z)
            or symplectic_product(residual.x, residual.z, code.logical_z[m].x, code.logical_z[m].z)
        )
    return fails
