"""Clifford tableaus, gate layers and random two-qubit gate sampling.

A CliffordTableau stores, column by column, the images of X_1..X_n and Z_1..Z_n under
conjugation: column j of `symplectic` holds the (x | z) bits of U X_j U^dagger for
j < n and of U Z_{j-n} U^dagger otherwise, and `signs[j]` is 1 when that image carries
a minus sign.
"""
import functools
import logging
from collections import OrderedDict
from typing import Dict, List, Sequence, Tuple

import numpy as np

from random_circuit_codes.errors import CircuitError, PauliSizeError
from random_circuit_codes.pauli import PauliOperator

logger = logging.getLogger(__name__)

TWO_QUBIT_CLIFFORD_COUNT = 11520


def symplectic_form(n: int) -> np.ndarray:
    """Lambda = [[0, I], [I, 0]] on 2n coordinates."""
    identity = np.eye(n, dtype=np.uint8)
    zeros = np.zeros((n, n), dtype=np.uint8)
    return np.block([[zeros, identity], [identity, zeros]])


def is_symplectic(matrix: np.ndarray) -> bool:
    """Whether M^T Lambda M = Lambda over GF(2)."""
    matrix = np.asarray(matrix, dtype=np.int64)
    form = symplectic_form(matrix.shape[0] // 2).astype(np.int64)
    return np.array_equal((matrix.T @ form @ matrix) % 2, form)


def inverse_symplectic(matrix: np.ndarray) -> np.ndarray:
    """M^-1 = Lambda M^T Lambda for a symplectic M."""
    form = symplectic_form(matrix.shape[0] // 2).astype(np.int64)
    return ((form @ np.asarray(matrix, dtype=np.int64).T @ form) % 2).astype(np.uint8)


class CliffordTableau:
    """Binary symplectic map plus sign vector describing a Clifford unitary."""

    def __init__(self, symplectic, signs=None):
        symplectic = (np.asarray(symplectic) % 2).astype(np.uint8)
        if symplectic.ndim != 2 or symplectic.shape[0] != symplectic.shape[1]:
            raise PauliSizeError(f"Tableau must be square, got shape {symplectic.shape}")
        if symplectic.shape[0] % 2:
            raise PauliSizeError("Tableau dimension must be even")
        if signs is None:
            signs = np.zeros(symplectic.shape[0], dtype=np.uint8)
        signs = (np.asarray(signs) % 2).astype(np.uint8).ravel()
        if signs.size != symplectic.shape[0]:
            raise PauliSizeError("Sign vector length must match the tableau")
        symplectic.flags.writeable = False
        signs.flags.writeable = False
        self.symplectic = symplectic
        self.signs = signs

    @classmethod
    def identity(cls, n: int) -> "CliffordTableau":
        return cls(np.eye(2 * n, dtype=np.uint8))

    @classmethod
    def from_images(
        cls, x_images: Sequence[PauliOperator], z_images: Sequence[PauliOperator]
    ) -> "CliffordTableau":
        """Build from the Hermitian images of each X_j and Z_j."""
        images = list(x_images) + list(z_images)
        symplectic = np.stack([image.bits for image in images], axis=1)
        signs = np.array([image.phase // 2 for image in images], dtype=np.uint8)
        return cls(symplectic, signs)

    @property
    def n(self) -> int:
        return self.symplectic.shape[0] // 2

    def image(self, column: int) -> PauliOperator:
        """Image of the basis operator behind `column`."""
        return PauliOperator.from_bits(self.symplectic[:, column], 2 * int(self.signs[column]))

    def is_symplectic(self) -> bool:
        return is_symplectic(self.symplectic)

    def key(self) -> bytes:
        """Hashable identity of the tableau."""
        return self.symplectic.tobytes() + self.signs.tobytes()

    def then(self, other: "CliffordTableau") -> "CliffordTableau":
        """The tableau of applying self first and `other` second."""
        if other.n != self.n:
            raise PauliSizeError(f"Cannot compose tableaus on {self.n} and {other.n} qubits")
        images = [conjugate(other, self.image(col)) for col in range(2 * self.n)]
        return CliffordTableau.from_images(images[: self.n], images[self.n :])

    def inverse(self) -> "CliffordTableau":
        matrix = inverse_symplectic(self.symplectic)
        signs = np.zeros(2 * self.n, dtype=np.uint8)
        for col in range(2 * self.n):
            preimage = PauliOperator.from_bits(matrix[:, col])
            signs[col] = conjugate(self, preimage).phase // 2
        return CliffordTableau(matrix, signs)

    @functools.cached_property
    def local_table(self) -> Tuple[np.ndarray, np.ndarray]:
        """Action on every Hermitian Pauli of the gate's qubits.

        Index i encodes (x | z) little-endian. Returns the image bits, shape
        (4**n, 2n), and the phase picked up, shape (4**n,).
        """
        size = 2 * self.n
        codes = np.arange(1 << size)
        bits = ((codes[:, None] >> np.arange(size)) & 1).astype(np.uint8)
        images = np.zeros_like(bits)
        phases = np.zeros(1 << size, dtype=np.int64)
        for code in codes:
            image = conjugate(self, PauliOperator.from_bits(bits[code]))
            images[code] = image.bits
            phases[code] = image.phase
        return images, phases

    @functools.cached_property
    def inverse_symplectic(self) -> np.ndarray:
        return inverse_symplectic(self.symplectic)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CliffordTableau):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"CliffordTableau(n={self.n}, key={self.key().hex()})"


def conjugate(tableau: CliffordTableau, pauli: PauliOperator) -> PauliOperator:
    """U P U^dagger."""
    if tableau.n != pauli.n:
        raise PauliSizeError(
            f"Tableau acts on {tableau.n} qubits but the operator on {pauli.n}"
        )
    n = pauli.n
    # i^phase sigma(x, z) = i^(phase + |x & z|) X^x Z^z
    result = PauliOperator(
        np.zeros(n, dtype=np.uint8),
        np.zeros(n, dtype=np.uint8),
        pauli.phase + int((pauli.x & pauli.z).sum()),
    )
    for qubit in np.flatnonzero(pauli.x):
        result = result * tableau.image(qubit)
    for qubit in np.flatnonzero(pauli.z):
        result = result * tableau.image(n + qubit)
    return result


def hadamard() -> CliffordTableau:
    return CliffordTableau(np.array([[0, 1], [1, 0]]))


def phase_gate() -> CliffordTableau:
    return CliffordTableau(np.array([[1, 0], [1, 1]]))


def cnot() -> CliffordTableau:
    """CNOT with qubit 0 as control and qubit 1 as target."""
    return css_gate(np.array([[1, 0], [1, 1]]))


def css_gate(action: np.ndarray) -> CliffordTableau:
    """Two-qubit gate acting on x-bits by `action` and on z-bits by its inverse transpose."""
    action = np.asarray(action, dtype=np.uint8) % 2
    a, b, c, d = action.ravel()
    if (a * d + b * c) % 2 == 0:
        raise CircuitError(f"CSS action {action.tolist()} is not invertible")
    inverse = np.array([[d, b], [c, a]], dtype=np.uint8)
    zeros = np.zeros((2, 2), dtype=np.uint8)
    return CliffordTableau(np.block([[action, zeros], [zeros, inverse.T]]))


@functools.lru_cache(maxsize=None)
def two_qubit_symplectic_matrices() -> np.ndarray:
    """All 720 symplectic 4x4 matrices over GF(2), in lexicographic order."""
    codes = np.arange(1 << 16)
    matrices = ((codes[:, None] >> np.arange(16)[::-1]) & 1).reshape(-1, 4, 4)
    form = symplectic_form(2).astype(np.int64)
    check = np.einsum("kji,jl,klm->kim", matrices, form, matrices) % 2
    keep = np.all(check == form, axis=(1, 2))
    return matrices[keep].astype(np.uint8)


@functools.lru_cache(maxsize=None)
def two_qubit_cliffords() -> List[CliffordTableau]:
    """The two-qubit Clifford group modulo global phase, 720 x 16 sign patterns."""
    signs = ((np.arange(16)[:, None] >> np.arange(4)[::-1]) & 1).astype(np.uint8)
    group = [
        CliffordTableau(matrix, sign)
        for matrix in two_qubit_symplectic_matrices()
        for sign in signs
    ]
    logger.debug("Enumerated %d two-qubit Cliffords", len(group))
    return group


@functools.lru_cache(maxsize=None)
def css_two_qubit_gates() -> List[CliffordTableau]:
    """The 6 CSS-preserving gates: identity, both CNOTs, SWAP and the two 3-cycles."""
    gates = []
    for code in range(16):
        action = ((code >> np.arange(4)[::-1]) & 1).reshape(2, 2)
        if (action[0, 0] * action[1, 1] + action[0, 1] * action[1, 0]) % 2:
            gates.append(css_gate(action))
    return gates


def sample_two_qubit_clifford(rng: np.random.Generator) -> CliffordTableau:
    """Uniform sample from the two-qubit Clifford group."""
    return two_qubit_cliffords()[rng.integers(TWO_QUBIT_CLIFFORD_COUNT)]


def sample_css_two_qubit_gate(rng: np.random.Generator) -> CliffordTableau:
    """Uniform sample from the CSS-preserving two-qubit gates."""
    gates = css_two_qubit_gates()
    return gates[rng.integers(len(gates))]


class GateLayer:
    """Gates on disjoint qubit tuples, applied simultaneously."""

    def __init__(self, gates: Sequence[Tuple[CliffordTableau, Sequence[int]]] = ()):
        used = set()
        placed = []
        for tableau, qubits in gates:
            qubits = tuple(int(q) for q in qubits)
            if len(qubits) != tableau.n:
                raise CircuitError(f"Gate on {tableau.n} qubits placed on {qubits}")
            if used.intersection(qubits) or len(set(qubits)) != len(qubits):
                raise CircuitError(f"Gate on {qubits} overlaps another gate in the layer")
            used.update(qubits)
            placed.append((tableau, qubits))
        self.gates = tuple(placed)

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    @property
    def placements(self) -> List[Tuple[int, ...]]:
        return [qubits for _, qubits in self.gates]

    @functools.cached_property
    def groups(self) -> List[Tuple[CliffordTableau, np.ndarray]]:
        """Gates grouped by tableau, with the qubit tuples of each group stacked."""
        grouped: Dict[bytes, Tuple[CliffordTableau, list]] = OrderedDict()
        for tableau, qubits in self.gates:
            grouped.setdefault(tableau.key(), (tableau, []))[1].append(qubits)
        return [(tableau, np.array(qubits, dtype=int)) for tableau, qubits in grouped.values()]

    def apply_to_rows(self, x: np.ndarray, z: np.ndarray, phases: np.ndarray) -> None:
        """Conjugate every row of a Pauli matrix in place, phases included."""
        for tableau, qubits in self.groups:
            arity = qubits.shape[1]
            index = np.zeros((x.shape[0], qubits.shape[0]), dtype=np.int64)
            for j in range(arity):
                index += x[:, qubits[:, j]].astype(np.int64) << j
                index += z[:, qubits[:, j]].astype(np.int64) << (arity + j)
            images, image_phases = tableau.local_table
            new_bits = images[index]
            for j in range(arity):
                x[:, qubits[:, j]] = new_bits[..., j]
                z[:, qubits[:, j]] = new_bits[..., arity + j]
            phases += image_phases[index].sum(axis=1)
            phases %= 4

    def propagate_planes(self, x: np.ndarray, z: np.ndarray, inverse: bool = False) -> None:
        """Push bit-planes (one row per qubit) through the layer, phases ignored.

        `x[q]` and `z[q]` hold, for many tracked operators at once, the x and z bit of
        qubit q. With `inverse` the planes are pulled back through U^dagger . U.
        """
        for tableau, qubits in self.groups:
            matrix = tableau.inverse_symplectic if inverse else tableau.symplectic
            arity = qubits.shape[1]
            old = [x[qubits[:, j]] for j in range(arity)] + [
                z[qubits[:, j]] for j in range(arity)
            ]
            new = []
            for row in matrix:
                plane = np.zeros_like(old[0])
                for col in np.flatnonzero(row):
                    plane ^= old[col]
                new.append(plane)
            for j in range(arity):
                x[qubits[:, j]] = new[j]
                z[qubits[:, j]] = new[arity + j]

    def conjugate(self, pauli: PauliOperator) -> PauliOperator:
        """Layer U applied as U P U^dagger on an operator of any register size."""
        x = pauli.x[None, :].copy()
        z = pauli.z[None, :].copy()
        phases = np.array([pauli.phase], dtype=np.int64)
        self.apply_to_rows(x, z, phases)
        return PauliOperator(x[0], z[0], int(phases[0]))

    def tableau(self, n: int) -> CliffordTableau:
        """Dense tableau of the layer on an n-qubit register."""
        identity = np.eye(n, dtype=np.uint8)
        zeros = np.zeros((n, n), dtype=np.uint8)
        rows_x = np.vstack([identity, zeros])
        rows_z = np.vstack([zeros, identity])
        phases = np.zeros(2 * n, dtype=np.int64)
        self.apply_to_rows(rows_x, rows_z, phases)
        symplectic = np.hstack([rows_x, rows_z]).T
        return CliffordTableau(symplectic, phases // 2)

    def shifted(self, offset: int) -> "GateLayer":
        """The same gates moved `offset` qubits up the register."""
        return GateLayer([(tableau, tuple(q + offset for q in qubits)) for tableau, qubits in self.gates])


def transversal_cnot(controls: Sequence[int], targets: Sequence[int]) -> GateLayer:
    """CNOTs from controls[i] to targets[i]."""
    if len(controls) != len(targets):
        raise CircuitError(f"{len(controls)} controls paired with {len(targets)} targets")
    gate = cnot()
    return GateLayer([(gate, (control, target)) for control, target in zip(controls, targets)])
