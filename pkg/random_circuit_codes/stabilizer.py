"""Mixed stabilizer states.

A state on n qubits is described by r <= n independent, commuting, Hermitian Pauli
generators; it is the uniform mixture over the joint +1 eigenspace, so its von
Neumann entropy is n - r (in qubits).
"""
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from random_circuit_codes import gf2
from random_circuit_codes.clifford import GateLayer
from random_circuit_codes.errors import (
    AnticommutingGeneratorsError,
    InconsistentGeneratorsError,
    PauliSizeError,
    PhaseError,
)
from random_circuit_codes.pauli import PauliOperator, product_phase, symplectic_product

logger = logging.getLogger(__name__)


def _stack(generators: Sequence[PauliOperator], n: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    for generator in generators:
        if generator.n != n:
            raise PauliSizeError(f"Generator on {generator.n} qubits in a {n}-qubit state")
        if not generator.is_hermitian:
            raise PhaseError(f"Generator {generator} does not have a real phase")
    if not generators:
        empty = np.zeros((0, n), dtype=np.uint8)
        return empty, empty.copy(), np.zeros(0, dtype=np.int64)
    x = np.array([g.x for g in generators], dtype=np.uint8)
    z = np.array([g.z for g in generators], dtype=np.uint8)
    phases = np.array([g.phase for g in generators], dtype=np.int64)
    return x, z, phases


def _check_commuting(x: np.ndarray, z: np.ndarray) -> None:
    overlap = (x.astype(np.int64) @ z.T.astype(np.int64) + z.astype(np.int64) @ x.T.astype(np.int64)) % 2
    if overlap.any():
        first, second = np.argwhere(overlap)[0]
        raise AnticommutingGeneratorsError(f"Generators {first} and {second} anticommute")


def _multiply_into(x, z, phases, targets: np.ndarray, source: int) -> None:
    """rows[targets] <- rows[targets] * rows[source], in place."""
    if targets.size == 0:
        return
    phases[targets] = product_phase(
        x[targets], z[targets], phases[targets], x[source], z[source], phases[source]
    )
    x[targets] ^= x[source]
    z[targets] ^= z[source]


def _reduce(x, z, phases, columns: Iterable[int]) -> int:
    """Gauss-Jordan elimination of Pauli rows in place, phases tracked.

    `columns` index the concatenated (x | z) bits. Returns the number of pivot rows,
    which end up first.
    """
    n = x.shape[1]
    row = 0
    for col in columns:
        if row == x.shape[0]:
            break
        plane = x if col < n else z
        qubit = col if col < n else col - n
        candidates = np.flatnonzero(plane[row:, qubit]) + row
        if candidates.size == 0:
            continue
        pivot = candidates[0]
        if pivot != row:
            for array in (x, z, phases):
                array[[row, pivot]] = array[[pivot, row]]
        hits = np.flatnonzero(plane[:, qubit])
        _multiply_into(x, z, phases, hits[hits != row], row)
        row += 1
    return row


def _canonical_rows(x, z, phases) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    n = x.shape[1]
    x, z, phases = x.copy(), z.copy(), phases.copy()
    rank = _reduce(x, z, phases, range(2 * n))
    if (phases[rank:] % 4).any():
        raise InconsistentGeneratorsError("Generators multiply to a nontrivial multiple of I")
    return x[:rank], z[:rank], phases[:rank]


def canonicalize(generators: Sequence[PauliOperator]) -> List[PauliOperator]:
    """Independent generators of the same group in reduced row echelon form.

    Pivots run over the x-block columns left to right and then the z-block.
    """
    generators = list(generators)
    if not generators:
        return []
    x, z, phases = _stack(generators, generators[0].n)
    _check_commuting(x, z)
    x, z, phases = _canonical_rows(x, z, phases)
    return [PauliOperator(x[i], z[i], phases[i]) for i in range(len(phases))]


class MixedStabilizerState:
    """Stabilizer description of a possibly mixed state on n qubits."""

    def __init__(self, n: int, generators: Sequence[PauliOperator] = ()):
        x, z, phases = _stack(list(generators), n)
        _check_commuting(x, z)
        x, z, phases = _canonical_rows(x, z, phases)
        self.n = n
        self._x = x
        self._z = z
        self._phases = phases

    @classmethod
    def _from_rows(cls, n: int, x, z, phases) -> "MixedStabilizerState":
        state = cls.__new__(cls)
        state.n = n
        state._x = np.ascontiguousarray(x, dtype=np.uint8)
        state._z = np.ascontiguousarray(z, dtype=np.uint8)
        state._phases = np.asarray(phases, dtype=np.int64).copy()
        return state

    @classmethod
    def zero_state(cls, n: int) -> "MixedStabilizerState":
        """|0...0>."""
        return cls.product_state("Z" * n)

    @classmethod
    def maximally_mixed(cls, n: int) -> "MixedStabilizerState":
        return cls._from_rows(
            n, np.zeros((0, n)), np.zeros((0, n)), np.zeros(0, dtype=np.int64)
        )

    @classmethod
    def product_state(cls, labels: str) -> "MixedStabilizerState":
        """Product of +1 eigenstates, e.g. 'ZXZ' for |0+0>; an 'I' leaves that qubit maximally mixed."""
        n = len(labels)
        x = np.zeros((n, n), dtype=np.uint8)
        z = np.zeros((n, n), dtype=np.uint8)
        rows = []
        for qubit, label in enumerate(labels):
            if label in ("X", "Y"):
                x[qubit, qubit] = 1
            if label in ("Z", "Y"):
                z[qubit, qubit] = 1
            if label in ("X", "Y", "Z"):
                rows.append(qubit)
        return cls._from_rows(n, x[rows], z[rows], np.zeros(len(rows), dtype=np.int64))

    @property
    def rank(self) -> int:
        return self._x.shape[0]

    @property
    def generators(self) -> List[PauliOperator]:
        return [
            PauliOperator(self._x[i], self._z[i], self._phases[i]) for i in range(self.rank)
        ]

    @property
    def matrix(self) -> np.ndarray:
        """Generator bits as an (r, 2n) matrix."""
        return np.hstack([self._x, self._z])

    def entropy(self) -> int:
        return self.n - self.rank

    def copy(self) -> "MixedStabilizerState":
        return MixedStabilizerState._from_rows(self.n, self._x.copy(), self._z.copy(), self._phases)

    def canonical_generators(self) -> List[PauliOperator]:
        return canonicalize(self.generators)

    def same_group(self, other: "MixedStabilizerState") -> bool:
        """Whether both states have the same stabilizer group, signs included."""
        return self.n == other.n and self.canonical_generators() == other.canonical_generators()

    def tensor(self, other: "MixedStabilizerState") -> "MixedStabilizerState":
        """self on the first qubits and other on the rest."""
        x = np.block(
            [
                [self._x, np.zeros((self.rank, other.n), dtype=np.uint8)],
                [np.zeros((other.rank, self.n), dtype=np.uint8), other._x],
            ]
        )
        z = np.block(
            [
                [self._z, np.zeros((self.rank, other.n), dtype=np.uint8)],
                [np.zeros((other.rank, self.n), dtype=np.uint8), other._z],
            ]
        )
        return MixedStabilizerState._from_rows(
            self.n + other.n, x, z, np.concatenate([self._phases, other._phases])
        )

    def apply_layer(self, layer: GateLayer) -> "MixedStabilizerState":
        layer.apply_to_rows(self._x, self._z, self._phases)
        return self

    def apply_pauli(self, pauli: PauliOperator) -> "MixedStabilizerState":
        """Conjugate by a Pauli: generators anticommuting with it flip sign."""
        if pauli.n != self.n:
            raise PauliSizeError(f"Pauli on {pauli.n} qubits applied to {self.n} qubits")
        flips = symplectic_product(self._x, self._z, pauli.x, pauli.z)
        self._phases = (self._phases + 2 * flips) % 4
        return self

    def erase_qubits(
        self, qubits: Iterable[int], rng: Optional[np.random.Generator] = None
    ) -> "MixedStabilizerState":
        """Replace `qubits` by maximally mixed qubits, uncorrelated with the rest.

        Generators are eliminated on the erased columns and those still supported
        there are dropped. `rng` is accepted for a uniform channel signature.
        """
        del rng
        qubits = sorted(set(int(q) for q in qubits))
        if not qubits or self.rank == 0:
            return self
        columns = qubits + [self.n + q for q in qubits]
        pivots = _reduce(self._x, self._z, self._phases, columns)
        self._x = self._x[pivots:]
        self._z = self._z[pivots:]
        self._phases = self._phases[pivots:]
        return self

    def discard_qubits(self, qubits: Iterable[int]) -> "MixedStabilizerState":
        """Partial trace over `qubits`, removing them from the register."""
        qubits = sorted(set(int(q) for q in qubits))
        self.erase_qubits(qubits)
        keep = np.setdiff1d(np.arange(self.n), qubits)
        self._x = np.ascontiguousarray(self._x[:, keep])
        self._z = np.ascontiguousarray(self._z[:, keep])
        self.n = keep.size
        return self

    def reduced_entropy(self, qubits: Iterable[int]) -> int:
        """Entropy of the reduced state on `qubits`."""
        qubits = np.unique(np.asarray(list(qubits), dtype=int))
        complement = np.setdiff1d(np.arange(self.n), qubits)
        outside = np.hstack([self._x[:, complement], self._z[:, complement]])
        supported_inside = self.rank - gf2.rank(outside)
        return int(qubits.size - supported_inside)

    def measure_pauli(self, pauli: PauliOperator, rng: np.random.Generator) -> int:
        """Measure a Hermitian Pauli, update the state and return +1 or -1."""
        if pauli.n != self.n:
            raise PauliSizeError(f"Pauli on {pauli.n} qubits measured on {self.n} qubits")
        if not pauli.is_hermitian:
            raise PhaseError(f"Cannot measure non-Hermitian {pauli}")
        anticommuting = np.flatnonzero(symplectic_product(self._x, self._z, pauli.x, pauli.z))
        if anticommuting.size:
            outcome = 1 - 2 * int(rng.integers(2))
            pivot = anticommuting[0]
            _multiply_into(self._x, self._z, self._phases, anticommuting[1:], pivot)
            self._x[pivot] = pauli.x
            self._z[pivot] = pauli.z
            self._phases[pivot] = (pauli.phase + (0 if outcome == 1 else 2)) % 4
            return outcome
        combination = None
        if self.rank:
            combination = gf2.solve(self.matrix.T, pauli.bits)
        if combination is not None:
            rows = np.flatnonzero(combination)
            phase = 0
            x = np.zeros(self.n, dtype=np.uint8)
            z = np.zeros(self.n, dtype=np.uint8)
            for row in rows:
                phase = int(product_phase(x, z, phase, self._x[row], self._z[row], self._phases[row]))
                x ^= self._x[row]
                z ^= self._z[row]
            return 1 if (phase - pauli.phase) % 4 == 0 else -1
        outcome = 1 - 2 * int(rng.integers(2))
        self._x = np.vstack([self._x, pauli.x])
        self._z = np.vstack([self._z, pauli.z])
        self._phases = np.append(self._phases, (pauli.phase + (0 if outcome == 1 else 2)) % 4)
        return outcome

    def measure_qubits(
        self, qubits: Sequence[int], basis: str, rng: np.random.Generator
    ) -> np.ndarray:
        """Read out `qubits` one by one in the Z or X basis; bit 1 means outcome -1."""
        bits = np.zeros(len(qubits), dtype=np.uint8)
        for index, qubit in enumerate(qubits):
            observable = PauliOperator.single(self.n, qubit, basis)
            bits[index] = self.measure_pauli(observable, rng) == -1
        return bits

    def __repr__(self) -> str:
        return f"MixedStabilizerState(n={self.n}, rank={self.rank})"


def entropy(state: MixedStabilizerState) -> int:
    """n - r."""
    return state.entropy()


def reduced_entropy(state: MixedStabilizerState, qubits: Iterable[int]) -> int:
    return state.reduced_entropy(qubits)


def erase_qubits(
    state: MixedStabilizerState, qubits: Iterable[int], rng: Optional[np.random.Generator] = None
) -> MixedStabilizerState:
    return state.erase_qubits(qubits, rng)


def measure_pauli(
    state: MixedStabilizerState, pauli: PauliOperator, rng: np.random.Generator
) -> Tuple[int, MixedStabilizerState]:
    outcome = state.measure_pauli(pauli, rng)
    return outcome, state


def mutual_information(
    state: MixedStabilizerState, first: Iterable[int], second: Iterable[int]
) -> int:
    """I(A:B) = S(A) + S(B) - S(AB) in qubits."""
    first = list(first)
    second = list(second)
    return (
        state.reduced_entropy(first)
        + state.reduced_entropy(second)
        - state.reduced_entropy(first + second)
    )
