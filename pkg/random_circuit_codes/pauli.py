"""Pauli operators in binary symplectic form.

A PauliOperator is i^phase times the tensor product of sigma(x_j, z_j), with
sigma(0,0)=I, sigma(1,0)=X, sigma(1,1)=Y and sigma(0,1)=Z. Hermitian operators have
phase 0 or 2.
"""
from typing import Iterable, Optional, Sequence

import numpy as np

from random_circuit_codes.errors import PauliSizeError

_LABELS = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_BITS = {label: bits for bits, label in _LABELS.items()}
_PHASE_PREFIX = {0: "+", 1: "+i", 2: "-", 3: "-i"}


def product_phase(x1, z1, phase1, x2, z2, phase2):
    """Phase of (i^phase1 sigma(x1,z1)) (i^phase2 sigma(x2,z2)), broadcast over rows.

    The bit arrays carry qubits on their last axis.
    """
    x1, z1, x2, z2 = (np.asarray(a, dtype=np.int64) for a in (x1, z1, x2, z2))
    x3 = x1 ^ x2
    z3 = z1 ^ z2
    total = (
        np.asarray(phase1)
        + np.asarray(phase2)
        + (x1 & z1).sum(axis=-1)
        + (x2 & z2).sum(axis=-1)
        + 2 * (z1 & x2).sum(axis=-1)
        - (x3 & z3).sum(axis=-1)
    )
    return total % 4


def symplectic_product(x1, z1, x2, z2):
    """x1.z2 + z1.x2 mod 2, broadcast over leading axes."""
    x1, z1, x2, z2 = (np.asarray(a, dtype=np.int64) for a in (x1, z1, x2, z2))
    return ((x1 * z2).sum(axis=-1) + (z1 * x2).sum(axis=-1)) % 2


class PauliOperator:
    """An n-qubit Pauli operator with a phase tracked mod 4."""

    __slots__ = ("x", "z", "phase")

    def __init__(self, x, z, phase: int = 0):
        x = (np.asarray(x) % 2).astype(np.uint8).ravel()
        z = (np.asarray(z) % 2).astype(np.uint8).ravel()
        if x.shape != z.shape:
            raise PauliSizeError(f"x has {x.size} bits but z has {z.size} bits")
        x.flags.writeable = False
        z.flags.writeable = False
        self.x = x
        self.z = z
        self.phase = int(phase) % 4

    @classmethod
    def identity(cls, n: int) -> "PauliOperator":
        """The n-qubit identity."""
        return cls(np.zeros(n, dtype=np.uint8), np.zeros(n, dtype=np.uint8))

    @classmethod
    def single(cls, n: int, qubit: int, label: str) -> "PauliOperator":
        """Weight-one operator `label` in {I, X, Y, Z} on `qubit`."""
        x = np.zeros(n, dtype=np.uint8)
        z = np.zeros(n, dtype=np.uint8)
        x[qubit], z[qubit] = _BITS[label]
        return cls(x, z)

    @classmethod
    def from_label(cls, label: str) -> "PauliOperator":
        """Parse labels such as 'XIZ', '-YY' or '+iZ'."""
        phase = 0
        if label.startswith("-"):
            phase = 2
            label = label[1:]
        elif label.startswith("+"):
            label = label[1:]
        if label.startswith("i"):
            phase += 1
            label = label[1:]
        bits = np.array([_BITS[char] for char in label], dtype=np.uint8).reshape(-1, 2)
        return cls(bits[:, 0], bits[:, 1], phase)

    @classmethod
    def from_bits(cls, bits, phase: int = 0) -> "PauliOperator":
        """Build from the concatenated (x | z) vector."""
        bits = np.asarray(bits).ravel()
        n = bits.size // 2
        return cls(bits[:n], bits[n:], phase)

    @classmethod
    def from_sparse(
        cls, n: int, qubits: Iterable[int], labels: Iterable[str]
    ) -> "PauliOperator":
        """Operator with `labels` on `qubits` and identity elsewhere."""
        x = np.zeros(n, dtype=np.uint8)
        z = np.zeros(n, dtype=np.uint8)
        for qubit, label in zip(qubits, labels):
            x[qubit], z[qubit] = _BITS[label]
        return cls(x, z)

    @property
    def n(self) -> int:
        return self.x.size

    @property
    def bits(self) -> np.ndarray:
        """Concatenated (x | z) vector."""
        return np.concatenate([self.x, self.z])

    @property
    def support(self) -> np.ndarray:
        return np.flatnonzero(self.x | self.z)

    @property
    def weight(self) -> int:
        return int((self.x | self.z).sum())

    @property
    def is_hermitian(self) -> bool:
        return self.phase % 2 == 0

    @property
    def sign(self) -> int:
        """+1 or -1 for Hermitian operators."""
        return 1 if self.phase == 0 else -1

    def is_identity(self) -> bool:
        """Whether the bits are all zero, ignoring the phase."""
        return not (self.x.any() or self.z.any())

    def labels(self) -> str:
        return "".join(_LABELS[(int(a), int(b))] for a, b in zip(self.x, self.z))

    def unsigned(self) -> "PauliOperator":
        """The same bits with phase +1."""
        return PauliOperator(self.x, self.z)

    def inverse(self) -> "PauliOperator":
        """P^-1, equal to P^dagger for a Pauli."""
        return PauliOperator(self.x, self.z, -self.phase)

    def commutes_with(self, other: "PauliOperator") -> bool:
        return scalar_commutator(self, other) == 1

    def restricted(self, qubits: Sequence[int]) -> "PauliOperator":
        """The tensor factor on `qubits`, phase dropped."""
        qubits = np.asarray(qubits, dtype=int)
        return PauliOperator(self.x[qubits], self.z[qubits])

    def embedded(self, n: int, qubits: Sequence[int]) -> "PauliOperator":
        """Place this operator on `qubits` of an n-qubit register."""
        x = np.zeros(n, dtype=np.uint8)
        z = np.zeros(n, dtype=np.uint8)
        x[np.asarray(qubits, dtype=int)] = self.x
        z[np.asarray(qubits, dtype=int)] = self.z
        return PauliOperator(x, z, self.phase)

    def tensor(self, other: "PauliOperator") -> "PauliOperator":
        return PauliOperator(
            np.concatenate([self.x, other.x]),
            np.concatenate([self.z, other.z]),
            self.phase + other.phase,
        )

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        _check_size(self, other)
        phase = product_phase(self.x, self.z, self.phase, other.x, other.z, other.phase)
        return PauliOperator(self.x ^ other.x, self.z ^ other.z, int(phase))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliOperator):
            return NotImplemented
        return (
            self.phase == other.phase
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.z, other.z)
        )

    def __hash__(self) -> int:
        return hash((self.phase, self.x.tobytes(), self.z.tobytes()))

    def __repr__(self) -> str:
        return f"PauliOperator({_PHASE_PREFIX[self.phase]}{self.labels()})"


def _check_size(first: PauliOperator, second: PauliOperator) -> None:
    if first.n != second.n:
        raise PauliSizeError(
            f"Operators act on {first.n} and {second.n} qubits respectively"
        )


def scalar_commutator(first: PauliOperator, second: PauliOperator) -> int:
    """+1 if the operators commute and -1 if they anticommute."""
    _check_size(first, second)
    return -1 if symplectic_product(first.x, first.z, second.x, second.z) else 1


def product(operators: Iterable[PauliOperator], n: Optional[int] = None) -> PauliOperator:
    """Left-to-right product of the operators, identity when empty."""
    result = None
    for operator in operators:
        result = operator if result is None else result * operator
    if result is None:
        if n is None:
            raise PauliSizeError("The qubit count is required for an empty product")
        return PauliOperator.identity(n)
    return result


def sample_depolarizing(n: int, p: float, rng: np.random.Generator) -> PauliOperator:
    """i.i.d. depolarizing error: X, Y and Z each with probability p/3 per qubit."""
    draws = rng.random(n)
    kinds = rng.integers(1, 4, size=n)
    kinds[draws >= p] = 0
    x = np.isin(kinds, (1, 2)).astype(np.uint8)
    z = np.isin(kinds, (2, 3)).astype(np.uint8)
    return PauliOperator(x, z)
