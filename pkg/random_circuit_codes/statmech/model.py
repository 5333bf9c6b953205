"""Classical spin models of decoding.

Each generator becomes an Ising spin and each single-qubit Pauli sigma a term
J [[E, sigma]] prod_{i: [[g_i, sigma]] = -1} s_i. Flipping spin i is the same as
multiplying the error by generator i.
"""
import enum
from dataclasses import dataclass, field, replace
import math
from typing import Optional, Sequence, Tuple

import numpy as np

from random_circuit_codes.codes import CircuitCode
from random_circuit_codes.errors import CodeError, ModelError, PauliSizeError
from random_circuit_codes.pauli import PauliOperator

TERM_LABELS = ("X", "Y", "Z")


class SpinMode(str, enum.Enum):
    STABILIZERS_ONLY = "stabilizers-only"
    EXCLUDE_LOGICAL = "exclude-logical"
    ALL_GENERATORS = "all-generators"


def nishimori_beta(p: float) -> float:
    """beta J = -ln(3(1-p)/p) / 4, the Nishimori temperature of depolarizing noise."""
    if not 0 < p < 1:
        raise ModelError(f"Depolarizing rate must lie in (0, 1), got {p}")
    return -0.25 * math.log(3 * (1 - p) / p)


@dataclass(frozen=True)
class SpinModel:
    """Terms with signs and spin incidence; `incidence[u, i]` marks spin i in term u."""

    signs: np.ndarray
    incidence: np.ndarray
    coupling: float = 1.0
    generators: Tuple[PauliOperator, ...] = field(default=(), repr=False)
    mode: Optional[SpinMode] = None

    @property
    def num_spins(self) -> int:
        return self.incidence.shape[1]

    @property
    def num_terms(self) -> int:
        return self.incidence.shape[0]

    def energy(self, spins) -> np.ndarray:
        """H(s) for one configuration or a batch, spins given as +1/-1 on the last axis."""
        flips = (np.asarray(spins) < 0).astype(np.int64)
        parity = (flips @ self.incidence.T.astype(np.int64)) % 2
        return self.coupling * ((1 - 2 * parity) * self.signs).sum(axis=-1)

    def with_error(self, error: PauliOperator) -> "SpinModel":
        """The same spins and incidence with term signs for another error."""
        return replace(self, signs=term_signs(error))

    def flipped_error(self, error: PauliOperator, spins) -> PauliOperator:
        """Error times every generator whose spin is -1."""
        x = error.x.copy()
        z = error.z.copy()
        for index in np.flatnonzero(np.asarray(spins) < 0):
            x ^= self.generators[index].x
            z ^= self.generators[index].z
        return PauliOperator(x, z)


def term_signs(error: PauliOperator) -> np.ndarray:
    """[[E, sigma]] for every sigma in qubit-major (X, Y, Z) order."""
    x = error.x.astype(np.int64)
    z = error.z.astype(np.int64)
    flips = np.stack([z, x ^ z, x], axis=1).reshape(-1)
    return 1 - 2 * flips


def _incidence(generators: Sequence[PauliOperator], n: int) -> np.ndarray:
    if not generators:
        return np.zeros((3 * n, 0), dtype=bool)
    gx = np.array([g.x for g in generators], dtype=np.uint8)
    gz = np.array([g.z for g in generators], dtype=np.uint8)
    return np.stack([gz.T, (gx ^ gz).T, gx.T], axis=1).reshape(3 * n, -1).astype(bool)


def spin_generators(code: CircuitCode, mode: SpinMode, logical: Optional[int] = None):
    """Generators carried by spins in each mode."""
    mode = SpinMode(mode)
    generators = list(code.stabilizers)
    if mode == SpinMode.EXCLUDE_LOGICAL:
        if logical is None or not 0 <= logical < code.k:
            raise CodeError(f"Logical index {logical} is invalid for k={code.k}")
        others = [j for j in range(code.k) if j != logical]
        generators += [code.logical_x[j] for j in others] + [code.logical_z[j] for j in others]
    elif mode == SpinMode.ALL_GENERATORS:
        generators += list(code.logical_x) + list(code.logical_z)
    return generators


def build_spin_model(
    code: CircuitCode,
    error: PauliOperator,
    mode: SpinMode = SpinMode.STABILIZERS_ONLY,
    logical: Optional[int] = None,
) -> SpinModel:
    """Spin model H_E in the requested mode; `logical` selects j for exclude-logical."""
    if error.n != code.n:
        raise PauliSizeError(f"Error on {error.n} qubits for a {code.n}-qubit code")
    generators = spin_generators(code, mode, logical)
    return SpinModel(
        signs=term_signs(error),
        incidence=_incidence(generators, code.n),
        generators=tuple(generators),
        mode=SpinMode(mode),
    )
