"""Lattice tensor networks for spin-model partition functions.

Terms run left to right as columns. Each spin is a horizontal chain of equality
tensors that spans its first to its last incident term; at every incident term the
chain tensor multiplies its spin into a vertical product leg that ends in the term's
boundary tensor. The contraction sweeps the columns keeping one state axis per open
chain, so its cost grows with the network height rather than the number of spins.
"""
import enum
from dataclasses import dataclass, replace
import logging
import math
from typing import List, Tuple

import numpy as np

from random_circuit_codes.errors import ContractionError
from random_circuit_codes.statmech.model import SpinModel

logger = logging.getLogger(__name__)


class Semiring(str, enum.Enum):
    REAL = "real"
    TROPICAL = "tropical"


@dataclass(frozen=True)
class NetworkColumn:
    """One term: chains opened before it, the product stack, and chains closed after it."""

    term: int
    stack: Tuple[int, ...]
    opens: Tuple[int, ...]
    closes: Tuple[int, ...]
    height: int


@dataclass(frozen=True)
class LatticeTensorNetwork:
    columns: Tuple[NetworkColumn, ...]
    signs: np.ndarray
    num_spins: int
    isolated: Tuple[int, ...]
    semiring: Semiring = Semiring.REAL

    @property
    def height(self) -> int:
        """Largest number of chains crossing a column."""
        return max((column.height for column in self.columns), default=0)

    def tensor_counts(self) -> Tuple[int, int]:
        """Number of chain tensors and boundary tensors."""
        return sum(len(column.stack) for column in self.columns), len(self.columns)

    def resigned(self, signs) -> "LatticeTensorNetwork":
        """The same geometry with new term signs."""
        signs = np.asarray(signs, dtype=np.int64)
        if signs.shape != self.signs.shape:
            raise ContractionError(f"Expected {self.signs.size} signs, got {signs.size}")
        return replace(self, signs=signs)

    def as_semiring(self, semiring: Semiring) -> "LatticeTensorNetwork":
        return replace(self, semiring=Semiring(semiring))


def boundary_tensor(sign: int, weight: float, semiring: Semiring) -> np.ndarray:
    """Boundary values indexed by the product leg (0 for +1, 1 for -1).

    Real: exp(-weight * sign * product). Tropical: weight * sign * product.
    """
    products = np.array([1.0, -1.0])
    if Semiring(semiring) == Semiring.REAL:
        return np.exp(-weight * sign * products)
    return weight * sign * products


def chain_tensor(semiring: Semiring) -> np.ndarray:
    """Equality tensor with product leg, indexed (left, right, up, down).

    Nonzero (real) or finite (tropical) iff left == right and down == up xor left.
    """
    index = np.indices((2, 2, 2, 2))
    allowed = (index[0] == index[1]) & (index[3] == (index[2] ^ index[0]))
    if Semiring(semiring) == Semiring.REAL:
        return allowed.astype(float)
    return np.where(allowed, 0.0, np.inf)


def build_tensor_network(model: SpinModel, semiring: Semiring = Semiring.REAL) -> LatticeTensorNetwork:
    """Lay out the model's terms as columns in term order."""
    incidence = np.asarray(model.incidence, dtype=bool)
    n_terms, n_spins = incidence.shape
    touched = incidence.any(axis=0)
    first = np.where(touched, incidence.argmax(axis=0), -1)
    last = np.where(touched, n_terms - 1 - incidence[::-1].argmax(axis=0), -1)
    columns = []
    active: List[int] = []
    for term in range(n_terms):
        opens = tuple(int(i) for i in np.flatnonzero(first == term))
        active.extend(opens)
        incident = set(np.flatnonzero(incidence[term]).tolist())
        stack = tuple(spin for spin in active if spin in incident)
        closes = tuple(int(i) for i in np.flatnonzero(last == term))
        columns.append(NetworkColumn(term, stack, opens, closes, len(active)))
        active = [spin for spin in active if spin not in closes]
    network = LatticeTensorNetwork(
        columns=tuple(columns),
        signs=np.asarray(model.signs, dtype=np.int64),
        num_spins=n_spins,
        isolated=tuple(int(i) for i in np.flatnonzero(~touched)),
        semiring=Semiring(semiring),
    )
    logger.debug(
        "Built %s network with %d spins, %d columns and height %d",
        network.semiring.value,
        n_spins,
        n_terms,
        network.height,
    )
    return network


def _stack_parity(ndim: int, axes) -> np.ndarray:
    parity = np.zeros((1,) * ndim, dtype=np.int64)
    for axis in axes:
        shape = [1] * ndim
        shape[axis] = 2
        parity = parity ^ np.arange(2).reshape(shape)
    return parity


def _sweep(network: LatticeTensorNetwork, weight: float, tropical: bool):
    semiring = Semiring.TROPICAL if tropical else Semiring.REAL
    state = np.array(0.0 if tropical else 1.0)
    active: List[int] = []
    log_scale = 0.0
    pointers = []
    for column in network.columns:
        for spin in column.opens:
            state = np.repeat(state[..., None], 2, axis=-1)
            active.append(spin)
        values = boundary_tensor(int(network.signs[column.term]), weight, semiring)
        parity = _stack_parity(state.ndim, [active.index(spin) for spin in column.stack])
        state = state + values[parity] if tropical else state * values[parity]
        for spin in column.closes:
            axis = active.index(spin)
            if tropical:
                pointers.append((spin, tuple(active[:axis] + active[axis + 1 :]), np.argmin(state, axis=axis)))
                state = state.min(axis=axis)
            else:
                state = state.sum(axis=axis)
            active.pop(axis)
        if not tropical:
            peak = float(state.max())
            if not math.isfinite(peak) or peak <= 0:
                raise ContractionError(f"Contraction degenerated at term {column.term}")
            state = state / peak
            log_scale += math.log(peak)
    if tropical:
        total = float(state)
        if not math.isfinite(total):
            raise ContractionError("Tropical contraction produced a non-finite energy")
        return total, pointers
    return log_scale + math.log(float(state)) + len(network.isolated) * math.log(2), pointers


def contract_partition(network: LatticeTensorNetwork, beta_j: float) -> float:
    """ln Z at coupling beta J, summed over all spin configurations."""
    if network.semiring != Semiring.REAL:
        raise ContractionError("Partition functions need a real network")
    if not math.isfinite(beta_j):
        raise ContractionError(f"beta J must be finite, got {beta_j}")
    log_z, _ = _sweep(network, beta_j, tropical=False)
    if not math.isfinite(log_z):
        raise ContractionError("Contraction produced a non-finite ln Z")
    return log_z


def contract_tropical(network: LatticeTensorNetwork, coupling: float = -1.0) -> Tuple[float, np.ndarray]:
    """Minimum energy and a minimizing configuration of +1/-1 spins.

    The energy of a configuration is the sum of coupling * sign * product over terms; the
    default coupling -1 makes the minimizer the lowest-weight equivalent error. Ties are
    broken toward s = +1, and spins in no term are +1.
    """
    if network.semiring != Semiring.TROPICAL:
        raise ContractionError("Ground states need a tropical network")
    energy, pointers = _sweep(network, coupling, tropical=True)
    assignment = {}
    for spin, remaining, table in reversed(pointers):
        assignment[spin] = int(table[tuple(assignment[other] for other in remaining)])
    spins = np.ones(network.num_spins, dtype=np.int64)
    for spin, index in assignment.items():
        spins[spin] = 1 - 2 * index
    return energy, spins
