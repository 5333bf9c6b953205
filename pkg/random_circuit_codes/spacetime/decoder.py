"""Erasure decoding of spacetime codes by linear algebra over GF(2).

Under erasure every Pauli supported on the erased locations is equally likely, so
any fault on them with the observed syndrome is a most likely explanation.
"""
import logging
from typing import Sequence, Tuple

import numpy as np

from random_circuit_codes import gf2
from random_circuit_codes.errors import ErasureDecodingError
from random_circuit_codes.spacetime.circuit import FaultOperator
from random_circuit_codes.spacetime.frames import FaultResponse
from random_circuit_codes.spacetime.outcome import SpacetimeCode, spacetime_stabilizers

logger = logging.getLogger(__name__)


def erasure_decode(stcode: SpacetimeCode, syndrome, erased: Sequence[Tuple[int, int]]) -> FaultOperator:
    """A fault on the erased (step, qubit) locations with [[<-S_i, E]] = s_i for every check."""
    circuit = stcode.circuit
    erased = [(int(step), int(qubit)) for step, qubit in erased]
    for step, qubit in erased:
        if not (0 <= step <= circuit.delta and 0 <= qubit < circuit.n):
            raise ErasureDecodingError(f"Location ({step}, {qubit}) is outside the circuit")
    syndrome = gf2.as_bits(syndrome).ravel()
    stabilizers = spacetime_stabilizers(stcode)
    constraints = np.zeros((len(stabilizers), 2 * len(erased)), dtype=np.uint8)
    for row, stabilizer in enumerate(stabilizers):
        for column, (step, qubit) in enumerate(erased):
            constraints[row, 2 * column] = stabilizer.z[step, qubit]
            constraints[row, 2 * column + 1] = stabilizer.x[step, qubit]
    solution = gf2.solve(constraints, syndrome)
    if solution is None:
        raise ErasureDecodingError(f"No fault on {len(erased)} erased locations matches the syndrome")
    fault = FaultOperator.identity(circuit.delta, circuit.n)
    for column, (step, qubit) in enumerate(erased):
        fault.x[step, qubit] ^= solution[2 * column]
        fault.z[step, qubit] ^= solution[2 * column + 1]
    return fault


def decode_unknowns(response: FaultResponse, syndrome) -> np.ndarray:
    """Unit-fault coefficients solving the packed constraint rows."""
    solution = gf2.solve_packed(response.check_rows, syndrome, response.num_unknowns)
    if solution is None:
        raise ErasureDecodingError(
            f"No fault on {len(response.locations)} erased locations matches the syndrome"
        )
    return solution


def residual_fails_packed(stcode: SpacetimeCode, response: FaultResponse, residual: np.ndarray) -> bool:
    """Whether the residual combination of unit faults acts as a logical on the data block."""
    packed = gf2.pack_bits(residual)
    x = gf2.packed_parity(response.data_x, packed)
    z = gf2.packed_parity(response.data_z, packed)
    return not gf2.in_rowspace(stcode.data_stabilizer_matrix, np.concatenate([x, z]))
