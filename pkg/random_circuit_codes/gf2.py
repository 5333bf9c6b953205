"""Linear algebra over GF(2).

Dense helpers work on uint8 matrices with one bit per entry. The packed helpers store
64 columns per uint64 word and are used for the large spacetime systems.
"""
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)

WORD_BITS = 64


def as_bits(matrix) -> np.ndarray:
    """Copy into a uint8 array of zeros and ones."""
    return (np.asarray(matrix) % 2).astype(np.uint8)


def row_reduce(
    matrix, columns: Optional[Sequence[int]] = None
) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form, pivoting on `columns` in the given order.

    Rows are scanned from the lowest index, so the result is deterministic for a fixed
    input order. Returns the reduced matrix and the pivot column of each leading row.
    """
    reduced = as_bits(matrix)
    if reduced.ndim != 2:
        reduced = reduced.reshape(len(reduced), -1)
    n_rows, n_cols = reduced.shape
    if columns is None:
        columns = range(n_cols)
    pivots = []
    row = 0
    for col in columns:
        if row == n_rows:
            break
        candidates = np.flatnonzero(reduced[row:, col]) + row
        if candidates.size == 0:
            continue
        pivot = candidates[0]
        if pivot != row:
            reduced[[row, pivot]] = reduced[[pivot, row]]
        hits = np.flatnonzero(reduced[:, col])
        hits = hits[hits != row]
        reduced[hits] ^= reduced[row]
        pivots.append(col)
        row += 1
    return reduced, pivots


def rank(matrix) -> int:
    """Rank over GF(2)."""
    matrix = np.asarray(matrix)
    if matrix.size == 0:
        return 0
    return len(row_reduce(matrix)[1])


def solve(matrix, rhs) -> Optional[np.ndarray]:
    """One solution x of matrix @ x = rhs, free variables set to zero, or None."""
    matrix = as_bits(matrix)
    rhs = as_bits(rhs).reshape(-1, 1)
    n_rows, n_cols = matrix.shape
    if n_rows == 0:
        return np.zeros(n_cols, dtype=np.uint8)
    augmented = np.hstack([matrix, rhs])
    reduced, pivots = row_reduce(augmented, columns=range(n_cols))
    if reduced[len(pivots):, n_cols].any():
        return None
    solution = np.zeros(n_cols, dtype=np.uint8)
    for row, col in enumerate(pivots):
        solution[col] = reduced[row, n_cols]
    return solution


def in_rowspace(matrix, vector) -> bool:
    """Whether `vector` is a GF(2) combination of the rows of `matrix`."""
    matrix = as_bits(matrix)
    if matrix.shape[0] == 0:
        return not as_bits(vector).any()
    return solve(matrix.T, vector) is not None


def pack_bits(bits) -> np.ndarray:
    """Pack the last axis of a bit array into little-endian uint64 words."""
    bits = as_bits(bits)
    n_cols = bits.shape[-1]
    n_words = max(1, -(-n_cols // WORD_BITS))
    padded = np.zeros(bits.shape[:-1] + (n_words * WORD_BITS,), dtype=np.uint8)
    padded[..., :n_cols] = bits
    packed = np.packbits(padded, axis=-1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64)


def unpack_bits(packed: np.ndarray, n_cols: int) -> np.ndarray:
    """Inverse of pack_bits, truncated to n_cols columns."""
    as_bytes = np.ascontiguousarray(packed.astype("<u8")).view(np.uint8)
    bits = np.unpackbits(as_bytes, axis=-1, bitorder="little")
    return bits[..., :n_cols]


def packed_parity(rows: np.ndarray, vector: np.ndarray) -> np.ndarray:
    """Parity of rows AND vector for packed rows, one bit per row."""
    overlap = np.bitwise_and(rows, vector)
    counts = np.unpackbits(np.ascontiguousarray(overlap).view(np.uint8), axis=-1).sum(axis=-1)
    return (counts % 2).astype(np.uint8)


def packed_column(rows: np.ndarray, col: int) -> np.ndarray:
    """Column `col` of a packed matrix as a uint8 vector."""
    word, bit = divmod(col, WORD_BITS)
    return ((rows[:, word] >> np.uint64(bit)) & np.uint64(1)).astype(np.uint8)


def solve_packed(rows: np.ndarray, rhs, n_cols: int) -> Optional[np.ndarray]:
    """Solve the packed system rows @ x = rhs by Gauss-Jordan elimination.

    Free variables are set to zero. Returns the solution as a uint8 vector of length
    n_cols, or None when the system is inconsistent.
    """
    system = np.array(rows, dtype=np.uint64, copy=True)
    target = as_bits(rhs).copy()
    n_rows = system.shape[0]
    pivot_rows = []
    pivot_cols = []
    row = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        column = packed_column(system, col)
        candidates = np.flatnonzero(column[row:]) + row
        if candidates.size == 0:
            continue
        pivot = candidates[0]
        if pivot != row:
            system[[row, pivot]] = system[[pivot, row]]
            target[[row, pivot]] = target[[pivot, row]]
            column[[row, pivot]] = column[[pivot, row]]
        hits = np.flatnonzero(column)
        hits = hits[hits != row]
        system[hits] ^= system[row]
        target[hits] ^= target[row]
        pivot_rows.append(row)
        pivot_cols.append(col)
        row += 1
    if target[row:].any():
        return None
    solution = np.zeros(n_cols, dtype=np.uint8)
    solution[pivot_cols] = target[pivot_rows]
    logger.debug("Solved packed system with %d rows, %d columns, rank %d", n_rows, n_cols, row)
    return solution
