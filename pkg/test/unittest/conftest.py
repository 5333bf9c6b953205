"""Small codes, records and scratch directories shared by the unit tests."""
from pathlib import Path
import shutil

import numpy as np
import pytest

from random_circuit_codes.analysis import ExperimentPoint, ExperimentRecord
from random_circuit_codes.codes import Boundary, generate_code
from random_circuit_codes.rng import make_generator

P_VALUES = tuple(np.linspace(0.1, 0.2, 9))


@pytest.fixture(scope="function")
def rng():
    return np.random.default_rng(1234)


@pytest.fixture(scope="module")
def css_code():
    """Periodic CSS code on 6 qubits with 2 logicals and depth 2."""
    return generate_code(6, "1/3", 2, Boundary.PERIODIC, css=True, rng=make_generator(7))


@pytest.fixture(scope="module")
def clifford_code():
    """Periodic non-CSS code on 6 qubits with 2 logicals and depth 2."""
    return generate_code(6, "1/3", 2, Boundary.PERIODIC, css=False, rng=make_generator(11))


PAULI_MATRICES = {
    "I": np.eye(2),
    "X": np.array([[0, 1], [1, 0]]),
    "Y": np.array([[0, -1j], [1j, 0]]),
    "Z": np.array([[1, 0], [0, -1]]),
}


@pytest.fixture(scope="session")
def pauli_matrix():
    """Dense matrix of a PauliOperator, qubit 0 as the leftmost tensor factor."""

    def dense(pauli):
        matrix = np.array([[1.0 + 0j]])
        for label in pauli.labels():
            matrix = np.kron(matrix, PAULI_MATRICES[label])
        return (1j ** pauli.phase) * matrix

    return dense


@pytest.fixture(scope="function")
def out_dir():
    """Scratch output directory removed after the test."""
    directory = Path(__file__).parent / "test-out-dir"
    yield directory
    shutil.rmtree(directory, ignore_errors=True)


def synthetic_record(rate="1/4", p_c=0.15, exponent=1.2, sizes=(3, 4, 5), p_values=P_VALUES):
    """Record following A + B x + C x^2 exactly, with four identical batches per point."""
    record = ExperimentRecord(kind="code-capacity-minweight", seed=0, config={"rate": rate})
    for size in sizes:
        for p in p_values:
            x = size ** exponent * (p - p_c)
            estimate = 0.3 + 0.5 * x + 0.2 * x * x
            record.add_point(ExperimentPoint(float(p), size, estimate, 0.0, 100, [estimate] * 4))
    return record


@pytest.fixture(scope="session")
def record_factory():
    return synthetic_record
