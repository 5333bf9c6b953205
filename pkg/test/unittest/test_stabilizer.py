"""Test mixed stabilizer states against dense density matrices."""
import numpy as np
import pytest

from random_circuit_codes.clifford import GateLayer, cnot, hadamard, phase_gate
from random_circuit_codes.errors import (
    AnticommutingGeneratorsError,
    InconsistentGeneratorsError,
    PhaseError,
)
from random_circuit_codes.pauli import PauliOperator
from random_circuit_codes.stabilizer import MixedStabilizerState, canonicalize, mutual_information

N = 3
GATES = {
    "H": (hadamard(), np.array([[1, 1], [1, -1]]) / np.sqrt(2)),
    "S": (phase_gate(), np.diag([1, 1j])),
    "CNOT": (cnot(), np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])),
}


def embed(unitary, qubits, n):
    """Dense unitary of a gate on `qubits` (adjacent, ascending or single)."""
    first = qubits[0]
    rest = n - first - len(qubits)
    return np.kron(np.kron(np.eye(2 ** first), unitary), np.eye(2 ** rest))


def density_matrix(state, dense):
    rho = np.eye(2 ** state.n, dtype=complex)
    for generator in state.generators:
        rho = rho @ (np.eye(2 ** state.n) + dense(generator)) / 2
    return rho / np.trace(rho)


def reduced(rho, keep, n):
    traced = [q for q in range(n) if q not in keep]
    tensor = rho.reshape([2] * (2 * n))
    order = keep + traced + [n + q for q in keep] + [n + q for q in traced]
    a, b = 2 ** len(keep), 2 ** len(traced)
    return np.einsum("ajbj->ab", tensor.transpose(order).reshape(a, b, a, b))


def von_neumann(rho):
    values = np.linalg.eigvalsh(rho)
    values = values[values > 1e-12]
    return float(-(values * np.log2(values)).sum())


def random_circuit_state(seed, dense):
    """Apply random H, S and CNOT gates to |000> in both representations."""
    rng = np.random.default_rng(seed)
    state = MixedStabilizerState.zero_state(N)
    rho = density_matrix(state, dense)
    for _ in range(12):
        name = ["H", "S", "CNOT"][rng.integers(3)]
        tableau, unitary = GATES[name]
        first = int(rng.integers(N - tableau.n + 1))
        qubits = tuple(range(first, first + tableau.n))
        state.apply_layer(GateLayer([(tableau, qubits)]))
        full = embed(unitary, qubits, N)
        rho = full @ rho @ full.conj().T
    return state, rho


@pytest.mark.parametrize("seed", range(8))
def test_gates_match_density_matrix(seed, pauli_matrix):
    state, rho = random_circuit_state(seed, pauli_matrix)
    assert np.allclose(density_matrix(state, pauli_matrix), rho)


@pytest.mark.parametrize("seed", range(8))
def test_reduced_entropy_matches_density_matrix(seed, pauli_matrix):
    state, rho = random_circuit_state(seed, pauli_matrix)
    for keep in ([0], [1], [0, 1], [0, 2], [1, 2]):
        assert state.reduced_entropy(keep) == pytest.approx(von_neumann(reduced(rho, keep, N)), abs=1e-9)


@pytest.mark.parametrize("seed", range(8))
def test_erasure_matches_partial_trace(seed, pauli_matrix):
    state, rho = random_circuit_state(seed, pauli_matrix)
    erased = state.copy().erase_qubits([1])
    others = von_neumann(reduced(rho, [0, 2], N))
    assert erased.entropy() == pytest.approx(others + 1, abs=1e-9)
    assert erased.reduced_entropy([1]) == 1
    assert mutual_information(erased, [1], [0, 2]) == 0


@pytest.mark.parametrize("seed", range(8))
def test_measurement_matches_projection(seed, pauli_matrix):
    state, rho = random_circuit_state(seed, pauli_matrix)
    observable = PauliOperator.single(N, 0, "Z")
    projector_plus = (np.eye(2 ** N) + pauli_matrix(observable)) / 2
    probability_plus = float(np.real(np.trace(projector_plus @ rho)))
    outcome = state.measure_pauli(observable, np.random.default_rng(seed))
    if probability_plus > 1 - 1e-9:
        assert outcome == 1
    if probability_plus < 1e-9:
        assert outcome == -1
    projector = (np.eye(2 ** N) + outcome * pauli_matrix(observable)) / 2
    expected = projector @ rho @ projector
    expected = expected / np.trace(expected)
    assert np.allclose(density_matrix(state, pauli_matrix), expected)


def test_bell_pair():
    state = MixedStabilizerState(2, [PauliOperator.from_label("XX"), PauliOperator.from_label("ZZ")])
    assert state.entropy() == 0
    assert state.reduced_entropy([0]) == 1
    assert mutual_information(state, [0], [1]) == 2
    rng = np.random.default_rng(0)
    assert state.measure_pauli(PauliOperator.from_label("XX"), rng) == 1
    assert state.measure_pauli(PauliOperator.from_label("-YY"), rng) == 1
    state.erase_qubits([0])
    assert state.entropy() == 2


def test_apply_pauli_flips_signs():
    state = MixedStabilizerState.product_state("ZX")
    state.apply_pauli(PauliOperator.from_label("XI"))
    rng = np.random.default_rng(0)
    assert state.measure_pauli(PauliOperator.from_label("ZI"), rng) == -1
    assert state.measure_pauli(PauliOperator.from_label("IX"), rng) == 1
    assert state.entropy() == 0


def test_measure_qubits_bits():
    state = MixedStabilizerState.product_state("ZZX")
    state.apply_pauli(PauliOperator.from_label("XIZ"))
    bits = state.measure_qubits([0, 1], "Z", np.random.default_rng(0))
    assert bits.tolist() == [1, 0]
    assert state.measure_qubits([2], "X", np.random.default_rng(0)).tolist() == [1]


def test_discard_qubits():
    generators = [PauliOperator.from_label(label) for label in ("XXI", "ZZI", "IIZ")]
    state = MixedStabilizerState(3, generators)
    state.discard_qubits([2])
    assert state.n == 2
    assert state.entropy() == 0
    state.discard_qubits([1])
    assert state.entropy() == 1


def test_maximally_mixed_state():
    state = MixedStabilizerState.maximally_mixed(3)
    assert state.rank == 0
    assert state.entropy() == 3
    assert state.reduced_entropy([0, 2]) == 2


def test_tensor_and_product_state():
    state = MixedStabilizerState.product_state("ZI").tensor(MixedStabilizerState.product_state("X"))
    assert state.n == 3
    assert state.entropy() == 1
    assert state.reduced_entropy([1]) == 1
    assert state.reduced_entropy([0, 2]) == 0


def test_canonicalize_removes_dependent_generators():
    generators = [PauliOperator.from_label(label) for label in ("XX", "ZZ", "-YY")]
    canonical = canonicalize(generators)
    assert len(canonical) == 2
    state = MixedStabilizerState(2, canonical)
    assert state.same_group(MixedStabilizerState(2, generators[:2]))


def test_invalid_generators():
    with pytest.raises(AnticommutingGeneratorsError):
        MixedStabilizerState(1, [PauliOperator.from_label("X"), PauliOperator.from_label("Z")])
    with pytest.raises(InconsistentGeneratorsError):
        MixedStabilizerState(1, [PauliOperator.from_label("Z"), PauliOperator.from_label("-Z")])
    with pytest.raises(PhaseError):
        MixedStabilizerState(1, [PauliOperator.from_label("iZ")])
