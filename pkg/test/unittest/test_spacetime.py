"""Test located circuits, the protocol's outcome code and the erasure decoder."""
import numpy as np
import pytest

from random_circuit_codes import gf2
from random_circuit_codes.clifford import GateLayer, cnot
from random_circuit_codes.errors import CircuitError, CodeError, PauliSizeError, ProtocolError
from random_circuit_codes.pauli import PauliOperator
from random_circuit_codes.protocol import round_span
from random_circuit_codes.spacetime import (
    FaultOperator,
    LocatedCircuit,
    MeasurementEvent,
    back_cumulant,
    build_outcome_code,
    build_protocol_circuit,
    cumulant,
    decode_trial,
    decode_unknowns,
    erasure_decode,
    propagate_unit_faults,
    residual_fails,
    residual_fails_packed,
    sample_erasure_paulis,
    sample_erasures,
    simulate_outcomes,
    spacetime_stabilizers,
    spacetime_syndrome,
)


@pytest.fixture(scope="module")
def stcode(css_code):
    """Outcome code of one EC round with single-round distillation."""
    return build_outcome_code(build_protocol_circuit(css_code, 1, 1))


def random_fault(circuit, rng, density=0.5):
    shape = (circuit.delta + 1, circuit.n)
    return FaultOperator((rng.random(shape) < density).astype(np.uint8), (rng.random(shape) < density).astype(np.uint8))


def dense_constraints(stcode, locations):
    """[[<-S_i, e]] for unit X and Z faults on every location, from materialized stabilizers."""
    stabilizers = spacetime_stabilizers(stcode)
    matrix = np.zeros((len(stabilizers), 2 * len(locations)), dtype=np.uint8)
    for row, stabilizer in enumerate(stabilizers):
        for column, (step, qubit) in enumerate(locations):
            matrix[row, 2 * column] = stabilizer.z[step, qubit]
            matrix[row, 2 * column + 1] = stabilizer.x[step, qubit]
    return matrix


def fault_from_unknowns(circuit, locations, coefficients):
    fault = FaultOperator.identity(circuit.delta, circuit.n)
    for column, (step, qubit) in enumerate(locations):
        fault.x[step, qubit] ^= coefficients[2 * column]
        fault.z[step, qubit] ^= coefficients[2 * column + 1]
    return fault


def test_cnot_cumulants():
    circuit = LocatedCircuit(2, [GateLayer([(cnot(), (0, 1))])])
    forward = cumulant(circuit, FaultOperator.from_locations(1, 2, {(0, 0): "X", (1, 1): "Z"}))
    assert forward.slice(0).labels() == "XI"
    assert forward.slice(1).labels() == "XY"
    backward = back_cumulant(circuit, FaultOperator.from_locations(1, 2, {(1, 1): "Z"}))
    assert backward.slice(0).labels() == "ZZ"
    assert backward.slice(1).labels() == "IZ"


@pytest.mark.parametrize("seed", range(10))
def test_cumulant_duality(css_code, seed):
    rng = np.random.default_rng(seed)
    circuit = LocatedCircuit(css_code.n, css_code.circuit.layers)
    first = random_fault(circuit, rng)
    second = random_fault(circuit, rng)
    assert cumulant(circuit, first).commutator(second) == first.commutator(back_cumulant(circuit, second))


def test_fault_operator_algebra():
    fault = FaultOperator.from_locations(2, 3, {(0, 1): "Y", (2, 0): "X"})
    other = FaultOperator.from_locations(2, 3, {(0, 1): "Z"})
    assert fault.weight == 2
    assert fault.commutator(other) == 1
    assert (fault * other).slice(0).labels() == "IXI"
    assert fault * fault == FaultOperator.identity(2, 3)
    with pytest.raises(PauliSizeError):
        fault.commutator(FaultOperator.identity(1, 3))
    with pytest.raises(PauliSizeError):
        FaultOperator(np.zeros(3), np.zeros(3))
    stacked = FaultOperator.from_slices([PauliOperator.from_label("XI"), PauliOperator.from_label("IZ")])
    assert stacked.delta == 1
    assert stacked.slice(1).labels() == "IZ"


def test_located_circuit_validation():
    layer = GateLayer([(cnot(), (0, 1))])
    with pytest.raises(CircuitError):
        LocatedCircuit(1, [layer])
    with pytest.raises(CircuitError):
        LocatedCircuit(2, [layer], [MeasurementEvent(2, (0,), "Z")])
    with pytest.raises(CircuitError):
        LocatedCircuit(2, [layer], exposure={3: [0]})
    with pytest.raises(PauliSizeError):
        LocatedCircuit(2, [layer], initial_labels="Z")
    with pytest.raises(PauliSizeError):
        cumulant(LocatedCircuit(2, [layer]), FaultOperator.identity(2, 2))


def test_protocol_circuit_layout(css_code, stcode):
    circuit = stcode.circuit
    d, q, rounds = css_code.circuit.d, 1, 1
    assert circuit.delta == d + rounds * (d + 2 * q + 4)
    assert circuit.n == css_code.n * (1 + rounds * 2 * 2 ** q)
    assert len(circuit.measurements) == 4 * css_code.n + len(css_code.stabilizers)
    data = set(stcode.protocol.data_qubits.tolist())
    assert data == set(range(css_code.n))
    assert min(circuit.exposure) == d + 1
    for step in range(d + 1, circuit.delta + 1):
        assert data <= set(circuit.exposure[step].tolist())
    assert stcode.num_checks == 4 * 2 + len(css_code.stabilizers)


def test_data_block_idles_through_every_round(css_code):
    d, q = css_code.circuit.d, 1
    protocol = build_protocol_circuit(css_code, q, 2)
    circuit = protocol.circuit
    assert circuit.delta == d + 2 * round_span(d, q)
    data = protocol.data_qubits
    exposed = [step for step, qubits in circuit.exposure.items() if np.isin(data, qubits).all()]
    assert sorted(exposed) == list(range(d + 1, circuit.delta + 1))
    levels = {readout.level for readout in protocol.readouts}
    top, span = 2 * d + 2 * q, round_span(d, q)
    assert {top + 2, top + 4, top + span + 2, top + span + 4} <= levels
    assert protocol.readouts[-1].level == circuit.delta == top + span + 4


def test_protocol_circuit_rejections(css_code, clifford_code):
    with pytest.raises(CodeError):
        build_protocol_circuit(clifford_code, 1, 1)
    with pytest.raises(ProtocolError):
        build_protocol_circuit(css_code, 0, 1)
    with pytest.raises(ProtocolError):
        build_protocol_circuit(css_code, 1, 0)


def test_noiseless_checks_are_satisfied(stcode, rng):
    outcomes = simulate_outcomes(stcode.protocol, FaultOperator.identity(stcode.circuit.delta, stcode.circuit.n), rng)
    assert not stcode.outcome_syndrome(outcomes).any()
    assert not (stcode.check_matrix().astype(int) @ outcomes % 2).any()


@pytest.mark.parametrize("seed", range(8))
def test_simulated_syndrome_matches_propagation(stcode, seed):
    rng = np.random.default_rng(seed)
    fault = random_fault(stcode.circuit, rng, density=0.05)
    outcomes = simulate_outcomes(stcode.circuit, fault, rng)
    assert np.array_equal(stcode.outcome_syndrome(outcomes), spacetime_syndrome(stcode, fault))


@pytest.mark.parametrize("seed", range(5))
def test_packed_rows_match_spacetime_stabilizers(stcode, seed):
    rng = np.random.default_rng(seed)
    locations = sample_erasures(stcode.circuit, 0.2, rng)
    response = propagate_unit_faults(stcode, locations)
    dense = dense_constraints(stcode, locations)
    assert np.array_equal(gf2.unpack_bits(response.check_rows, response.num_unknowns), dense)


@pytest.mark.parametrize("seed", range(5))
def test_packed_and_dense_decoders_agree(stcode, seed):
    rng = np.random.default_rng(seed)
    locations = sample_erasures(stcode.circuit, 0.2, rng)
    truth = sample_erasure_paulis(len(locations), rng)
    dense = dense_constraints(stcode, locations)
    syndrome = dense.astype(int) @ truth % 2
    response = propagate_unit_faults(stcode, locations)
    assert np.array_equal(gf2.packed_parity(response.check_rows, gf2.pack_bits(truth)), syndrome)
    decoded = decode_unknowns(response, syndrome)
    assert np.array_equal(decoded, gf2.solve(dense, syndrome))
    fault = erasure_decode(stcode, syndrome, locations)
    assert np.array_equal(spacetime_syndrome(stcode, fault), syndrome)
    assert fault == fault_from_unknowns(stcode.circuit, locations, decoded)


@pytest.mark.parametrize("seed", range(5))
def test_residual_checks_agree(stcode, seed):
    rng = np.random.default_rng(seed)
    locations = sample_erasures(stcode.circuit, 0.3, rng)
    response = propagate_unit_faults(stcode, locations)
    residual = rng.integers(0, 2, response.num_unknowns).astype(np.uint8)
    fault = fault_from_unknowns(stcode.circuit, locations, residual)
    assert residual_fails(stcode, fault) == residual_fails_packed(stcode, response, residual)
    assert not residual_fails_packed(stcode, response, np.zeros_like(residual))


def test_sample_erasures_extremes(stcode, rng):
    assert len(sample_erasures(stcode.circuit, 0.0, rng)) == 0
    assert np.array_equal(sample_erasures(stcode.circuit, 1.0, rng), stcode.circuit.exposed_locations())
    truth = sample_erasure_paulis(100, rng)
    assert (truth.reshape(-1, 2).any(axis=1)).all()


def test_decode_trial_values():
    assert decode_trial(6, "1/3", 1, 1, 0.0, 2, np.random.default_rng(0)) == {2: 0.0}
    value = decode_trial(6, "1/3", 1, 1, 0.05, 2, np.random.default_rng(1))
    assert set(value) == {2}
    assert value[2] in (0.0, 1.0)
