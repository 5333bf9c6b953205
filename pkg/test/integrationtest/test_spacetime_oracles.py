"""Exhaustive checks of the spacetime code and the erasure decoder on a small protocol circuit."""
import itertools

import numpy as np
import pytest

from random_circuit_codes import gf2
from random_circuit_codes.codes import Boundary, generate_code
from random_circuit_codes.rng import make_generator
from random_circuit_codes.spacetime import (
    FaultOperator,
    LocatedCircuit,
    back_cumulant,
    build_outcome_code,
    build_protocol_circuit,
    cumulant,
    decode_unknowns,
    propagate_unit_faults,
    residual_fails_packed,
    sample_erasure_paulis,
    sample_erasures,
    simulate_outcomes,
    spacetime_syndrome,
)


@pytest.fixture(scope="module")
def stcode():
    code = generate_code(6, "1/3", 2, Boundary.PERIODIC, css=True, rng=make_generator(7))
    return build_outcome_code(build_protocol_circuit(code, 1, 1))


def random_fault(circuit, rng):
    shape = (circuit.delta + 1, circuit.n)
    return FaultOperator(rng.integers(0, 2, shape).astype(np.uint8), rng.integers(0, 2, shape).astype(np.uint8))


def test_cumulant_duality_on_random_circuits():
    for seed in range(100):
        code = generate_code(6, "1/3", 2, Boundary.PERIODIC, css=bool(seed % 2), rng=make_generator(seed))
        circuit = LocatedCircuit(code.n, code.circuit.layers)
        rng = make_generator(seed, 1)
        for _ in range(100):
            first = random_fault(circuit, rng)
            second = random_fault(circuit, rng)
            assert cumulant(circuit, first).commutator(second) == first.commutator(back_cumulant(circuit, second))


def test_single_location_faults_match_simulation(stcode):
    rng = np.random.default_rng(0)
    for step, qubit in stcode.circuit.exposed_locations():
        for label in "XYZ":
            fault = FaultOperator.from_locations(stcode.circuit.delta, stcode.circuit.n, {(step, qubit): label})
            outcomes = simulate_outcomes(stcode.circuit, fault, rng)
            assert np.array_equal(stcode.outcome_syndrome(outcomes), spacetime_syndrome(stcode, fault)), (step, label)


def test_consistent_instances_always_decode(stcode):
    rng = np.random.default_rng(1)
    for _ in range(1000):
        locations = sample_erasures(stcode.circuit, 0.3, rng)
        response = propagate_unit_faults(stcode, locations)
        truth = sample_erasure_paulis(len(locations), rng)
        syndrome = gf2.packed_parity(response.check_rows, gf2.pack_bits(truth))
        decoded = decode_unknowns(response, syndrome)
        assert np.array_equal(gf2.packed_parity(response.check_rows, gf2.pack_bits(decoded)), syndrome)


def test_decoder_agrees_with_exhaustive_search(stcode):
    rng = np.random.default_rng(2)
    exposed = stcode.circuit.exposed_locations()
    for _ in range(100):
        size = int(rng.integers(1, 6))
        locations = exposed[np.sort(rng.choice(len(exposed), size, replace=False))]
        response = propagate_unit_faults(stcode, locations)
        rows = gf2.unpack_bits(response.check_rows, response.num_unknowns).astype(int)
        truth = sample_erasure_paulis(size, rng)
        syndrome = rows @ truth % 2
        decoded = decode_unknowns(response, syndrome)
        candidates = np.array(list(itertools.product([0, 1], repeat=2 * size)), dtype=np.uint8)
        consistent = candidates[((candidates @ rows.T) % 2 == syndrome).all(axis=1)]
        assert any(np.array_equal(decoded, candidate) for candidate in consistent)
        failures = [residual_fails_packed(stcode, response, candidate ^ truth) for candidate in consistent]
        if not any(failures):
            assert not residual_fails_packed(stcode, response, decoded ^ truth)
        else:
            assert 0 < sum(failures) < len(failures)
