"""Exhaustive checks of the spin-model contractions and decoders on many small random codes."""
import itertools

import numpy as np
import pytest
from scipy.special import logsumexp

from random_circuit_codes.codes import Boundary, canonical_error, generate_code, syndrome
from random_circuit_codes.pauli import PauliOperator, sample_depolarizing, symplectic_product
from random_circuit_codes.rng import make_generator
from random_circuit_codes.statmech import (
    LOGICAL_CLASSES,
    Semiring,
    SpinMode,
    build_spin_model,
    build_tensor_network,
    class_free_energies,
    contract_partition,
    contract_tropical,
    minimum_weight_decode,
    nishimori_beta,
)

SHAPES = (
    (6, "1/3", 2, Boundary.PERIODIC, None),
    (8, "1/4", 2, Boundary.PERIODIC, None),
    (8, "1/4", 1, Boundary.PERIODIC, None),
    (4, "1/4", 1, Boundary.OPEN, None),
    (3, "1/3", 1, Boundary.OPEN, 1),
)


def random_code(seed):
    n, rate, d, boundary, padding = SHAPES[seed % len(SHAPES)]
    css = bool(seed % 3 == 0)
    return generate_code(n, rate, d, boundary, css=css, rng=make_generator(seed), padding=padding)


def six_qubit_code(seed):
    rate = "1/3" if seed % 2 else "1/6"
    return generate_code(6, rate, 2, Boundary.PERIODIC, css=bool(seed % 3 == 0), rng=make_generator(seed))


def all_spins(count):
    return np.array(list(itertools.product([1, -1], repeat=count)), dtype=np.int64)


def all_paulis(n):
    codes = np.arange(4 ** n)
    x = ((codes[:, None] >> np.arange(n)) & 1).astype(np.uint8)
    z = ((codes[:, None] >> (n + np.arange(n))) & 1).astype(np.uint8)
    return x, z


def test_partition_functions_match_gibbs_sums():
    for seed in range(500):
        code = random_code(seed)
        rng = make_generator(seed, 1)
        mode = list(SpinMode)[seed % 3]
        error = sample_depolarizing(code.n, 0.25, rng)
        model = build_spin_model(code, error, mode, logical=0)
        beta_j = nishimori_beta(0.02 + 0.3 * rng.random())
        expected = logsumexp(-beta_j * model.energy(all_spins(model.num_spins)))
        network = build_tensor_network(model, Semiring.REAL)
        assert contract_partition(network, beta_j) == pytest.approx(expected, rel=1e-10, abs=1e-10), seed
        stabilizer = code.stabilizers[seed % len(code.stabilizers)]
        shifted = PauliOperator(error.x ^ stabilizer.x, error.z ^ stabilizer.z)
        moved = build_spin_model(code, shifted, mode, logical=0)
        assert contract_partition(build_tensor_network(moved), beta_j) == pytest.approx(expected, rel=1e-10), seed


def test_tropical_contractions_match_minimum():
    for seed in range(500):
        code = random_code(seed)
        error = sample_depolarizing(code.n, 0.3, make_generator(seed, 2))
        model = build_spin_model(code, error, SpinMode.ALL_GENERATORS)
        energy, spins = contract_tropical(build_tensor_network(model, Semiring.TROPICAL))
        assert energy == pytest.approx(-model.energy(all_spins(model.num_spins)).max()), seed
        assert -model.energy(spins) == pytest.approx(energy), seed


def test_minimum_weight_decoder_is_exact():
    for seed in range(100):
        code = random_code(seed)
        x, z = all_paulis(code.n)
        syndromes = symplectic_product(code.stabilizer_x[None], code.stabilizer_z[None], x[:, None], z[:, None])
        weights = (x | z).sum(axis=1)
        rng = make_generator(seed, 3)
        for _ in range(10):
            bits = syndrome(code, sample_depolarizing(code.n, 0.3, rng))
            match = (syndromes == bits[None]).all(axis=1)
            correction = minimum_weight_decode(code, bits)
            assert np.array_equal(syndrome(code, correction), bits), seed
            assert correction.weight == weights[match].min(), seed


def test_marginal_decoder_matches_exhaustive_classes():
    trials = 0
    for seed in range(150):
        code = six_qubit_code(seed)
        x, z = all_paulis(code.n)
        syndromes = symplectic_product(code.stabilizer_x[None], code.stabilizer_z[None], x[:, None], z[:, None])
        weights = (x | z).sum(axis=1)
        rng = make_generator(seed, 4)
        for _ in range(4):
            p = 0.02 + 0.2 * rng.random()
            bits = syndrome(code, sample_depolarizing(code.n, p, rng))
            match = (syndromes == bits[None]).all(axis=1)
            probability = np.where(match, (p / 3) ** weights * (1 - p) ** (code.n - weights), 0.0)
            energies = class_free_energies(code, bits, p)
            for logical in range(code.k):
                flips_z = symplectic_product(x, z, code.logical_z[logical].x, code.logical_z[logical].z)
                flips_x = symplectic_product(x, z, code.logical_x[logical].x, code.logical_x[logical].z)
                classes = np.array([0, 3, 1, 2])[2 * flips_z + flips_x]
                totals = np.bincount(classes, weights=probability, minlength=len(LOGICAL_CLASSES))
                normalized = np.exp(energies[logical] - logsumexp(energies[logical]))
                assert normalized == pytest.approx(totals / totals.sum(), rel=1e-8, abs=1e-14), seed
                assert totals[np.argmax(energies[logical])] == pytest.approx(totals.max(), rel=1e-9), seed
            trials += 1
    assert trials >= 500


def test_trivial_syndromes_decode_to_identity():
    for seed in range(100):
        code = random_code(seed)
        bits = np.zeros(len(code.stabilizers), dtype=np.uint8)
        assert canonical_error(code, bits).is_identity()
        energies = class_free_energies(code, bits, 0.01)
        assert (np.argmax(energies, axis=1) == 0).all(), seed
