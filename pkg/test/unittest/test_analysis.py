"""Test records, the Monte Carlo runner, scaling fits and the hashing bound."""
import logging

import numpy as np
import pytest

from random_circuit_codes.analysis import (
    CSV_HEADER,
    ExperimentPoint,
    ExperimentRecord,
    ScalingFit,
    code_capacity_experiment,
    code_capacity_trial,
    decode_correction,
    fit_arrays,
    fit_scaling_ansatz,
    hashing_bound,
    hashing_rate,
    jackknife_pc,
    run_experiment,
    threshold_summary,
    truncate_window,
)
from random_circuit_codes.codes import syndrome
from random_circuit_codes.errors import ConfigError, FitError, HashingBoundError, RecordParseError
from random_circuit_codes.pauli import PauliOperator


def coin_trial(p, size, rng):
    """Bernoulli(p) outcome reported for `size`."""
    return {size: float(rng.random() < p)}


def test_record_round_trip(record_factory):
    record = record_factory()
    restored = ExperimentRecord.from_dict(record.to_dict())
    assert restored == record
    assert restored.sizes == [3, 4, 5]
    assert restored.p_values == pytest.approx(np.linspace(0.1, 0.2, 9))
    assert len(restored.select((0.1, 0.14), sizes=[3])) == 4
    assert list(restored.series()) == [3, 4, 5]


def test_record_csv_rows():
    record = ExperimentRecord(kind="entropy", seed=3, config={})
    record.add_point(ExperimentPoint(0.1, 2, 1 / 3, 0.01, 10))
    assert len(CSV_HEADER) == 6
    assert record.csv_rows() == [["entropy", "0.1", "2", repr(1 / 3), "0.01", "10"]]


def test_record_rejections(record_factory):
    with pytest.raises(RecordParseError):
        ExperimentRecord(kind="unknown", seed=0, config={})
    values = record_factory().to_dict()
    with pytest.raises(RecordParseError):
        ExperimentRecord.from_dict({**values, "schema_version": 2})
    with pytest.raises(RecordParseError):
        ExperimentRecord.from_dict({key: value for key, value in values.items() if key != "points"})


def test_record_hash_mismatch_warns(caplog, record_factory):
    values = record_factory().to_dict()
    values["config_hash"] = "0" * 64
    with caplog.at_level(logging.WARNING):
        ExperimentRecord.from_dict(values)
    assert "does not match" in caplog.text


def test_runner_aggregates_points():
    record = run_experiment("entropy", coin_trial, [(0.0, 2), (1.0, 4)], 20, 5, {}, batches=5, workers=1)
    assert [(point.p, point.size) for point in record.points] == [(0.0, 2), (1.0, 4)]
    assert [point.estimate for point in record.points] == [0.0, 1.0]
    assert all(point.trials == 20 and len(point.batches) == 5 for point in record.points)
    with pytest.raises(ConfigError):
        run_experiment("entropy", coin_trial, [(0.5, 2)], 0, 5, {})


def test_runner_is_independent_of_workers(mocker):
    points = [(0.3, 2), (0.6, 4)]
    serial = run_experiment("entropy", coin_trial, points, 30, 9, {}, workers=1)
    mocker.patch("random_circuit_codes.analysis.runner.get_worker_count", return_value=2)
    parallel = run_experiment("entropy", coin_trial, points, 30, 9, {})
    assert parallel.points == serial.points
    reseeded = run_experiment("entropy", coin_trial, points, 30, 10, {}, workers=1)
    assert reseeded.points != serial.points


def test_hashing_bound():
    assert hashing_bound(0) == pytest.approx(0.1893, abs=1e-4)
    assert hashing_rate(hashing_bound(0.25)) == pytest.approx(0.25, abs=1e-6)
    assert hashing_bound(0.9) < hashing_bound(0.5) < hashing_bound(0.1)
    for rate in (1.0, -0.1):
        with pytest.raises(HashingBoundError):
            hashing_bound(rate)


def test_scaling_fit_recovers_synthetic_threshold(record_factory):
    fit = fit_scaling_ansatz(record_factory())
    assert fit.p_c == pytest.approx(0.15, abs=1e-3)
    assert fit.exponent == pytest.approx(1.2, abs=1e-2)
    assert fit.window == (0.1, 0.2)
    assert fit.residual < 1e-8
    assert len(fit.collapse) == 27
    assert ScalingFit.from_dict(fit.to_dict()) == fit


def test_scaling_fit_with_noise():
    rng = np.random.default_rng(0)
    ps, sizes = np.meshgrid(np.linspace(0.01, 0.03, 9), [2, 4, 8, 16])
    x = sizes ** 0.6 * (ps - 0.02)
    values = 0.1 + x + 2 * x * x + rng.normal(0, 1e-4, size=x.shape)
    fit = fit_arrays(ps.ravel(), sizes.ravel(), values.ravel(), (0.01, 0.03))
    assert fit.p_c == pytest.approx(0.02, abs=1e-3)
    assert fit.exponent == pytest.approx(0.6, abs=5e-2)


def test_scaling_fit_inside_window(record_factory):
    fit = fit_scaling_ansatz(record_factory(), window=(0.12, 0.2))
    assert fit.p_c == pytest.approx(0.15, abs=1e-3)
    assert all(point["p"] >= 0.12 for point in fit.collapse)


def test_jackknife_of_identical_batches(record_factory):
    record = record_factory()
    assert jackknife_pc(record) == pytest.approx(0.0, abs=1e-9)
    assert truncate_window(record) == (0.1, 0.2)


def test_scaling_fit_with_two_sizes(record_factory):
    fit = fit_scaling_ansatz(record_factory(sizes=(4, 5), p_values=np.linspace(0.1, 0.2, 6)))
    assert fit.p_c == pytest.approx(0.15, abs=1e-3)
    assert fit.exponent == pytest.approx(1.2, abs=1e-2)
    assert {point["size"] for point in fit.collapse} == {4, 5}


def test_truncate_window_drops_noisy_edge(record_factory):
    record = ExperimentRecord(kind="code-capacity-minweight", seed=0, config={"rate": "1/4"})
    for point in record_factory().points:
        batches = point.batches
        if point.p < 0.105:
            batches = [point.estimate + shift * point.size for shift in (-0.05, 0.05, -0.02, 0.02)]
        record.add_point(ExperimentPoint(point.p, point.size, point.estimate, 0.0, 100, batches))
    p_values = record.p_values
    assert jackknife_pc(record) > 0
    assert truncate_window(record) == (p_values[1], p_values[-1])
    assert jackknife_pc(record, (p_values[1], p_values[-1])) == pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize("options", [{"sizes": (3,)}, {"p_values": (0.1, 0.15, 0.2)}])
def test_scaling_fit_needs_data(record_factory, options):
    with pytest.raises(FitError):
        fit_scaling_ansatz(record_factory(**options))


def test_malformed_fit():
    with pytest.raises(FitError):
        ScalingFit.from_dict({"p_c": 0.1})


def test_threshold_summary_sorted_by_rate(record_factory):
    rows = threshold_summary([record_factory("1/3", p_c=0.12), record_factory("1/4")])
    assert [row.rate for row in rows] == ["1/4", "1/3"]
    assert rows[0].p_c == pytest.approx(0.15, abs=1e-3)
    assert rows[1].p_c == pytest.approx(0.12, abs=1e-3)
    assert rows[0].p_hashing == pytest.approx(hashing_bound(0.25))
    assert rows[0].sigma_pc == pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize("decoder", ["marginal", "minweight"])
def test_noiseless_code_capacity_trial(decoder):
    assert code_capacity_trial(4, "1/4", decoder, None, 0.0, 1, np.random.default_rng(0)) == {1: 0.0}


def test_fully_depolarized_marginal_trial(clifford_code):
    result = code_capacity_trial(4, "1/4", "marginal", 1, 1.0, 1, np.random.default_rng(3))
    assert list(result) == [1]
    assert 0.0 <= result[1] <= 1.0
    bits = syndrome(clifford_code, PauliOperator.single(clifford_code.n, 0, "X"))
    correction = decode_correction(clifford_code, bits, 1.0, "marginal")
    assert np.array_equal(syndrome(clifford_code, correction), bits)
    assert correction.weight >= decode_correction(clifford_code, bits, 1.0, "minweight").weight


def test_unknown_decoder(clifford_code):
    with pytest.raises(ConfigError):
        decode_correction(clifford_code, np.zeros(4, dtype=np.uint8), 0.1, "belief")
    with pytest.raises(ConfigError):
        code_capacity_experiment(4, "1/4", [1], [0.1], 1, "belief", seed=0)
