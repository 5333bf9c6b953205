"""Test experiment configs."""
import pytest

from random_circuit_codes.config import ExperimentConfig, config_from_options, load_config
from random_circuit_codes.errors import ConfigError

BASE = {"kind": "code-capacity", "n": 20, "rate": "1/4", "depths": [2, 3], "p_grid": [0.1, 0.12]}


def test_defaults():
    config = ExperimentConfig.from_dict(BASE)
    assert config.trials == 1000
    assert config.seed == 0
    assert config.batches == 50
    assert config.decoder == "minweight"
    assert config.record_kind == "code-capacity-minweight"
    assert config.truncation_factor == 2.0


def test_normalized_values():
    config = ExperimentConfig.from_dict({**BASE, "rate": 0.25, "depths": 4, "p_grid": 0.1, "decoder": "marginal"})
    assert config.rate == "1/4"
    assert config.depths == [4]
    assert config.p_grid == [0.1]
    assert config.record_kind == "code-capacity-marginal"


@pytest.mark.parametrize(
    "kind, record_kind",
    [("entropy", "entropy"), ("mutual-info", "mutual-info"), ("spacetime", "spacetime-failure")],
)
def test_record_kinds(kind, record_kind):
    config = ExperimentConfig.from_dict({**BASE, "kind": kind, "depths": [2], "q_max": 4})
    assert config.record_kind == record_kind


@pytest.mark.parametrize(
    "values",
    [
        {**BASE, "colour": "red"},
        {**BASE, "kind": "thermal"},
        {key: value for key, value in BASE.items() if key != "p_grid"},
        {**BASE, "kind": "entropy", "depths": [2]},
        {**BASE, "rate": "3/2"},
        {**BASE, "n": "many"},
        {**BASE, "n": 1},
        {**BASE, "p_grid": [0.1, 1.5]},
        {**BASE, "trials": 0},
        {**BASE, "decoder": "belief"},
        {**BASE, "kind": "entropy", "q_max": 4},
        {**BASE, "window": [0.2, 0.1]},
        {**BASE, "truncation_factor": 0.5},
        [BASE],
    ],
)
def test_invalid_configs(values):
    with pytest.raises(ConfigError):
        ExperimentConfig.from_dict(values)


def test_merged_overrides():
    config = ExperimentConfig.from_dict(BASE).merged({"trials": 10, "seed": None, "depths": [5]})
    assert config.trials == 10
    assert config.seed == 0
    assert config.depths == [5]


def test_config_from_options():
    config = config_from_options("code-capacity", BASE, {"n": 30, "rate": None})
    assert config.n == 30
    assert config.rate == "1/4"
    with pytest.raises(ConfigError):
        config_from_options("entropy", BASE, {})


def test_load_config(out_dir):
    out_dir.mkdir()
    file = out_dir / "config.yaml"
    file.write_text("kind: spacetime\nn: 12\nrate: 1/3\ndepths: [1, 2]\np_grid: [0.01]\nec_rounds: 2\n")
    config = load_config(file)
    assert config.kind == "spacetime"
    assert config.ec_rounds == 2
    assert config.to_dict()["depths"] == [1, 2]
    with pytest.raises(ConfigError):
        load_config(out_dir / "missing.yaml")
