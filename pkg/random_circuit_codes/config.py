"""Experiment configuration files."""
from dataclasses import asdict, dataclass, fields
import logging
from typing import List, Optional

from random_circuit_codes.errors import ConfigError, RateError
from random_circuit_codes.gateways.io import read_yaml
from random_circuit_codes.types import PathLike
from random_circuit_codes.utils import parse_rate

logger = logging.getLogger(__name__)

EXPERIMENTS = ("code-capacity", "entropy", "mutual-info", "spacetime")
DECODERS = ("marginal", "minweight")

REQUIRED = {
    "code-capacity": ("n", "rate", "depths", "p_grid"),
    "entropy": ("n", "rate", "depths", "q_max", "p_grid"),
    "mutual-info": ("n", "rate", "depths", "p_grid"),
    "spacetime": ("n", "rate", "depths", "p_grid"),
}

RECORD_KINDS = {
    "entropy": "entropy",
    "mutual-info": "mutual-info",
    "spacetime": "spacetime-failure",
}


@dataclass
class ExperimentConfig:
    """One experiment: what to sample, where and how often."""

    kind: str
    n: int
    rate: str
    depths: List[int]
    p_grid: List[float]
    trials: int = 1000
    seed: int = 0
    q: Optional[int] = None
    q_max: Optional[int] = None
    rounds: int = 10
    ec_rounds: int = 3
    decoder: str = "minweight"
    batches: int = 50
    padding: Optional[int] = None
    window: Optional[List[float]] = None
    truncate: bool = False
    truncation_factor: float = 2.0
    fit: bool = True

    @property
    def record_kind(self) -> str:
        if self.kind == "code-capacity":
            return f"code-capacity-{self.decoder}"
        return RECORD_KINDS[self.kind]

    @classmethod
    def from_dict(cls, values: dict) -> "ExperimentConfig":
        """Validate a mapping of config keys; unknown keys are rejected."""
        if not isinstance(values, dict):
            raise ConfigError(f"A config must be a mapping, got {type(values).__name__}")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(values) - known)
        if unknown:
            raise ConfigError(f"Unknown config keys: {unknown}")
        kind = values.get("kind")
        if kind not in EXPERIMENTS:
            raise ConfigError(f"Config kind must be one of {EXPERIMENTS}, got {kind!r}")
        missing = [key for key in REQUIRED[kind] if values.get(key) is None]
        if missing:
            raise ConfigError(f"Config for {kind} is missing {missing}")
        try:
            config = cls(
                kind=kind,
                n=int(values["n"]),
                rate=str(parse_rate(values["rate"])),
                depths=[int(d) for d in _as_list(values["depths"])],
                p_grid=[float(p) for p in _as_list(values["p_grid"])],
                **{
                    key: values[key]
                    for key in known - {"kind", "n", "rate", "depths", "p_grid"}
                    if values.get(key) is not None
                },
            )
        except (TypeError, ValueError, RateError) as err:
            raise ConfigError(f"Invalid config: {err}") from err
        config.validate()
        return config

    def validate(self) -> None:
        if self.n < 2:
            raise ConfigError(f"n must be at least 2, got {self.n}")
        if not self.depths or min(self.depths) < 0:
            raise ConfigError(f"depths must be nonnegative and nonempty, got {self.depths}")
        if not self.p_grid or not all(0 <= p <= 1 for p in self.p_grid):
            raise ConfigError(f"p_grid values must lie in [0, 1], got {self.p_grid}")
        if self.trials < 1:
            raise ConfigError(f"trials must be positive, got {self.trials}")
        if self.batches < 1:
            raise ConfigError(f"batches must be positive, got {self.batches}")
        if self.decoder not in DECODERS:
            raise ConfigError(f"decoder must be one of {DECODERS}, got {self.decoder!r}")
        if self.kind == "entropy" and len(self.depths) != 1:
            raise ConfigError(f"The entropy experiment runs a single depth, got {self.depths}")
        if self.window is not None and (len(self.window) != 2 or self.window[0] > self.window[1]):
            raise ConfigError(f"window must be [p_min, p_max], got {self.window}")
        if self.truncation_factor < 1:
            raise ConfigError(f"truncation_factor must be at least 1, got {self.truncation_factor}")

    def merged(self, overrides: dict) -> "ExperimentConfig":
        """A new config with every non-None override applied."""
        values = self.to_dict()
        values.update({key: value for key, value in overrides.items() if value is not None})
        return ExperimentConfig.from_dict(values)

    def to_dict(self) -> dict:
        return asdict(self)


def _as_list(value) -> list:
    if isinstance(value, (list, tuple)):
        return list(value)
    return [value]


def config_from_options(kind: str, base: Optional[dict], overrides: dict) -> ExperimentConfig:
    """Combine a base config mapping with command line overrides."""
    values = dict(base or {})
    if values.get("kind", kind) != kind:
        raise ConfigError(f"Base config is for {values['kind']}, not {kind}")
    values["kind"] = kind
    values.update({key: value for key, value in overrides.items() if value is not None})
    return ExperimentConfig.from_dict(values)


def load_config(path: PathLike) -> ExperimentConfig:
    """Read and validate a YAML or JSON experiment config."""
    config = ExperimentConfig.from_dict(read_yaml(path))
    logger.debug("Loaded %s config from %s", config.kind, path)
    return config
