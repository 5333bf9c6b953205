"""Self-describing Monte Carlo experiment records."""
from dataclasses import dataclass, field
import hashlib
import json
import logging
from typing import Dict, List, Optional, Sequence

from random_circuit_codes.errors import RecordParseError
from random_circuit_codes.types import Window

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
KINDS = (
    "code-capacity-marginal",
    "code-capacity-minweight",
    "entropy",
    "mutual-info",
    "spacetime-failure",
)
CSV_HEADER = ("kind", "p", "size", "estimate", "stderr", "trials")


def config_hash(config: dict) -> str:
    """sha256 of the canonical JSON form of a config."""
    canonical = json.dumps(config, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


@dataclass
class ExperimentPoint:
    """Estimate at one (p, size) point; `batches` are the per-batch means."""

    p: float
    size: int
    estimate: float
    stderr: float
    trials: int
    batches: List[float] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "size": self.size,
            "estimate": self.estimate,
            "stderr": self.stderr,
            "trials": self.trials,
            "batches": list(self.batches),
        }

    @classmethod
    def from_dict(cls, values: dict) -> "ExperimentPoint":
        return cls(
            p=float(values["p"]),
            size=int(values["size"]),
            estimate=float(values["estimate"]),
            stderr=float(values["stderr"]),
            trials=int(values["trials"]),
            batches=[float(b) for b in values.get("batches", [])],
        )


@dataclass
class ExperimentRecord:
    kind: str
    seed: int
    config: dict
    points: List[ExperimentPoint] = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self):
        if self.kind not in KINDS:
            raise RecordParseError(f"Unknown experiment kind {self.kind!r}")

    @property
    def config_hash(self) -> str:
        return config_hash(self.config)

    def add_point(self, point: ExperimentPoint) -> None:
        self.points.append(point)

    @property
    def sizes(self) -> List[int]:
        return sorted({point.size for point in self.points})

    @property
    def p_values(self) -> List[float]:
        return sorted({point.p for point in self.points})

    def select(self, window: Optional[Window] = None, sizes: Optional[Sequence[int]] = None) -> List[ExperimentPoint]:
        """Points with p inside the closed window and size among `sizes`."""
        chosen = []
        for point in self.points:
            if window is not None and not window[0] <= point.p <= window[1]:
                continue
            if sizes is not None and point.size not in sizes:
                continue
            chosen.append(point)
        return chosen

    def series(self) -> Dict[int, List[ExperimentPoint]]:
        """Points grouped by size and sorted by p."""
        grouped: Dict[int, List[ExperimentPoint]] = {}
        for point in sorted(self.points, key=lambda point: (point.size, point.p)):
            grouped.setdefault(point.size, []).append(point)
        return grouped

    def csv_rows(self) -> List[list]:
        return [
            [self.kind, repr(point.p), str(point.size), repr(point.estimate), repr(point.stderr), str(point.trials)]
            for point in self.points
        ]

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "kind": self.kind,
            "config_hash": self.config_hash,
            "seed": self.seed,
            "config": self.config,
            "points": [point.to_dict() for point in self.points],
        }

    @classmethod
    def from_dict(cls, values: dict) -> "ExperimentRecord":
        try:
            version = int(values["schema_version"])
            if version != SCHEMA_VERSION:
                raise RecordParseError(f"Unsupported record schema version {version}")
            record = cls(
                kind=values["kind"],
                seed=int(values["seed"]),
                config=dict(values["config"]),
                points=[ExperimentPoint.from_dict(point) for point in values["points"]],
                schema_version=version,
            )
        except (KeyError, TypeError, ValueError) as err:
            raise RecordParseError(f"Malformed experiment record: {err}") from err
        stored_hash = values.get("config_hash")
        if stored_hash is not None and stored_hash != record.config_hash:
            logger.warning("Record config hash %s does not match its config", stored_hash)
        return record
