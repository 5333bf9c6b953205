"""Config reading and the record, fit, summary and manifest files OutputIO writes to an output directory."""
import csv
import json
import logging
from pathlib import Path
from typing import List, Optional, Sequence

import oyaml as yaml

from random_circuit_codes.analysis.records import CSV_HEADER, ExperimentRecord
from random_circuit_codes.analysis.scaling import ScalingFit
from random_circuit_codes.analysis.summary import SUMMARY_HEADER, ThresholdRow
from random_circuit_codes.errors import ConfigError, RecordParseError
from random_circuit_codes.types import PathLike

logger = logging.getLogger(__name__)

RECORD_CSV = "record.csv"
RECORD_JSON = "record.json"
FIT_JSON = "fit.json"
MANIFEST = "manifest.yaml"
SUMMARY_CSV = "threshold_summary.csv"


def read_yaml(path: PathLike) -> dict:
    """Read a YAML or JSON file preserving key order."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"Config file {path} does not exist")
    try:
        content = yaml.load(path.read_text(), Loader=yaml.FullLoader)
    except yaml.YAMLError as err:
        raise ConfigError(f"Cannot parse {path}: {err}") from err
    if not isinstance(content, dict):
        raise ConfigError(f"{path} does not hold a mapping")
    return content


def read_record(path: PathLike) -> ExperimentRecord:
    """Load a record.json written by `OutputIO.write_record`."""
    path = Path(path)
    try:
        values = json.loads(path.read_text())
    except (OSError, ValueError) as err:
        raise RecordParseError(f"Cannot read record {path}: {err}") from err
    return ExperimentRecord.from_dict(values)


def read_fit(path: PathLike) -> ScalingFit:
    path = Path(path)
    try:
        values = json.loads(path.read_text())
    except (OSError, ValueError) as err:
        raise RecordParseError(f"Cannot read fit {path}: {err}") from err
    return ScalingFit.from_dict(values)


def _write_csv(file: Path, header: Sequence[str], rows: List[list]) -> None:
    with file.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


class OutputIO:
    """Write experiment results into one output directory.

    Every file written is remembered so that `cleanup` can remove the partial
    result of a failed invocation.
    """

    def __init__(self, out_directory: PathLike):
        self.out_dir = Path(out_directory)
        self.written: List[Path] = []
        self._setup_out_dir()

    def _setup_out_dir(self) -> None:
        if not self.out_dir.is_dir():
            self.out_dir.mkdir(parents=True)

    def _track(self, file: Path) -> Path:
        self.written.append(file)
        logger.info("Wrote %s", file)
        return file

    def write_record(self, record: ExperimentRecord) -> List[Path]:
        """record.csv and the self-describing record.json"""
        csv_file = self.out_dir / RECORD_CSV
        _write_csv(csv_file, CSV_HEADER, record.csv_rows())
        self._track(csv_file)
        json_file = self.out_dir / RECORD_JSON
        json_file.write_text(json.dumps(record.to_dict(), indent=2) + "\n")
        return [csv_file, self._track(json_file)]

    def write_fit(self, fit: ScalingFit, file: Optional[PathLike] = None) -> Path:
        file = Path(file) if file is not None else self.out_dir / FIT_JSON
        file.write_text(json.dumps(fit.to_dict(), indent=2) + "\n")
        return self._track(file)

    def write_summary(self, rows: Sequence[ThresholdRow], file: Optional[PathLike] = None) -> Path:
        file = Path(file) if file is not None else self.out_dir / SUMMARY_CSV
        _write_csv(file, SUMMARY_HEADER, [row.csv_row() for row in rows])
        return self._track(file)

    def write_manifest(self, seed: int, version: str, config: dict) -> Path:
        """Replay manifest: seed, version string, config echo and the files written so far."""
        file = self.out_dir / MANIFEST
        manifest = {
            "seed": seed,
            "version": version,
            "config": config,
            "files": [written.name for written in self.written],
        }
        file.write_text(yaml.dump(manifest, default_flow_style=False))
        return self._track(file)

    def cleanup(self) -> None:
        """Remove every file written by this instance."""
        for file in reversed(self.written):
            if file.is_file():
                file.unlink()
                logger.debug("Removed partial output %s", file)
        self.written = []
