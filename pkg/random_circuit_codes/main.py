"""The user facing functions of random-circuit-codes; the CLI mirrors them."""
import logging
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from random_circuit_codes.analysis.code_capacity import code_capacity_experiment
from random_circuit_codes.analysis.records import ExperimentRecord
from random_circuit_codes.analysis.scaling import ScalingFit, fit_scaling_ansatz, jackknife_pc, truncate_window
from random_circuit_codes.analysis.summary import ThresholdRow, threshold_summary as summarize
from random_circuit_codes.config import ExperimentConfig, config_from_options, load_config
from random_circuit_codes.errors import FitError
from random_circuit_codes.gateways.io import OutputIO, read_record, read_yaml
from random_circuit_codes.gateways.utils import get_version_string
from random_circuit_codes.protocol.experiments import entropy_density_experiment, mutual_info_experiment
from random_circuit_codes.spacetime.experiment import decode_experiment
from random_circuit_codes.types import PathLike, Window

logger = logging.getLogger(__name__)

DEFAULT_OUT_DIR = "results"


def run(config_file: PathLike, out_dir: PathLike = DEFAULT_OUT_DIR) -> Tuple[ExperimentRecord, Optional[ScalingFit]]:
    """Run the experiment a config file describes and write its outputs."""
    return run_config(load_config(config_file), out_dir=out_dir)


def code_capacity(out_dir: PathLike = DEFAULT_OUT_DIR, base_config: Optional[PathLike] = None, **options):
    return _run_options("code-capacity", out_dir, base_config, options)


def entropy(out_dir: PathLike = DEFAULT_OUT_DIR, base_config: Optional[PathLike] = None, **options):
    return _run_options("entropy", out_dir, base_config, options)


def mutual_info(out_dir: PathLike = DEFAULT_OUT_DIR, base_config: Optional[PathLike] = None, **options):
    return _run_options("mutual-info", out_dir, base_config, options)


def spacetime(out_dir: PathLike = DEFAULT_OUT_DIR, base_config: Optional[PathLike] = None, **options):
    return _run_options("spacetime", out_dir, base_config, options)


def _run_options(kind: str, out_dir: PathLike, base_config: Optional[PathLike], options: dict):
    base = read_yaml(base_config) if base_config is not None else None
    return run_config(config_from_options(kind, base, options), out_dir=out_dir)


def run_config(
    config: ExperimentConfig, out_dir: PathLike = DEFAULT_OUT_DIR
) -> Tuple[ExperimentRecord, Optional[ScalingFit]]:
    """Run one experiment, write record, fit and manifest; remove partial output on failure."""
    io = OutputIO(out_dir)
    try:
        record = run_experiment(config)
        io.write_record(record)
        scaling_fit = _fit_record(record, config)
        if scaling_fit is not None:
            io.write_fit(scaling_fit)
        io.write_manifest(seed=config.seed, version=get_version_string(), config=config.to_dict())
    except BaseException:
        logger.error("Run of %s failed, removing partial output in %s", config.kind, Path(out_dir))
        io.cleanup()
        raise
    return record, scaling_fit


def run_experiment(config: ExperimentConfig) -> ExperimentRecord:
    """Dispatch a validated config to its experiment."""
    echo = config.to_dict()
    common = dict(seed=config.seed, batches=config.batches, config=echo)
    if config.kind == "code-capacity":
        return code_capacity_experiment(
            config.n,
            config.rate,
            config.depths,
            config.p_grid,
            config.trials,
            config.decoder,
            padding=config.padding,
            **common,
        )
    if config.kind == "entropy":
        return entropy_density_experiment(
            config.n, config.rate, config.depths[0], config.p_grid, config.q_max, config.trials, **common
        )
    if config.kind == "mutual-info":
        return mutual_info_experiment(
            config.n, config.rate, config.depths, config.p_grid, config.rounds, config.trials, q=config.q, **common
        )
    return decode_experiment(
        config.n,
        config.rate,
        config.depths,
        config.p_grid,
        config.trials,
        ec_rounds=config.ec_rounds,
        q=config.q,
        **common,
    )


def _fit_record(record: ExperimentRecord, config: ExperimentConfig) -> Optional[ScalingFit]:
    if not config.fit:
        return None
    window = tuple(config.window) if config.window else None
    try:
        if config.truncate:
            window = truncate_window(record, window, factor=config.truncation_factor)
        return fit_with_errors(record, window)
    except FitError as err:
        logger.warning("Skipping the scaling fit: %s", err)
        return None


def fit_with_errors(record: ExperimentRecord, window: Optional[Window] = None) -> ScalingFit:
    """Scaling fit with its jackknife deviation filled in."""
    scaling_fit = fit_scaling_ansatz(record, window)
    scaling_fit.sigma_pc = jackknife_pc(record, scaling_fit.window)
    return scaling_fit


def fit(record_file: PathLike, window: Optional[Window] = None, out: Optional[PathLike] = None) -> ScalingFit:
    """Refit a stored record; writes fit.json next to the record unless `out` is given."""
    record_file = Path(record_file)
    scaling_fit = fit_with_errors(read_record(record_file), window)
    target = Path(out) if out is not None else record_file.parent / "fit.json"
    OutputIO(target.parent).write_fit(scaling_fit, target)
    return scaling_fit


def threshold_summary(
    record_files: Sequence[PathLike], window: Optional[Window] = None, out: Optional[PathLike] = None
) -> List[ThresholdRow]:
    """Fitted thresholds of several records next to the hashing bound of each rate."""
    rows = summarize([read_record(file) for file in record_files], window)
    if out is not None:
        out = Path(out)
        OutputIO(out.parent).write_summary(rows, out)
    return rows
