"""Experiment records, Monte Carlo orchestration and threshold estimation."""
from random_circuit_codes.analysis.code_capacity import (
    DECODERS,
    code_capacity_experiment,
    code_capacity_trial,
    decode_correction,
)
from random_circuit_codes.analysis.hashing import binary_entropy, hashing_bound, hashing_rate
from random_circuit_codes.analysis.records import (
    CSV_HEADER,
    KINDS,
    SCHEMA_VERSION,
    ExperimentPoint,
    ExperimentRecord,
    config_hash,
)
from random_circuit_codes.analysis.runner import DEFAULT_BATCHES, run_experiment, run_trials
from random_circuit_codes.analysis.scaling import (
    ScalingFit,
    fit_arrays,
    fit_scaling_ansatz,
    jackknife_pc,
    truncate_window,
)
from random_circuit_codes.analysis.summary import SUMMARY_HEADER, ThresholdRow, threshold_summary
