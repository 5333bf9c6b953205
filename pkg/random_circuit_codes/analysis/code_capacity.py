"""Code-capacity decoding experiment on open-boundary random circuit codes."""
from functools import partial
import logging
from typing import Dict, Optional, Sequence

import numpy as np

from random_circuit_codes.analysis.records import ExperimentRecord
from random_circuit_codes.analysis.runner import DEFAULT_BATCHES, run_experiment
from random_circuit_codes.codes import Boundary, generate_code, logical_failures, syndrome
from random_circuit_codes.errors import ConfigError
from random_circuit_codes.pauli import PauliOperator, sample_depolarizing
from random_circuit_codes.statmech import (
    marginal_correction,
    marginal_decode,
    maximum_weight_decode,
    minimum_weight_decode,
)

logger = logging.getLogger(__name__)

DECODERS = ("marginal", "minweight")


def decode_correction(code, bits, p: float, decoder: str) -> PauliOperator:
    """Correction chosen by the named decoder for syndrome `bits` at noise rate p."""
    if decoder == "marginal":
        if p >= 1:
            return maximum_weight_decode(code, bits)
        classes = marginal_decode(code, bits, p) if p > 0 else ["I"] * code.k
        return marginal_correction(code, bits, classes)
    if decoder == "minweight":
        return minimum_weight_decode(code, bits)
    raise ConfigError(f"Decoder must be one of {DECODERS}, got {decoder!r}")


def code_capacity_trial(
    n: int,
    rate: str,
    decoder: str,
    padding: Optional[int],
    p: float,
    size: int,
    rng: np.random.Generator,
) -> Dict[int, float]:
    """Average logical failure of one fresh code of depth `size` against one error."""
    code = generate_code(n, rate, size, Boundary.OPEN, css=False, rng=rng, padding=padding)
    error = sample_depolarizing(code.n, p, rng)
    bits = syndrome(code, error)
    correction = decode_correction(code, bits, p, decoder)
    residual = PauliOperator(error.x ^ correction.x, error.z ^ correction.z)
    failures = logical_failures(code, residual)
    logger.debug("Error weight %d, %d of %d logicals failed", error.weight, int(failures.sum()), code.k)
    return {size: float(failures.mean())}


def code_capacity_experiment(
    n: int,
    rate: str,
    depths: Sequence[int],
    p_grid: Sequence[float],
    trials: int,
    decoder: str,
    seed: int,
    padding: Optional[int] = None,
    batches: int = DEFAULT_BATCHES,
    workers: Optional[int] = None,
    config: Optional[dict] = None,
) -> ExperimentRecord:
    """Per-logical failure rate for every (depth, p) pair."""
    if decoder not in DECODERS:
        raise ConfigError(f"Decoder must be one of {DECODERS}, got {decoder!r}")
    config = config or {
        "kind": f"code-capacity-{decoder}",
        "n": n,
        "rate": str(rate),
        "depths": list(depths),
        "p_grid": list(p_grid),
        "trials": trials,
        "seed": seed,
        "decoder": decoder,
        "padding": padding,
    }
    points = [(p, d) for d in depths for p in p_grid]
    trial = partial(code_capacity_trial, n, str(rate), decoder, padding)
    return run_experiment(
        f"code-capacity-{decoder}", trial, points, trials, seed, config, batches=batches, workers=workers
    )
