"""Decoding failure rate of the full protocol under erasure."""
from functools import partial
import logging
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from random_circuit_codes import gf2
from random_circuit_codes.analysis import DEFAULT_BATCHES, ExperimentRecord, run_experiment
from random_circuit_codes.codes import Boundary, generate_code
from random_circuit_codes.spacetime.circuit import LocatedCircuit
from random_circuit_codes.spacetime.decoder import decode_unknowns, residual_fails_packed
from random_circuit_codes.spacetime.frames import propagate_unit_faults
from random_circuit_codes.spacetime.outcome import build_outcome_code
from random_circuit_codes.spacetime.schedule import build_protocol_circuit

logger = logging.getLogger(__name__)

DEFAULT_EC_ROUNDS = 3


def sample_erasures(circuit: LocatedCircuit, p: float, rng: np.random.Generator) -> np.ndarray:
    """Exposed locations erased independently with probability p."""
    locations = circuit.exposed_locations()
    return locations[rng.random(len(locations)) < p]


def sample_erasure_paulis(count: int, rng: np.random.Generator) -> np.ndarray:
    """X, Y or Z with equal probability at every erased location, as unit-fault coefficients."""
    kinds = rng.integers(1, 4, size=count)
    truth = np.zeros(2 * count, dtype=np.uint8)
    truth[0::2] = np.isin(kinds, (1, 2))
    truth[1::2] = np.isin(kinds, (2, 3))
    return truth


def decode_trial(
    n: int,
    rate: str,
    ec_rounds: int,
    q: Optional[int],
    p: float,
    d: int,
    rng: np.random.Generator,
) -> Dict[int, float]:
    """1.0 when decoding one fresh protocol run leaves a logical error on the data block."""
    q = d if q is None else q
    code = generate_code(n, rate, d, Boundary.PERIODIC, css=True, rng=rng)
    stcode = build_outcome_code(build_protocol_circuit(code, q, ec_rounds))
    erased = sample_erasures(stcode.circuit, p, rng)
    truth = sample_erasure_paulis(len(erased), rng)
    response = propagate_unit_faults(stcode, erased)
    syndrome = gf2.packed_parity(response.check_rows, gf2.pack_bits(truth))
    decoded = decode_unknowns(response, syndrome)
    failed = residual_fails_packed(stcode, response, truth ^ decoded)
    logger.debug("%d erasures, %d checks fired, failed=%s", len(erased), int(syndrome.sum()), failed)
    return {d: float(failed)}


def decode_experiment(
    n: int,
    rate: str,
    depths: Sequence[int],
    p_grid: Sequence[float],
    trials: int,
    seed: int,
    ec_rounds: int = DEFAULT_EC_ROUNDS,
    q: Optional[int] = None,
    batches: int = DEFAULT_BATCHES,
    workers: Optional[int] = None,
    config: Optional[dict] = None,
) -> ExperimentRecord:
    """Failure rate p_L of the decoded protocol for every (depth, p) pair; q defaults to d."""
    config = config or {
        "kind": "spacetime-failure",
        "n": n,
        "rate": str(rate),
        "depths": list(depths),
        "q": q,
        "ec_rounds": ec_rounds,
        "p_grid": list(p_grid),
        "trials": trials,
        "seed": seed,
    }
    points: Sequence[Tuple[float, int]] = [(p, d) for d in depths for p in p_grid]
    return run_experiment(
        "spacetime-failure",
        partial(decode_trial, n, str(rate), ec_rounds, q),
        points,
        trials,
        seed,
        config,
        batches=batches,
        workers=workers,
    )
