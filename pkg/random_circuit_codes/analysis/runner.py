"""Monte Carlo orchestration over (p, size) points.

Every trial draws from the substream (seed, point index, trial index), so the
records are identical whether trials run serially or across worker processes.
"""
from concurrent.futures import ProcessPoolExecutor
from functools import partial
import logging
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from random_circuit_codes.analysis.records import ExperimentPoint, ExperimentRecord
from random_circuit_codes.errors import ConfigError
from random_circuit_codes.gateways.utils import get_worker_count
from random_circuit_codes.rng import make_generator, substream_key
from random_circuit_codes.types import PointKey
from random_circuit_codes.utils import batch_means, standard_error

logger = logging.getLogger(__name__)

DEFAULT_BATCHES = 50

TrialFunction = Callable[[float, int, np.random.Generator], Mapping[int, float]]


def _run_task(trial: TrialFunction, seed: int, task: Tuple[int, int, float, int]) -> Mapping[int, float]:
    point_index, trial_index, p, size = task
    rng = make_generator(seed, *substream_key(point_index, trial_index))
    return dict(trial(p, size, rng))


def run_trials(
    trial: TrialFunction,
    points: Sequence[PointKey],
    trials: int,
    seed: int,
    workers: Optional[int] = None,
) -> List[List[Mapping[int, float]]]:
    """Outcomes of every trial, grouped by point in trial order."""
    workers = get_worker_count() if workers is None else workers
    tasks = [
        (point_index, trial_index, float(p), int(size))
        for point_index, (p, size) in enumerate(points)
        for trial_index in range(trials)
    ]
    run = partial(_run_task, trial, seed)
    if workers > 1 and len(tasks) > 1:
        chunksize = max(1, len(tasks) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run, tasks, chunksize=chunksize))
    else:
        outcomes = [run(task) for task in tasks]
    return [outcomes[index * trials : (index + 1) * trials] for index in range(len(points))]


def run_experiment(
    kind: str,
    trial: TrialFunction,
    points: Sequence[PointKey],
    trials: int,
    seed: int,
    config: dict,
    batches: int = DEFAULT_BATCHES,
    workers: Optional[int] = None,
) -> ExperimentRecord:
    """Run `trials` trials per point and aggregate every reported size.

    A trial returns {size: value}; one task may report several sizes, as the
    entropy experiment does for every checkpointed round count.
    """
    if trials < 1:
        raise ConfigError(f"At least one trial is required, got {trials}")
    record = ExperimentRecord(kind=kind, seed=seed, config=config)
    grouped = run_trials(trial, points, trials, seed, workers=workers)
    for (p, _), outcomes in zip(points, grouped):
        values: Dict[int, List[float]] = {}
        for outcome in outcomes:
            for size, value in outcome.items():
                values.setdefault(int(size), []).append(float(value))
        for size in sorted(values):
            samples = values[size]
            point = ExperimentPoint(
                p=float(p),
                size=size,
                estimate=float(np.mean(samples)),
                stderr=standard_error(samples),
                trials=len(samples),
                batches=batch_means(samples, batches),
            )
            record.add_point(point)
            logger.info(
                "%s p=%g size=%d: %.6g +/- %.2g over %d trials",
                kind,
                point.p,
                size,
                point.estimate,
                point.stderr,
                point.trials,
            )
    return record
