"""Counter-based random substreams.

Every trial draws from its own Philox stream keyed by (seed, *key), so trials can be
run in any order or on any worker and still reproduce the same samples.
"""
from typing import Tuple

import numpy as np


def make_generator(seed: int, *key: int) -> np.random.Generator:
    """Philox generator for the substream (seed, *key)."""
    sequence = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.Philox(sequence))


def substream_key(point_index: int, trial_index: int) -> Tuple[int, int]:
    """The spawn key of one Monte Carlo trial."""
    return (point_index, trial_index)
