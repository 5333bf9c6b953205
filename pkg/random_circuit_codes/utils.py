"""Small helpers shared by the experiments."""
from fractions import Fraction
from typing import Iterable, List, Union

import numpy as np

from random_circuit_codes.errors import RateError


def parse_rate(rate: Union[str, float, Fraction]) -> Fraction:
    """Parse a code rate given as '1/3', 0.25 or a Fraction."""
    try:
        value = Fraction(rate).limit_denominator(10_000)
    except (ValueError, ZeroDivisionError) as err:
        raise RateError(f"Cannot parse rate {rate!r}") from err
    if not 0 < value < 1:
        raise RateError(f"Rate must lie in (0, 1), got {rate!r}")
    return value


def standard_error(values: Iterable[float]) -> float:
    """Sample standard deviation divided by the square root of the sample count."""
    values = np.asarray(list(values), dtype=float)
    if values.size < 2:
        return 0.0
    return float(values.std(ddof=1) / np.sqrt(values.size))


def batch_means(values: Iterable[float], batches: int) -> List[float]:
    """Means of contiguous, nearly equal batches of the trial values."""
    values = np.asarray(list(values), dtype=float)
    batches = max(1, min(batches, values.size))
    return [float(chunk.mean()) for chunk in np.array_split(values, batches)]
