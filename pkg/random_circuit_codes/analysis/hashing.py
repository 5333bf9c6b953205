"""Hashing bound of the depolarizing channel."""
import math

from scipy import optimize

from random_circuit_codes.errors import HashingBoundError

MAX_DEPOLARIZING = 0.75


def binary_entropy(p: float) -> float:
    if p in (0.0, 1.0):
        return 0.0
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


def hashing_rate(p: float) -> float:
    """1 - h2(p) - p log2 3."""
    return 1 - binary_entropy(p) - p * math.log2(3)


def hashing_bound(rate: float, xtol: float = 1e-9) -> float:
    """Depolarizing rate at which the hashing rate drops to `rate`."""
    rate = float(rate)
    if not 0 <= rate < 1:
        raise HashingBoundError(f"Rate must lie in [0, 1), got {rate}")
    low, high = 1e-15, MAX_DEPOLARIZING
    if (hashing_rate(low) - rate) * (hashing_rate(high) - rate) > 0:
        raise HashingBoundError(f"No hashing bound root for rate {rate}")
    return float(optimize.bisect(lambda p: hashing_rate(p) - rate, low, high, xtol=xtol))
