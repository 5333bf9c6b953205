"""Finite-size scaling collapse with jackknife error bars.

Estimates are fitted to A + B x + C x^2 with x = size^lambda (p - p_c). The outer
search runs over (p_c, lambda); A, B and C come from linear least squares. Two
sizes already pin down p_c, where their curves cross, and lambda, from the ratio
of their slopes.
"""
from dataclasses import dataclass, field
import logging
from typing import List, Optional, Tuple

import numpy as np
from scipy import optimize

from random_circuit_codes.analysis.records import ExperimentRecord
from random_circuit_codes.errors import FitError
from random_circuit_codes.types import Window

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
EXPONENT_RANGE = (0.1, 3.0)
GRID_POINTS = (41, 30)


@dataclass
class ScalingFit:
    p_c: float
    exponent: float
    a: float
    b: float
    c: float
    window: Window
    residual: float
    sigma_pc: Optional[float] = None
    collapse: List[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "p_c": self.p_c,
            "lambda": self.exponent,
            "A": self.a,
            "B": self.b,
            "C": self.c,
            "window": list(self.window),
            "residual": self.residual,
            "sigma_p_c": self.sigma_pc,
            "collapse": self.collapse,
        }

    @classmethod
    def from_dict(cls, values: dict) -> "ScalingFit":
        try:
            return cls(
                p_c=float(values["p_c"]),
                exponent=float(values["lambda"]),
                a=float(values["A"]),
                b=float(values["B"]),
                c=float(values["C"]),
                window=tuple(values["window"]),
                residual=float(values["residual"]),
                sigma_pc=values.get("sigma_p_c"),
                collapse=list(values.get("collapse", [])),
            )
        except (KeyError, TypeError, ValueError) as err:
            raise FitError(f"Malformed fit: {err}") from err


def _scaling_variable(ps, sizes, p_c, exponent):
    return np.power(sizes, exponent) * (ps - p_c)


def _least_squares(ps, sizes, values, p_c, exponent) -> Tuple[np.ndarray, float]:
    x = _scaling_variable(ps, sizes, p_c, exponent)
    design = np.column_stack([np.ones_like(x), x, x * x])
    coefficients, *_ = np.linalg.lstsq(design, values, rcond=None)
    residual = float(np.mean((design @ coefficients - values) ** 2))
    return coefficients, residual


def _objective(params, ps, sizes, values) -> float:
    p_c, exponent = params
    if not EXPONENT_RANGE[0] <= exponent <= EXPONENT_RANGE[1]:
        return np.inf
    return _least_squares(ps, sizes, values, p_c, exponent)[1]


def _check_data(ps, sizes) -> None:
    if np.unique(sizes).size < 2:
        raise FitError(f"Scaling fits need at least 2 distinct sizes, got {sorted(set(sizes.tolist()))}")
    if np.unique(ps).size < 4:
        raise FitError(f"Scaling fits need at least 4 error rates, got {sorted(set(ps.tolist()))}")


def fit_arrays(ps, sizes, values, window: Window) -> ScalingFit:
    """Fit the ansatz to flat arrays of (p, size, estimate)."""
    ps = np.asarray(ps, dtype=float)
    sizes = np.asarray(sizes, dtype=float)
    values = np.asarray(values, dtype=float)
    _check_data(ps, sizes)
    best = None
    for p_c in np.linspace(window[0], window[1], GRID_POINTS[0]):
        for exponent in np.linspace(*EXPONENT_RANGE, GRID_POINTS[1]):
            score = _objective((p_c, exponent), ps, sizes, values)
            if best is None or score < best[0]:
                best = (score, p_c, exponent)
    refined = optimize.minimize(
        _objective,
        x0=np.array(best[1:]),
        args=(ps, sizes, values),
        method="Nelder-Mead",
        options={"xatol": 1e-8, "fatol": 1e-16, "maxiter": 4000},
    )
    p_c, exponent = (float(v) for v in refined.x)
    if refined.fun > best[0]:
        p_c, exponent = float(best[1]), float(best[2])
    (a, b, c), residual = _least_squares(ps, sizes, values, p_c, exponent)
    x = _scaling_variable(ps, sizes, p_c, exponent)
    collapse = [
        {"p": float(p), "size": int(size), "estimate": float(value), "x": float(coordinate)}
        for p, size, value, coordinate in zip(ps, sizes, values, x)
    ]
    return ScalingFit(p_c, exponent, float(a), float(b), float(c), tuple(window), residual, collapse=collapse)


def _window(record: ExperimentRecord, window: Optional[Window]) -> Window:
    if window is not None:
        return (float(window[0]), float(window[1]))
    p_values = record.p_values
    if not p_values:
        raise FitError("The record has no points")
    return (p_values[0], p_values[-1])


def fit_scaling_ansatz(record: ExperimentRecord, window: Optional[Window] = None) -> ScalingFit:
    """Collapse the record's estimates inside `window`, by default all of p."""
    window = _window(record, window)
    points = record.select(window)
    fit = fit_arrays(
        [point.p for point in points],
        [point.size for point in points],
        [point.estimate for point in points],
        window,
    )
    logger.info("Fitted p_c=%.5f lambda=%.4f on [%g, %g]", fit.p_c, fit.exponent, *window)
    return fit


def jackknife_pc(record: ExperimentRecord, window: Optional[Window] = None) -> float:
    """Leave-one-batch-out standard deviation of the fitted p_c."""
    window = _window(record, window)
    points = record.select(window)
    if not points:
        raise FitError(f"No points inside the window {window}")
    batches = min(len(point.batches) for point in points)
    if batches < 2:
        raise FitError(f"Jackknife needs at least 2 batches, got {batches}")
    ps = [point.p for point in points]
    sizes = [point.size for point in points]
    table = np.array([point.batches[:batches] for point in points])
    estimates = []
    for left_out in range(batches):
        values = np.delete(table, left_out, axis=1).mean(axis=1)
        estimates.append(fit_arrays(ps, sizes, values, window).p_c)
    estimates = np.array(estimates)
    variance = (batches - 1) / batches * np.sum((estimates - estimates.mean()) ** 2)
    return float(np.sqrt(variance))


def truncate_window(record: ExperimentRecord, window: Optional[Window] = None, factor: float = 2.0) -> Window:
    """Drop extreme error rates while including them inflates sigma(p_c) by more than `factor`.

    The lowest and highest p are tried in turn and the one whose removal gives the
    smaller jackknife deviation is dropped; at least 4 error rates always remain.
    """
    window = _window(record, window)
    p_values = [p for p in record.p_values if window[0] <= p <= window[1]]
    sigma = jackknife_pc(record, window)
    while len(p_values) > 4 and sigma > 0:
        candidates = [(p_values[1], p_values[-1]), (p_values[0], p_values[-2])]
        scored = [(jackknife_pc(record, candidate), candidate) for candidate in candidates]
        best_sigma, best_window = min(scored, key=lambda item: item[0])
        if sigma <= factor * best_sigma:
            break
        logger.info("Truncated window to [%g, %g], sigma(p_c) %.3g -> %.3g", *best_window, sigma, best_sigma)
        sigma = best_sigma
        window = best_window
        p_values = [p for p in p_values if window[0] <= p <= window[1]]
    return window
