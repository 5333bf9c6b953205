"""Thresholds across code rates next to the hashing bound."""
from dataclasses import dataclass
import logging
from typing import List, Optional, Sequence

from random_circuit_codes.analysis.hashing import hashing_bound
from random_circuit_codes.analysis.records import ExperimentRecord
from random_circuit_codes.analysis.scaling import fit_scaling_ansatz, jackknife_pc
from random_circuit_codes.types import Window
from random_circuit_codes.utils import parse_rate

logger = logging.getLogger(__name__)

SUMMARY_HEADER = ("rate", "p_c", "sigma_p_c", "p_hashing")


@dataclass
class ThresholdRow:
    rate: str
    p_c: float
    sigma_pc: float
    p_hashing: float

    def csv_row(self) -> List[str]:
        return [self.rate, repr(self.p_c), repr(self.sigma_pc), repr(self.p_hashing)]


def threshold_summary(records: Sequence[ExperimentRecord], window: Optional[Window] = None) -> List[ThresholdRow]:
    """One row per record, sorted by rate: fitted p_c, its jackknife error and the hashing bound."""
    rows = []
    for record in records:
        rate = parse_rate(record.config["rate"])
        fit = fit_scaling_ansatz(record, window)
        sigma = jackknife_pc(record, fit.window)
        rows.append(ThresholdRow(str(rate), fit.p_c, sigma, hashing_bound(float(rate))))
    return sorted(rows, key=lambda row: parse_rate(row.rate))
