"""Random-circuit-codes is a workbench for low-depth random circuit quantum codes.

It generates brickwork encoding circuits, decodes them with statistical mechanics
tensor networks, simulates a fault-tolerant distillation and Steane error correction
protocol under erasure noise, decodes that protocol as a spacetime code and
estimates thresholds from finite-size scaling.

Example
 `rcc code-capacity -n 50 --rate 1/4 -d 4 -d 5 -p 0.1 -p 0.12 -p 0.14 --trials 1000`
  samples 1000 random codes per point and writes a record, a fit and a replay manifest.
"""
import logging
from pkg_resources import get_distribution, DistributionNotFound

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s [%(levelname)s] Random-circuit-codes: %(message)s",
    datefmt="%m-%d %H:%M",
)


try:
    __version__ = get_distribution(__name__).version
except DistributionNotFound:
    __version__ = None
