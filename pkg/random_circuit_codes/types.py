"""Type aliases used throughout random-circuit-codes."""
from pathlib import Path
from typing import Tuple, Union

PathLike = Union[str, Path]
Window = Tuple[float, float]
PointKey = Tuple[float, int]
