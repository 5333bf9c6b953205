"""JSON descriptors that regenerate a code from its seed."""
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional

import numpy as np

from random_circuit_codes.codes.circuit import Boundary
from random_circuit_codes.codes.code import CircuitCode, generate_code
from random_circuit_codes.rng import make_generator


@dataclass(frozen=True)
class CodeDescriptor:
    """Everything needed to rebuild a code deterministically."""

    n: int
    d: int
    boundary: str
    css: bool
    seed: int
    rate: str
    padding: Optional[int] = None

    def build(self) -> CircuitCode:
        return generate_code(
            self.n,
            self.rate,
            self.d,
            Boundary(self.boundary),
            self.css,
            make_generator(self.seed),
            padding=self.padding,
        )

    def to_dict(self) -> Dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict) -> "CodeDescriptor":
        return cls(**data)


def _hex_row(x: np.ndarray, z: np.ndarray) -> str:
    return np.packbits(np.concatenate([x, z])).tobytes().hex()


def dump_generators(code: CircuitCode) -> Dict[str, List[str]]:
    """Hex-packed (x | z) rows of the stabilizers and logicals."""
    return {
        "n": code.n,
        "stabilizers": [_hex_row(s.x, s.z) for s in code.stabilizers],
        "logical_x": [_hex_row(op.x, op.z) for op in code.logical_x],
        "logical_z": [_hex_row(op.x, op.z) for op in code.logical_z],
    }


def load_generator_rows(hex_rows: List[str], n: int) -> np.ndarray:
    """Inverse of the hex packing: an (r, 2n) bit matrix."""
    rows = [np.unpackbits(np.frombuffer(bytes.fromhex(row), dtype=np.uint8))[: 2 * n] for row in hex_rows]
    if not rows:
        return np.zeros((0, 2 * n), dtype=np.uint8)
    return np.array(rows, dtype=np.uint8)
