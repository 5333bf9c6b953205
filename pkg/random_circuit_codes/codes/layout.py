"""Roles of the encoding circuit's input qubits."""
import enum
from fractions import Fraction
import math
from typing import Optional, Sequence, Tuple, Union

from random_circuit_codes.codes.circuit import Boundary
from random_circuit_codes.errors import RateError
from random_circuit_codes.utils import parse_rate


class Role(str, enum.Enum):
    Z_STABILIZER = "0"
    X_STABILIZER = "+"
    LOGICAL = "L"


class InputLayout:
    """Per-input-qubit roles; the bulk sits between `padding` stabilizer roles on each side."""

    def __init__(self, roles: Sequence[Role], padding: int = 0):
        self.roles: Tuple[Role, ...] = tuple(Role(role) for role in roles)
        self.padding = padding

    @classmethod
    def from_pattern(cls, pattern: str, padding: int = 0) -> "InputLayout":
        """Layout from a string such as '+L0+L0'."""
        return cls([Role(char) for char in pattern], padding=padding)

    @property
    def n(self) -> int:
        return len(self.roles)

    @property
    def k(self) -> int:
        return sum(role == Role.LOGICAL for role in self.roles)

    @property
    def logical_inputs(self) -> Tuple[int, ...]:
        return tuple(i for i, role in enumerate(self.roles) if role == Role.LOGICAL)

    @property
    def stabilizer_inputs(self) -> Tuple[int, ...]:
        return tuple(i for i, role in enumerate(self.roles) if role != Role.LOGICAL)

    @property
    def is_css(self) -> bool:
        return Role.X_STABILIZER in self.roles

    @property
    def pattern(self) -> str:
        return "".join(role.value for role in self.roles)

    def __eq__(self, other) -> bool:
        if not isinstance(other, InputLayout):
            return NotImplemented
        return self.roles == other.roles and self.padding == other.padding

    def __repr__(self) -> str:
        return f"InputLayout({self.pattern!r}, padding={self.padding})"


def logical_positions(n: int, k: int) -> Tuple[int, ...]:
    """Evenly spaced positions floor((j + 1/2) n / k) for j < k."""
    return tuple(math.floor((Fraction(2 * j + 1, 2) * n) / k) for j in range(k))


def assign_inputs(
    n: int,
    rate: Union[str, float, Fraction],
    d: int,
    boundary: Boundary,
    css: bool,
    padding: Optional[int] = None,
) -> InputLayout:
    """Roles for a code with `n` bulk qubits at the given rate.

    Open boundaries get `padding` (default 2d) extra stabilizer roles on each side.
    CSS layouts alternate x- and z-stabilizer roles between the logicals, which gives
    the pattern (+, L, 0) at rate 1/3.
    """
    rate = parse_rate(rate)
    k = math.floor(rate * n + Fraction(1, 2))
    if k < 1 or k >= n:
        raise RateError(f"Rate {rate} gives {k} logical qubits on {n} qubits")
    boundary = Boundary(boundary)
    if padding is None:
        padding = 2 * d if boundary == Boundary.OPEN else 0
    logicals = set(logical_positions(n, k))
    stabilizer_roles = (Role.X_STABILIZER, Role.Z_STABILIZER) if css else (Role.Z_STABILIZER,)
    bulk = []
    count = 0
    for position in range(n):
        if position in logicals:
            bulk.append(Role.LOGICAL)
        else:
            bulk.append(stabilizer_roles[count % len(stabilizer_roles)])
            count += 1
    pad = [stabilizer_roles[i % len(stabilizer_roles)] for i in range(padding)]
    return InputLayout(pad + bulk + pad[::-1], padding=padding)
