"""All random-circuit-codes errors."""


class Error(Exception):
    """The base exception for random-circuit-codes."""


class RandomCircuitCodeError(Error):
    """Random circuit code related exception"""


class PauliSizeError(RandomCircuitCodeError):
    """Operators, tableaus or states act on different numbers of qubits"""


class PhaseError(RandomCircuitCodeError):
    """A Hermitian operator with a real phase was required"""


class AnticommutingGeneratorsError(RandomCircuitCodeError):
    """Stabilizer generators do not mutually commute"""


class InconsistentGeneratorsError(RandomCircuitCodeError):
    """Stabilizer generators produce -I"""


class CircuitError(RandomCircuitCodeError):
    """Invalid circuit size or gate placement"""


class RateError(RandomCircuitCodeError):
    """The code rate cannot be realized on the requested qubits"""


class CodeError(RandomCircuitCodeError):
    """Invalid code for the requested operation"""


class ContractionError(RandomCircuitCodeError):
    """Tensor network contraction failed"""


class ModelError(RandomCircuitCodeError):
    """Spin model parameters out of range"""


class ProtocolError(RandomCircuitCodeError):
    """Invalid fault-tolerant protocol parameters"""


class ErasureDecodingError(RandomCircuitCodeError):
    """The erasure decoding linear system is inconsistent"""


class FitError(RandomCircuitCodeError):
    """Scaling data cannot be fitted"""


class HashingBoundError(RandomCircuitCodeError):
    """The hashing equation has no root for the requested rate"""


class ConfigError(RandomCircuitCodeError):
    """Invalid experiment configuration"""


class RecordParseError(RandomCircuitCodeError):
    """Stored experiment record could not be parsed"""
