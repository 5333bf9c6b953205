"""Spacetime codes of the fault-tolerant protocol and their erasure decoder."""
from random_circuit_codes.spacetime.circuit import (
    FaultOperator,
    LocatedCircuit,
    MeasurementEvent,
    back_cumulant,
    cumulant,
)
from random_circuit_codes.spacetime.decoder import decode_unknowns, erasure_decode, residual_fails_packed
from random_circuit_codes.spacetime.experiment import (
    DEFAULT_EC_ROUNDS,
    decode_experiment,
    decode_trial,
    sample_erasure_paulis,
    sample_erasures,
)
from random_circuit_codes.spacetime.frames import FaultResponse, propagate_unit_faults
from random_circuit_codes.spacetime.outcome import (
    SpacetimeCode,
    build_outcome_code,
    measurement_flips,
    residual_fails,
    spacetime_stabilizers,
    spacetime_syndrome,
)
from random_circuit_codes.spacetime.schedule import ProtocolCircuit, Readout, build_protocol_circuit
from random_circuit_codes.spacetime.simulate import simulate_outcomes
