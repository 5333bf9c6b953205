"""Brickwork random-circuit codes."""
from random_circuit_codes.codes.circuit import (
    Boundary,
    BrickworkCircuit,
    brick_pairs,
    build_brickwork_circuit,
)
from random_circuit_codes.codes.code import (
    CircuitCode,
    canonical_error,
    css_correction,
    derive_code,
    generate_code,
    logical_failures,
    syndrome,
)
from random_circuit_codes.codes.descriptor import CodeDescriptor, dump_generators, load_generator_rows
from random_circuit_codes.codes.layout import InputLayout, Role, assign_inputs
