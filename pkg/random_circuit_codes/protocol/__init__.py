"""Distillation and Steane error correction under circuit-level erasure noise."""
from random_circuit_codes.protocol.distill import (
    CheckRecord,
    ProtocolState,
    check_kind,
    combine_frame,
    distill,
    readout_syndrome,
)
from random_circuit_codes.protocol.erasure import ErasureRecord, ErasureSampler
from random_circuit_codes.protocol.experiments import (
    checkpoint_rounds,
    entropy_density_experiment,
    entropy_trial,
    measure_code_stabilizers,
    mutual_info_experiment,
    mutual_info_trial,
    prepare_encoded_bell_pairs,
)
from random_circuit_codes.protocol.gadgets import (
    BASES,
    bit_flip_check,
    block_labels,
    encoded_input_labels,
    phase_flip_check,
    prepare_noisy_encoded_state,
)
from random_circuit_codes.protocol.steane import STEANE_LEVELS, SteaneTranscript, round_span, steane_ec_round
