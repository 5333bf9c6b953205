"""Spin-model decoders contracted as lattice tensor networks."""
from random_circuit_codes.statmech.decoders import (
    LOGICAL_CLASSES,
    class_free_energies,
    logical_representative,
    marginal_correction,
    marginal_decode,
    maximum_weight_decode,
    minimum_weight_decode,
    minimum_weight_ground_state,
)
from random_circuit_codes.statmech.model import (
    SpinMode,
    SpinModel,
    build_spin_model,
    nishimori_beta,
    spin_generators,
    term_signs,
)
from random_circuit_codes.statmech.network import (
    LatticeTensorNetwork,
    NetworkColumn,
    Semiring,
    boundary_tensor,
    build_tensor_network,
    chain_tensor,
    contract_partition,
    contract_tropical,
)
