"""Entropy density and mutual information experiments under erasure noise."""
from functools import partial
import logging
from typing import Dict, List, Optional, Sequence

import numpy as np

from random_circuit_codes.analysis import DEFAULT_BATCHES, ExperimentRecord, run_experiment
from random_circuit_codes.codes import Boundary, CircuitCode, Role, generate_code
from random_circuit_codes.errors import ProtocolError
from random_circuit_codes.pauli import PauliOperator
from random_circuit_codes.protocol.distill import distill
from random_circuit_codes.protocol.erasure import ErasureSampler
from random_circuit_codes.protocol.steane import round_span, steane_ec_round
from random_circuit_codes.stabilizer import MixedStabilizerState, mutual_information

logger = logging.getLogger(__name__)


def checkpoint_rounds(q_max: int) -> List[int]:
    """Round counts reported by the entropy experiment: 2, 4, ..., q_max."""
    if q_max < 2:
        raise ProtocolError(f"q_max must be at least 2, got {q_max}")
    return list(range(2, q_max + 1, 2))


def entropy_trial(
    n: int, rate: str, d: int, p: float, q_max: int, rng: np.random.Generator
) -> Dict[int, float]:
    """Survivor entropy density after every checkpointed round of one 2^q_max tree."""
    rounds = checkpoint_rounds(q_max)
    code = generate_code(n, rate, d, Boundary.PERIODIC, css=True, rng=rng)
    _, protocol = distill(code, "zero", q_max, p, rng, checkpoints=rounds)
    return {q: protocol.checkpoints[q] / code.n for q in rounds}


def entropy_density_experiment(
    n: int,
    rate: str,
    d: int,
    p_grid: Sequence[float],
    q_max: int,
    trials: int,
    seed: int,
    batches: int = DEFAULT_BATCHES,
    workers: Optional[int] = None,
    config: Optional[dict] = None,
) -> ExperimentRecord:
    """Mean entropy density of distilled |0> ancillas for q = 2, 4, ..., q_max."""
    checkpoint_rounds(q_max)
    config = config or {
        "kind": "entropy",
        "n": n,
        "rate": str(rate),
        "depths": [d],
        "q_max": q_max,
        "p_grid": list(p_grid),
        "trials": trials,
        "seed": seed,
    }
    return run_experiment(
        "entropy",
        partial(entropy_trial, n, str(rate), d),
        [(p, q_max) for p in p_grid],
        trials,
        seed,
        config,
        batches=batches,
        workers=workers,
    )


def prepare_encoded_bell_pairs(code: CircuitCode) -> MixedStabilizerState:
    """k encoded EPR pairs across blocks A (qubits 0..n-1) and B (n..2n-1), noiselessly."""
    n = code.n
    generators = []
    for qubit in code.layout.stabilizer_inputs:
        label = "X" if code.layout.roles[qubit] == Role.X_STABILIZER else "Z"
        generators.append(PauliOperator.single(2 * n, qubit, label))
        generators.append(PauliOperator.single(2 * n, n + qubit, label))
    for qubit in code.layout.logical_inputs:
        generators.append(PauliOperator.from_sparse(2 * n, (qubit, n + qubit), "XX"))
        generators.append(PauliOperator.from_sparse(2 * n, (qubit, n + qubit), "ZZ"))
    state = MixedStabilizerState(2 * n, generators)
    for layer in code.circuit.layers:
        state.apply_layer(layer)
        state.apply_layer(layer.shifted(n))
    return state


def measure_code_stabilizers(
    state: MixedStabilizerState, code: CircuitCode, offset: int, rng: np.random.Generator
) -> np.ndarray:
    """Perfect measurement of every stabilizer on the block starting at `offset`."""
    qubits = list(range(offset, offset + code.n))
    return np.array(
        [state.measure_pauli(stabilizer.embedded(state.n, qubits), rng) == -1 for stabilizer in code.stabilizers],
        dtype=np.uint8,
    )


def mutual_info_trial(
    n: int,
    rate: str,
    rounds: int,
    q: Optional[int],
    p: float,
    d: int,
    rng: np.random.Generator,
) -> Dict[int, float]:
    """I(A:B)/k after `rounds` back to back noisy Steane rounds on block A; q defaults to d."""
    q = d if q is None else q
    code = generate_code(n, rate, d, Boundary.PERIODIC, css=True, rng=rng)
    state = prepare_encoded_bell_pairs(code)
    sampler = ErasureSampler(p, rng)
    data_qubits = np.arange(code.n)
    ancilla_blocks = 2 * 2 ** q
    for index in range(rounds):
        state, _ = steane_ec_round(
            state,
            code,
            p,
            rng,
            q=q,
            sampler=sampler,
            level=round_span(d, q) * index + d + 2 * q,
            data_qubits=data_qubits,
            first_ancilla_block=2 + index * ancilla_blocks,
        )
    measure_code_stabilizers(state, code, 0, rng)
    measure_code_stabilizers(state, code, code.n, rng)
    information = mutual_information(state, range(code.n), range(code.n, 2 * code.n))
    logger.debug("I(A:B)=%d with %d erasures", information, sampler.record.count)
    return {d: information / code.k}


def mutual_info_experiment(
    n: int,
    rate: str,
    depths: Sequence[int],
    p_grid: Sequence[float],
    rounds: int,
    trials: int,
    seed: int,
    q: Optional[int] = None,
    batches: int = DEFAULT_BATCHES,
    workers: Optional[int] = None,
    config: Optional[dict] = None,
) -> ExperimentRecord:
    """Mean I(A:B)/k of encoded EPR pairs for every (depth, p) pair."""
    if rounds < 0:
        raise ProtocolError(f"Round count must be nonnegative, got {rounds}")
    config = config or {
        "kind": "mutual-info",
        "n": n,
        "rate": str(rate),
        "depths": list(depths),
        "q": q,
        "rounds": rounds,
        "p_grid": list(p_grid),
        "trials": trials,
        "seed": seed,
    }
    return run_experiment(
        "mutual-info",
        partial(mutual_info_trial, n, str(rate), rounds, q),
        [(p, d) for d in depths for p in p_grid],
        trials,
        seed,
        config,
        batches=batches,
        workers=workers,
    )
