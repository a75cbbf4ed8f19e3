"""Deterministic, seedable statevector simulation of circuits.

States are dense complex128 vectors of length ``2**num_qubits``; basis index
``b`` encodes qubit ``q`` in bit position ``q`` (qubit 0 is the least
significant bit of the index). Externally visible bitstrings instead follow
the circuit's declared qubit order: character ``p`` of an input assignment
or output string refers to ``input_qubits[p]`` / ``output_qubits[p]``.

Measurement is terminal only, so sampling does not re-run the circuit shot
by shot: the final statevector is computed once and shots are drawn from the
exact marginal distribution over the output qubits, which is observationally
identical and far cheaper.
"""

from __future__ import annotations

import math

import numpy as np

from .qasm import Circuit, Gate, GateKind

__all__ = [
    "MAX_QUBITS",
    "init_state",
    "apply_gate",
    "final_state",
    "exact_distribution",
    "run_shots",
    "inverse_gate",
    "gate_matrix",
]

# Dense statevector cap: 2**24 complex128 amplitudes is ~256 MiB.
MAX_QUBITS = 24

_SEED_MASK = (1 << 64) - 1

_INV_SQRT2 = 1.0 / math.sqrt(2.0)

_FIXED_MATRICES: dict[GateKind, np.ndarray] = {
    GateKind.I: np.eye(2, dtype=complex),
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    GateKind.Z: np.array([[1, 0], [0, -1]], dtype=complex),
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=complex) * _INV_SQRT2,
    GateKind.S: np.array([[1, 0], [0, 1j]], dtype=complex),
    GateKind.Sdg: np.array([[1, 0], [0, -1j]], dtype=complex),
    GateKind.T: np.array([[1, 0], [0, np.exp(1j * math.pi / 4)]], dtype=complex),
    GateKind.Tdg: np.array([[1, 0], [0, np.exp(-1j * math.pi / 4)]], dtype=complex),
    GateKind.CX: np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    GateKind.CZ: np.diag([1, 1, 1, -1]).astype(complex),
    GateKind.SWAP: np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    ),
}

_CCX = np.eye(8, dtype=complex)
_CCX[[6, 7]] = _CCX[[7, 6]]
_FIXED_MATRICES[GateKind.CCX] = _CCX


def gate_matrix(gate: Gate) -> np.ndarray:
    """Unitary of a gate; operand 0 is the most significant bit of the matrix index."""
    if gate.kind is GateKind.RX:
        t = gate.angle / 2
        return np.array(
            [[math.cos(t), -1j * math.sin(t)], [-1j * math.sin(t), math.cos(t)]],
            dtype=complex,
        )
    if gate.kind is GateKind.RY:
        t = gate.angle / 2
        return np.array(
            [[math.cos(t), -math.sin(t)], [math.sin(t), math.cos(t)]], dtype=complex
        )
    if gate.kind is GateKind.RZ:
        t = gate.angle / 2
        return np.diag([np.exp(-1j * t), np.exp(1j * t)]).astype(complex)
    return _FIXED_MATRICES[gate.kind]


def init_state(circuit: Circuit, assignment: str) -> np.ndarray:
    """Computational basis state with input qubits set per the assignment.

    Character ``p`` of the assignment initializes ``input_qubits[p]``; all
    other qubits start in |0>.
    """
    _check_cap(circuit.num_qubits)
    if len(assignment) != len(circuit.input_qubits):
        raise ValueError(
            f"assignment {assignment!r} has length {len(assignment)}, "
            f"expected {len(circuit.input_qubits)}"
        )
    index = 0
    for bit, qubit in zip(assignment, circuit.input_qubits):
        if bit == "1":
            index |= 1 << qubit
        elif bit != "0":
            raise ValueError(f"assignment must be over {{0,1}}, got {assignment!r}")
    state = np.zeros(1 << circuit.num_qubits, dtype=complex)
    state[index] = 1.0
    return state


def apply_gate(state: np.ndarray, gate: Gate) -> np.ndarray:
    """Return U_gate @ state (the input array is not modified)."""
    n = _num_qubits_of(state)
    for q in gate.qubits:
        if not 0 <= q < n:
            raise ValueError(f"operand {q} out of range for {n}-qubit state")
    k = len(gate.qubits)
    # Qubit q lives on tensor axis n-1-q once the vector is reshaped to [2]*n.
    axes = [n - 1 - q for q in gate.qubits]
    u = gate_matrix(gate).reshape([2] * (2 * k))
    psi = state.reshape([2] * n)
    psi = np.moveaxis(psi, axes, range(k))
    psi = np.tensordot(u, psi, axes=(list(range(k, 2 * k)), list(range(k))))
    psi = np.moveaxis(psi, range(k), axes)
    return np.ascontiguousarray(psi).reshape(-1)


def inverse_gate(gate: Gate) -> Gate:
    """Gate whose unitary is the adjoint of the argument's."""
    swap = {
        GateKind.S: GateKind.Sdg,
        GateKind.Sdg: GateKind.S,
        GateKind.T: GateKind.Tdg,
        GateKind.Tdg: GateKind.T,
    }
    if gate.kind in swap:
        return Gate(swap[gate.kind], gate.qubits)
    if gate.kind.takes_angle:
        return Gate(gate.kind, gate.qubits, -gate.angle)
    return gate  # remaining kinds are self-inverse


def final_state(circuit: Circuit, assignment: str) -> np.ndarray:
    """Statevector after applying every gate to the initialized state."""
    state = init_state(circuit, assignment)
    for gate in circuit.gates:
        state = apply_gate(state, gate)
    return state


def exact_distribution(circuit: Circuit, assignment: str) -> dict[str, float]:
    """Exact output distribution: bitstring over the output qubits -> probability.

    Probabilities are marginals over the unmeasured qubits; entries below
    1e-12 are omitted. Values sum to 1 within 1e-9.
    """
    state = final_state(circuit, assignment)
    n = circuit.num_qubits
    width = len(circuit.output_qubits)
    probs = np.abs(state.reshape([2] * n)) ** 2
    # Bring output axes to the front in declaration order, then marginalize
    # the rest; flattening then makes output_qubits[0] the most significant
    # bit, i.e. the leftmost bitstring character.
    out_axes = [n - 1 - q for q in circuit.output_qubits]
    probs = np.moveaxis(probs, out_axes, range(width))
    if n > width:
        probs = probs.sum(axis=tuple(range(width, n)))
    flat = probs.reshape(-1)
    return {
        format(idx, f"0{width}b"): float(p)
        for idx, p in enumerate(flat)
        if p >= 1e-12
    }


def run_shots(circuit: Circuit, assignment: str, shots: int, seed: int) -> dict[str, int]:
    """Histogram of ``shots`` independent samples from the exact distribution.

    Deterministic for a fixed (circuit, assignment, shots, seed); counts sum
    to ``shots`` and zero-count outputs are omitted.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    dist = exact_distribution(circuit, assignment)
    outputs = sorted(dist)
    pvals = np.array([dist[o] for o in outputs])
    pvals = np.clip(pvals, 0.0, None)
    pvals /= pvals.sum()
    rng = np.random.Generator(np.random.PCG64(seed & _SEED_MASK))
    counts = rng.multinomial(shots, pvals)
    return {o: int(c) for o, c in zip(outputs, counts) if c > 0}


def _num_qubits_of(state: np.ndarray) -> int:
    n = int(state.shape[0]).bit_length() - 1
    if state.ndim != 1 or state.shape[0] != 1 << n:
        raise ValueError(f"state length {state.shape} is not a power of two")
    return n


def _check_cap(num_qubits: int) -> None:
    if num_qubits > MAX_QUBITS:
        raise ValueError(
            f"circuit has {num_qubits} qubits; dense simulation is capped at {MAX_QUBITS}"
        )
