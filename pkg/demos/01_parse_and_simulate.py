"""Parse a quantum program and simulate it: exact distributions and shots."""

from qcomb import corpus, parse_circuit, serialize_circuit
from qcomb.sim import exact_distribution, final_state, run_shots

# The two-qubit entangling program. The pragma comment declares which qubits
# are inputs; the measure statements declare the outputs.
source = corpus.source("entangler")
print(source)

circuit = parse_circuit(source)
print(f"qubits: {circuit.num_qubits}")
print(f"gates:  {[g.kind.name for g in circuit.gates]}")
print(f"inputs: {circuit.input_qubits}, outputs: {circuit.output_qubits}")

# Starting from |00>, the final state is the Bell pair (|00> + |11>)/sqrt(2).
state = final_state(circuit, "00")
print("\nfinal statevector:", [f"{a:.4f}" for a in state])

# Exact output distribution: each output bitstring with its probability.
for assignment in ("00", "01", "10", "11"):
    print(f"input {assignment} ->", exact_distribution(circuit, assignment))

# Sampling is seeded and reproducible: same seed, same histogram.
print("\n200 shots, seed 7: ", run_shots(circuit, "00", 200, seed=7))
print("200 shots, seed 7: ", run_shots(circuit, "00", 200, seed=7))
print("200 shots, seed 8: ", run_shots(circuit, "00", 200, seed=8))

# Circuits round-trip through the textual format losslessly.
assert parse_circuit(serialize_circuit(circuit)) == circuit
print("\nround-trip OK")
