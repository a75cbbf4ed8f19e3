"""Parser, serializer, and validator tests, including the round-trip property."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcomb.qasm import (
    Circuit,
    Gate,
    GateKind,
    QasmError,
    parse_circuit,
    serialize_circuit,
    validate,
)

ENTANGLER = """\
OPENQASM 2.0;
include "qelib1.inc";
// qucat inputs: 0,1
qreg q[2];
creg c[2];
h q[0];
cx q[0],q[1];
measure q[0] -> c[0];
measure q[1] -> c[1];
"""


class TestGateType:
    def test_arity_mismatch_rejected(self):
        with pytest.raises(ValueError, match="expects 2 operand"):
            Gate(GateKind.CX, (0,))

    def test_duplicate_operands_rejected(self):
        with pytest.raises(ValueError, match="duplicate operand"):
            Gate(GateKind.CX, (1, 1))

    def test_angle_required_for_rotations(self):
        with pytest.raises(ValueError, match="requires an angle"):
            Gate(GateKind.RX, (0,))
        with pytest.raises(ValueError, match="takes no angle"):
            Gate(GateKind.H, (0,), 1.0)


class TestParse:
    def test_entangler(self):
        c = parse_circuit(ENTANGLER)
        assert c == Circuit(
            num_qubits=2,
            gates=(Gate(GateKind.H, (0,)), Gate(GateKind.CX, (0, 1))),
            input_qubits=(0, 1),
            output_qubits=(0, 1),
        )

    def test_identity_program(self):
        src = "// qucat inputs: 0\nqreg q[1];\ncreg c[1];\nmeasure q[0] -> c[0];\n"
        c = parse_circuit(src)
        assert c.gates == ()
        assert c.input_qubits == (0,)
        assert c.output_qubits == (0,)

    def test_header_optional(self):
        src = "// qucat inputs: 0\nqreg q[1];\ncreg c[1];\nx q[0];\nmeasure q[0] -> c[0];\n"
        assert parse_circuit(src).gates == (Gate(GateKind.X, (0,)),)

    def test_measure_order_defines_outputs(self):
        src = (
            "// qucat inputs: 0,1\nqreg q[2];\ncreg c[2];\nh q[0];\n"
            "measure q[1] -> c[0];\nmeasure q[0] -> c[1];\n"
        )
        assert parse_circuit(src).output_qubits == (1, 0)

    def test_deterministic(self):
        assert parse_circuit(ENTANGLER) == parse_circuit(ENTANGLER)

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("pi", math.pi),
            ("pi/2", math.pi / 2),
            ("3*pi/4", 3 * math.pi / 4),
            ("-pi/2", -math.pi / 2),
            ("0.25", 0.25),
            ("2e-3", 2e-3),
            ("1.5e2", 150.0),
            ("pi*0.5", math.pi * 0.5),
        ],
    )
    def test_angle_expressions(self, text, expected):
        src = (
            f"// qucat inputs: 0\nqreg q[1];\ncreg c[1];\nrz({text}) q[0];\n"
            "measure q[0] -> c[0];\n"
        )
        gate = parse_circuit(src).gates[0]
        assert gate.angle == pytest.approx(expected, abs=0, rel=1e-15)

    def test_all_gate_names(self):
        body = (
            "id q[0]; x q[0]; y q[0]; z q[0]; h q[0]; s q[0]; sdg q[0]; t q[0];"
            " tdg q[0]; rx(0.5) q[0]; ry(0.5) q[1]; rz(0.5) q[2];"
            " cx q[0],q[1]; cz q[1],q[2]; swap q[0],q[2]; ccx q[0],q[1],q[2];"
        )
        src = f"// qucat inputs: 0\nqreg q[3];\ncreg c[1];\n{body}\nmeasure q[0] -> c[0];\n"
        c = parse_circuit(src)
        assert [g.kind for g in c.gates] == list(GateKind)


class TestParseErrors:
    def _expect(self, src, match, line=None):
        with pytest.raises(QasmError, match=match) as info:
            parse_circuit(src)
        if line is not None:
            assert info.value.line == line
        return info.value

    def test_duplicate_operand(self):
        self._expect(
            "// qucat inputs: 0\nqreg q[2];\ncreg c[1];\ncx q[0],q[0];\nmeasure q[0] -> c[0];\n",
            "duplicate operand",
            line=4,
        )

    def test_unknown_gate(self):
        self._expect(
            "// qucat inputs: 0\nqreg q[1];\ncreg c[1];\nu3 q[0];\nmeasure q[0] -> c[0];\n",
            "unknown gate 'u3'",
            line=4,
        )

    def test_operand_out_of_range(self):
        self._expect(
            "// qucat inputs: 0\nqreg q[2];\ncreg c[1];\nx q[5];\nmeasure q[0] -> c[0];\n",
            "out of range",
        )

    def test_missing_pragma(self):
        self._expect(
            "qreg q[1];\ncreg c[1];\nmeasure q[0] -> c[0];\n", "missing inputs pragma"
        )

    def test_malformed_pragma(self):
        self._expect(
            "// qucat inputs: 0,\nqreg q[1];\ncreg c[1];\nmeasure q[0] -> c[0];\n",
            "malformed inputs pragma",
            line=1,
        )

    def test_duplicate_pragma(self):
        self._expect(
            "// qucat inputs: 0\n// qucat inputs: 0\nqreg q[1];\ncreg c[1];\nmeasure q[0] -> c[0];\n",
            "duplicate inputs pragma",
        )

    def test_pragma_index_out_of_range(self):
        self._expect(
            "// qucat inputs: 7\nqreg q[1];\ncreg c[1];\nmeasure q[0] -> c[0];\n",
            "input qubit 7 out of range",
        )

    def test_gate_after_measurement(self):
        self._expect(
            "// qucat inputs: 0\nqreg q[2];\ncreg c[1];\nmeasure q[0] -> c[0];\nx q[1];\n",
            "measurement must be terminal",
            line=5,
        )

    def test_syntax_error_has_position(self):
        err = self._expect(
            "// qucat inputs: 0\nqreg q[1];\ncreg c[1];\nx q[0]\nmeasure q[0] -> c[0];\n",
            "expected ';'",
        )
        assert err.line == 5  # the offending token is the next statement head
        assert err.col >= 1

    def test_unexpected_character(self):
        self._expect("qreg q[1]; % oops\n", "unexpected character", line=1)

    def test_missing_angle(self):
        self._expect(
            "// qucat inputs: 0\nqreg q[1];\ncreg c[1];\nrx q[0];\nmeasure q[0] -> c[0];\n",
            "requires an angle",
        )

    def test_angle_on_plain_gate(self):
        self._expect(
            "// qucat inputs: 0\nqreg q[1];\ncreg c[1];\nx(0.5) q[0];\nmeasure q[0] -> c[0];\n",
            "takes no angle",
        )

    def test_measured_twice(self):
        self._expect(
            "// qucat inputs: 0\nqreg q[1];\ncreg c[2];\nmeasure q[0] -> c[0];\nmeasure q[0] -> c[1];\n",
            "measured twice",
        )

    def test_no_measurements(self):
        self._expect("// qucat inputs: 0\nqreg q[1];\ncreg c[1];\nx q[0];\n", "no measurements")

    def test_two_qregs(self):
        self._expect(
            "// qucat inputs: 0\nqreg q[1];\nqreg r[1];\ncreg c[1];\nmeasure q[0] -> c[0];\n",
            "only one qreg",
        )

    def test_wrong_register_name(self):
        self._expect(
            "// qucat inputs: 0\nqreg q[1];\ncreg c[1];\nx r[0];\nmeasure q[0] -> c[0];\n",
            "unknown gate|unknown quantum register",
        )

    def test_creg_index_out_of_range(self):
        self._expect(
            "// qucat inputs: 0\nqreg q[1];\ncreg c[1];\nmeasure q[0] -> c[1];\n",
            "out of range for creg",
        )

    def test_unsupported_version(self):
        self._expect("OPENQASM 3.0;\nqreg q[1];\n", "unsupported OPENQASM version")

    def test_arity_mismatch(self):
        self._expect(
            "// qucat inputs: 0\nqreg q[3];\ncreg c[1];\ncx q[0],q[1],q[2];\nmeasure q[0] -> c[0];\n",
            "expects 2 operand",
        )


class TestSerialize:
    def test_gateless_circuit(self):
        c = Circuit(num_qubits=1, gates=(), input_qubits=(0,), output_qubits=(0,))
        text = serialize_circuit(c)
        assert "measure q[0] -> c[0];" in text
        assert parse_circuit(text) == c

    def test_entangler_roundtrip(self):
        c = parse_circuit(ENTANGLER)
        assert serialize_circuit(c) == ENTANGLER
        assert parse_circuit(serialize_circuit(c)) == c

    def test_angle_roundtrip_bit_exact(self):
        c = Circuit(
            num_qubits=1,
            gates=(Gate(GateKind.RZ, (0,), math.pi / 4),),
            input_qubits=(0,),
            output_qubits=(0,),
        )
        text = serialize_circuit(c)
        assert "rz(0.78539816339744828)" in text
        reparsed = parse_circuit(text)
        assert reparsed.gates[0].angle == math.pi / 4

    def test_invalid_circuit_rejected(self):
        bad = Circuit(num_qubits=2, gates=(), input_qubits=(0,), output_qubits=())
        with pytest.raises(ValueError, match="invalid circuit"):
            serialize_circuit(bad)


class TestValidate:
    def test_valid_circuit_is_clean(self):
        assert validate(parse_circuit(ENTANGLER)) == []

    def test_operand_out_of_range(self):
        c = Circuit(
            num_qubits=2,
            gates=(Gate(GateKind.X, (5,)),),
            input_qubits=(0,),
            output_qubits=(0,),
        )
        diags = validate(c)
        assert len(diags) == 1 and "out of range" in diags[0]

    def test_empty_outputs(self):
        c = Circuit(num_qubits=1, gates=(), input_qubits=(0,), output_qubits=())
        assert any("output_qubits" in d and "empty" in d for d in validate(c))

    def test_duplicate_inputs(self):
        c = Circuit(num_qubits=2, gates=(), input_qubits=(0, 0), output_qubits=(1,))
        assert any("duplicates" in d for d in validate(c))


@st.composite
def circuits(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    gates = []
    for _ in range(draw(st.integers(min_value=0, max_value=10))):
        kind = draw(st.sampled_from([k for k in GateKind if k.arity <= n]))
        qubits = tuple(draw(st.permutations(range(n)))[: kind.arity])
        angle = None
        if kind.takes_angle:
            angle = draw(
                st.floats(allow_nan=False, allow_infinity=False, width=64)
            )
        gates.append(Gate(kind, qubits, angle))
    subset = st.lists(
        st.integers(min_value=0, max_value=n - 1), unique=True, min_size=1
    ).map(tuple)
    return Circuit(n, tuple(gates), draw(subset), draw(subset))


class TestRoundTripProperty:
    @given(circuits())
    @settings(max_examples=150, deadline=None)
    def test_parse_serialize_roundtrip(self, circuit):
        assert parse_circuit(serialize_circuit(circuit)) == circuit
