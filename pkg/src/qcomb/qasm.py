"""Parser, serializer, and validator for a small OpenQASM 2.0 subset.

The accepted grammar is deliberately tiny: one ``qreg``, one ``creg``, a
fixed 16-gate vocabulary, terminal ``measure`` statements, ``//`` comments,
and a mandatory pragma comment declaring the input qubits::

    // qucat inputs: 0,1

Measurements define the output qubits (in source order); the pragma defines
the input qubits (in listed order). A circuit file is therefore fully
self-describing. ``gate`` definitions, ``if``, ``barrier`` and ``opaque``
are not part of the subset and are rejected.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field

__all__ = [
    "GateKind",
    "Gate",
    "Circuit",
    "QasmError",
    "parse_circuit",
    "serialize_circuit",
    "validate",
]


class GateKind(enum.Enum):
    I = "id"
    X = "x"
    Y = "y"
    Z = "z"
    H = "h"
    S = "s"
    Sdg = "sdg"
    T = "t"
    Tdg = "tdg"
    RX = "rx"
    RY = "ry"
    RZ = "rz"
    CX = "cx"
    CZ = "cz"
    SWAP = "swap"
    CCX = "ccx"

    @property
    def qasm_name(self) -> str:
        return self.value

    @property
    def arity(self) -> int:
        return _ARITY[self]

    @property
    def takes_angle(self) -> bool:
        return self in (GateKind.RX, GateKind.RY, GateKind.RZ)


_ARITY = {k: 1 for k in GateKind}
_ARITY.update({GateKind.CX: 2, GateKind.CZ: 2, GateKind.SWAP: 2, GateKind.CCX: 3})

_BY_QASM_NAME = {k.value: k for k in GateKind}


@dataclass(frozen=True)
class Gate:
    """One gate application: kind, operand qubits (controls first), angle.

    The angle is present exactly for the rotation kinds RX/RY/RZ, in radians.
    """

    kind: GateKind
    qubits: tuple[int, ...]
    angle: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "qubits", tuple(self.qubits))
        if len(self.qubits) != self.kind.arity:
            raise ValueError(
                f"{self.kind.name} expects {self.kind.arity} operand(s), "
                f"got {len(self.qubits)}"
            )
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"duplicate operand in {self.kind.name} gate")
        if self.kind.takes_angle:
            if self.angle is None:
                raise ValueError(f"{self.kind.name} requires an angle")
        elif self.angle is not None:
            raise ValueError(f"{self.kind.name} takes no angle")


@dataclass(frozen=True)
class Circuit:
    """Gate-list representation of a quantum program.

    ``input_qubits`` and ``output_qubits`` are ordered: position ``p`` of an
    input assignment or output bitstring refers to the ``p``-th entry of the
    corresponding list (leftmost character first).
    """

    num_qubits: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)
    input_qubits: tuple[int, ...] = field(default_factory=tuple)
    output_qubits: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "input_qubits", tuple(self.input_qubits))
        object.__setattr__(self, "output_qubits", tuple(self.output_qubits))


def validate(circuit: Circuit) -> list[str]:
    """Check the circuit-level invariants; return one diagnostic per violation."""
    diags: list[str] = []
    n = circuit.num_qubits
    if n < 1:
        diags.append(f"num_qubits must be positive, got {n}")
    for pos, gate in enumerate(circuit.gates):
        for q in gate.qubits:
            if not 0 <= q < n:
                diags.append(
                    f"gate {pos} ({gate.kind.name}): operand {q} out of range "
                    f"for {n} qubit(s)"
                )
    for label, qubits in (
        ("input_qubits", circuit.input_qubits),
        ("output_qubits", circuit.output_qubits),
    ):
        if not qubits:
            diags.append(f"{label} must not be empty")
        if len(set(qubits)) != len(qubits):
            diags.append(f"{label} contains duplicates: {list(qubits)}")
        for q in qubits:
            if not 0 <= q < n:
                diags.append(f"{label}: qubit {q} out of range for {n} qubit(s)")
    return diags


class QasmError(ValueError):
    """Parse or validation failure, with 1-based source position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


_PRAGMA_RE = re.compile(r"^// qucat inputs: (\d+(?:,\d+)*)$")

_TOKEN_RE = re.compile(
    r"""
    (?P<WS>\s+)
    | (?P<REAL>\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+)
    | (?P<INT>\d+)
    | (?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)
    | (?P<STRING>"[^"\n]*")
    | (?P<ARROW>->)
    | (?P<SYM>[;,()\[\]*/+-])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> tuple[list[_Token], list[tuple[str, int]]]:
    """Return (tokens, comments); comments are (text, line) pairs."""
    tokens: list[_Token] = []
    comments: list[tuple[str, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        cut = line.find("//")
        if cut >= 0:
            comments.append((line[cut:].rstrip(), lineno))
            line = line[:cut]
        pos = 0
        while pos < len(line):
            m = _TOKEN_RE.match(line, pos)
            if m is None:
                raise QasmError(f"unexpected character {line[pos]!r}", lineno, pos + 1)
            kind = m.lastgroup or ""
            if kind != "WS":
                tokens.append(_Token(kind, m.group(), lineno, pos + 1))
            pos = m.end()
    return tokens, comments


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> _Token:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else _Token("", "", 1, 1)
            raise QasmError("unexpected end of input", last.line, last.col + len(last.text))
        self.pos += 1
        return tok

    def expect(self, kind: str, text: str | None = None) -> _Token:
        tok = self.next()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text if text is not None else kind
            raise QasmError(f"expected {want!r}, found {tok.text!r}", tok.line, tok.col)
        return tok

    def expect_sym(self, sym: str) -> _Token:
        return self.expect("ARROW" if sym == "->" else "SYM", sym)

    def parse_int(self) -> int:
        tok = self.expect("INT")
        return int(tok.text)

    def parse_indexed(self, expected_reg: str | None, what: str) -> tuple[int, _Token]:
        name = self.expect("IDENT")
        if expected_reg is not None and name.text != expected_reg:
            raise QasmError(
                f"unknown {what} register {name.text!r} (declared: {expected_reg!r})",
                name.line,
                name.col,
            )
        self.expect_sym("[")
        index = self.parse_int()
        self.expect_sym("]")
        return index, name

    def parse_angle(self) -> float:
        sign = 1.0
        tok = self.peek()
        while tok is not None and tok.kind == "SYM" and tok.text in "+-":
            self.next()
            if tok.text == "-":
                sign = -sign
            tok = self.peek()
        value = sign * self._angle_factor()
        tok = self.peek()
        while tok is not None and tok.kind == "SYM" and tok.text in "*/":
            op = self.next().text
            rhs = self._angle_factor()
            if op == "*":
                value *= rhs
            else:
                if rhs == 0:
                    raise QasmError("division by zero in angle", tok.line, tok.col)
                value /= rhs
            tok = self.peek()
        return value

    def _angle_factor(self) -> float:
        tok = self.next()
        if tok.kind in ("INT", "REAL"):
            return float(tok.text)
        if tok.kind == "IDENT" and tok.text == "pi":
            return math.pi
        raise QasmError(f"expected number or 'pi', found {tok.text!r}", tok.line, tok.col)


def parse_circuit(text: str) -> Circuit:
    """Parse QASM-subset source into a Circuit.

    Raises QasmError (with 1-based line/col) on any grammar or invariant
    violation; a successfully parsed circuit always satisfies the Circuit
    invariants.
    """
    tokens, comments = _tokenize(text)

    pragma: tuple[int, ...] | None = None
    pragma_line = 0
    for comment, lineno in comments:
        if not comment.startswith("// qucat"):
            continue
        m = _PRAGMA_RE.match(comment)
        if m is None:
            raise QasmError(
                "malformed inputs pragma (expected '// qucat inputs: i0,i1,...')",
                lineno,
                1,
            )
        if pragma is not None:
            raise QasmError("duplicate inputs pragma", lineno, 1)
        pragma = tuple(int(s) for s in m.group(1).split(","))
        pragma_line = lineno

    parser = _Parser(tokens)
    qreg_name: str | None = None
    qreg_size = 0
    creg_name: str | None = None
    creg_size = 0
    gates: list[Gate] = []
    measured: list[int] = []
    creg_targets: set[int] = set()

    while (tok := parser.peek()) is not None:
        if tok.kind != "IDENT":
            raise QasmError(f"expected statement, found {tok.text!r}", tok.line, tok.col)
        head = parser.next()
        if head.text == "OPENQASM":
            version = parser.next()
            if version.text != "2.0":
                raise QasmError(
                    f"unsupported OPENQASM version {version.text!r}",
                    version.line,
                    version.col,
                )
            parser.expect_sym(";")
        elif head.text == "include":
            parser.expect("STRING")
            parser.expect_sym(";")
        elif head.text in ("qreg", "creg"):
            name = parser.expect("IDENT")
            parser.expect_sym("[")
            size = parser.parse_int()
            parser.expect_sym("]")
            parser.expect_sym(";")
            if size < 1:
                raise QasmError(f"register size must be positive", name.line, name.col)
            if head.text == "qreg":
                if qreg_name is not None:
                    raise QasmError("only one qreg is supported", head.line, head.col)
                qreg_name, qreg_size = name.text, size
            else:
                if creg_name is not None:
                    raise QasmError("only one creg is supported", head.line, head.col)
                creg_name, creg_size = name.text, size
        elif head.text == "measure":
            if qreg_name is None:
                raise QasmError("measure before qreg declaration", head.line, head.col)
            if creg_name is None:
                raise QasmError("measure requires a creg declaration", head.line, head.col)
            q_index, q_tok = parser.parse_indexed(qreg_name, "quantum")
            parser.expect_sym("->")
            c_index, c_tok = parser.parse_indexed(creg_name, "classical")
            parser.expect_sym(";")
            if not 0 <= q_index < qreg_size:
                raise QasmError(
                    f"qubit index {q_index} out of range for qreg[{qreg_size}]",
                    q_tok.line,
                    q_tok.col,
                )
            if not 0 <= c_index < creg_size:
                raise QasmError(
                    f"bit index {c_index} out of range for creg[{creg_size}]",
                    c_tok.line,
                    c_tok.col,
                )
            if q_index in measured:
                raise QasmError(f"qubit {q_index} measured twice", q_tok.line, q_tok.col)
            if c_index in creg_targets:
                raise QasmError(
                    f"classical bit {c_index} written twice", c_tok.line, c_tok.col
                )
            measured.append(q_index)
            creg_targets.add(c_index)
        else:
            kind = _BY_QASM_NAME.get(head.text)
            if kind is None:
                raise QasmError(f"unknown gate {head.text!r}", head.line, head.col)
            if measured:
                raise QasmError(
                    "gate after measurement (measurement must be terminal)",
                    head.line,
                    head.col,
                )
            if qreg_name is None:
                raise QasmError("gate before qreg declaration", head.line, head.col)
            angle: float | None = None
            nxt = parser.peek()
            if nxt is not None and nxt.kind == "SYM" and nxt.text == "(":
                if not kind.takes_angle:
                    raise QasmError(
                        f"gate {head.text!r} takes no angle", nxt.line, nxt.col
                    )
                parser.next()
                angle = parser.parse_angle()
                parser.expect_sym(")")
            elif kind.takes_angle:
                raise QasmError(f"gate {head.text!r} requires an angle", head.line, head.col)
            operands: list[int] = []
            positions: list[_Token] = []
            while True:
                q_index, q_tok = parser.parse_indexed(qreg_name, "quantum")
                operands.append(q_index)
                positions.append(q_tok)
                nxt = parser.peek()
                if nxt is not None and nxt.kind == "SYM" and nxt.text == ",":
                    parser.next()
                    continue
                break
            parser.expect_sym(";")
            if len(operands) != kind.arity:
                raise QasmError(
                    f"{head.text!r} expects {kind.arity} operand(s), got {len(operands)}",
                    head.line,
                    head.col,
                )
            for q_index, q_tok in zip(operands, positions):
                if not 0 <= q_index < qreg_size:
                    raise QasmError(
                        f"qubit index {q_index} out of range for qreg[{qreg_size}]",
                        q_tok.line,
                        q_tok.col,
                    )
            if len(set(operands)) != len(operands):
                raise QasmError(f"duplicate operand in {head.text!r}", head.line, head.col)
            gates.append(Gate(kind, tuple(operands), angle))

    if qreg_name is None:
        raise QasmError("missing qreg declaration", 1, 1)
    if pragma is None:
        raise QasmError("missing inputs pragma ('// qucat inputs: ...')", 1, 1)
    if len(set(pragma)) != len(pragma):
        raise QasmError("duplicate qubit in inputs pragma", pragma_line, 1)
    for q in pragma:
        if q >= qreg_size:
            raise QasmError(
                f"input qubit {q} out of range for qreg[{qreg_size}]", pragma_line, 1
            )
    if not measured:
        raise QasmError("circuit has no measurements (no output qubits)", 1, 1)

    return Circuit(
        num_qubits=qreg_size,
        gates=tuple(gates),
        input_qubits=pragma,
        output_qubits=tuple(measured),
    )


def _format_angle(angle: float) -> str:
    return f"{angle:.17g}"


def serialize_circuit(circuit: Circuit) -> str:
    """Render a valid Circuit as QASM-subset source; reparsing reproduces it."""
    diags = validate(circuit)
    if diags:
        raise ValueError("cannot serialize invalid circuit: " + "; ".join(diags))
    lines = [
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        "// qucat inputs: " + ",".join(str(q) for q in circuit.input_qubits),
        f"qreg q[{circuit.num_qubits}];",
        f"creg c[{len(circuit.output_qubits)}];",
    ]
    for gate in circuit.gates:
        args = ",".join(f"q[{q}]" for q in gate.qubits)
        if gate.angle is not None:
            lines.append(f"{gate.kind.qasm_name}({_format_angle(gate.angle)}) {args};")
        else:
            lines.append(f"{gate.kind.qasm_name} {args};")
    for pos, q in enumerate(circuit.output_qubits):
        lines.append(f"measure q[{q}] -> c[{pos}];")
    return "\n".join(lines) + "\n"
