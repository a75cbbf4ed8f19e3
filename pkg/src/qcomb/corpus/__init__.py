"""Shipped example programs: three correct circuits, each with three
fault-injected variants of increasing difficulty (the number of input
qubits whose values must line up to trigger the fault).

* ``parity6``: parity of six inputs on an ancilla; deterministic output.
* ``mixer6``: a deterministic bit next to a fair coin; two-point output.
* ``coinpair6``: an XOR bit next to two fair coins; four-point output.

``entangler`` is the two-qubit Bell-pair program used as a golden example.
"""

from __future__ import annotations

from importlib import resources

__all__ = [
    "PROGRAMS",
    "FAULT_LEVELS",
    "program_names",
    "source",
    "fault_source",
    "fault_condition",
]

PROGRAMS = ("parity6", "mixer6", "coinpair6")
FAULT_LEVELS = ("easy", "medium", "hard")

# Input-qubit pattern whose presence triggers each fault: {position: bit}.
# Empty mapping = every input triggers it.
_FAULT_TRIGGERS: dict[tuple[str, str], dict[int, int]] = {
    ("parity6", "easy"): {},
    ("parity6", "medium"): {0: 1, 1: 1, 2: 1},
    ("parity6", "hard"): {0: 1, 1: 0, 2: 1, 3: 1},
    ("mixer6", "easy"): {},
    ("mixer6", "medium"): {2: 1, 3: 0},
    ("mixer6", "hard"): {1: 1, 2: 1, 3: 0, 4: 0},
    ("coinpair6", "easy"): {},
    ("coinpair6", "medium"): {1: 1, 2: 0},
    ("coinpair6", "hard"): {0: 0, 2: 0, 3: 1, 5: 0},
}


def program_names() -> tuple[str, ...]:
    return PROGRAMS


def source(name: str) -> str:
    """QASM source of a shipped program (correct version)."""
    return _read(f"{name}.qasm")


def fault_source(name: str, level: str) -> str:
    """QASM source of the fault-injected variant of a program."""
    if level not in FAULT_LEVELS:
        raise ValueError(f"unknown fault level {level!r}")
    return _read(f"{name}_fault_{level}.qasm")


def fault_condition(name: str, level: str) -> dict[int, int]:
    """Input positions/values whose combination makes the fault observable."""
    return dict(_FAULT_TRIGGERS[(name, level)])


def _read(filename: str) -> str:
    path = resources.files(__package__).joinpath(filename)
    if not path.is_file():
        raise FileNotFoundError(f"no shipped program file {filename!r}")
    return path.read_text(encoding="utf-8")
