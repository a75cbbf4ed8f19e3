"""Combinatorial testing for quantum programs.

Generates strength-k covering arrays over a program's input qubits, executes
each test on a built-in statevector simulator for a specification-derived
number of shots, and classifies the observed output histograms with two
statistical oracles (unexpected output, and wrong output distribution via
Pearson's chi-square test).
"""

from .covering import TestSuite, ValueSchema, covers, enumerate_schemas, generate, verify_coverage
from .harness import (
    CampaignReport,
    ConfigError,
    ReplayError,
    RunConfig,
    TestRecord,
    derive_spec,
    emit_outputs,
    load_config,
    replay,
    run_campaign,
    run_f1,
    run_f2,
)
from .oracle import (
    ProgramSpec,
    SpecError,
    Verdict,
    assess,
    check_uof,
    chi_square_pvalue,
    chi_square_statistic,
    load_spec,
    shots_for_input,
    spec_from_json,
    spec_to_json,
)
from .qasm import Circuit, Gate, GateKind, QasmError, parse_circuit, serialize_circuit, validate
from .sim import (
    MAX_QUBITS,
    apply_gate,
    exact_distribution,
    final_state,
    init_state,
    inverse_gate,
    run_shots,
)

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "Gate",
    "GateKind",
    "QasmError",
    "parse_circuit",
    "serialize_circuit",
    "validate",
    "MAX_QUBITS",
    "init_state",
    "apply_gate",
    "final_state",
    "exact_distribution",
    "run_shots",
    "inverse_gate",
    "ValueSchema",
    "TestSuite",
    "enumerate_schemas",
    "covers",
    "generate",
    "verify_coverage",
    "ProgramSpec",
    "SpecError",
    "Verdict",
    "spec_from_json",
    "spec_to_json",
    "load_spec",
    "shots_for_input",
    "check_uof",
    "chi_square_statistic",
    "chi_square_pvalue",
    "assess",
    "RunConfig",
    "TestRecord",
    "CampaignReport",
    "ConfigError",
    "ReplayError",
    "load_config",
    "run_f1",
    "run_f2",
    "run_campaign",
    "derive_spec",
    "emit_outputs",
    "replay",
]
