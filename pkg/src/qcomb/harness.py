"""Campaign orchestration: wire parser, suite generator, simulator and
oracle together, and emit the output artifacts.

Two modes mirror the tool's two functionalities: a fixed-strength campaign
that executes a whole suite (``run_f1``), and an escalating campaign that
generates suites of strength 2, 3, ... up to a maximum, assessing each test
as it runs and stopping at the first failure (``run_f2``).

Per-test seeds are ``master_seed XOR global_test_index`` so campaigns are
reproducible test by test, and every campaign writes a replay manifest that
re-executes exactly the recorded (input, shots, seed) triples.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from dataclasses import dataclass, field
from pathlib import Path

from .covering import TestSuite, generate, read_seed_rows
from .oracle import (
    ProgramSpec,
    SpecError,
    Verdict,
    load_spec,
    shots_for_input,
    spec_from_json,
    spec_to_json,
    assess,
)
from .qasm import Circuit, parse_circuit
from .sim import exact_distribution, run_shots

__all__ = [
    "ConfigError",
    "ReplayError",
    "RunConfig",
    "TestRecord",
    "CampaignReport",
    "load_config",
    "run_f1",
    "run_f2",
    "run_campaign",
    "derive_spec",
    "emit_outputs",
    "replay",
    "OUTPUT_FILES",
]

_SEED_MASK = (1 << 64) - 1

OUTPUT_FILES = ("circuit.qasm", "spec.json", "results.csv", "assessment.json", "replay.json")


class ConfigError(ValueError):
    """Invalid run configuration."""


class ReplayError(ValueError):
    """Replay manifest refers to missing/modified files, or fails to reproduce."""


@dataclass
class RunConfig:
    functionality: str  # "F1" or "F2"
    circuit_path: Path
    output_dir: Path
    spec_path: Path | None = None
    golden_path: Path | None = None
    seeds_path: Path | None = None
    strength: int = 2
    alpha: float = 0.01
    master_seed: int = 0

    def __post_init__(self) -> None:
        if self.functionality not in ("F1", "F2"):
            raise ConfigError(
                f'functionality must be "F1" or "F2", got {self.functionality!r}'
            )
        if (self.spec_path is None) == (self.golden_path is None):
            raise ConfigError('exactly one of "spec" and "golden" must be given')
        if not 0.0 < self.alpha < 1.0:
            raise ConfigError(f"alpha must be in (0, 1), got {self.alpha}")
        if self.strength < 1:
            raise ConfigError(f"strength must be positive, got {self.strength}")


_CONFIG_KEYS = {
    "functionality",
    "strength",
    "alpha",
    "circuit",
    "spec",
    "golden",
    "seeds",
    "master_seed",
    "output_dir",
}


def load_config(path: str | Path) -> RunConfig:
    """Read a JSON run configuration; relative paths resolve against the file."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(data) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown config key(s): {sorted(unknown)}")
    for key in ("functionality", "circuit", "output_dir"):
        if key not in data:
            raise ConfigError(f"config is missing required key {key!r}")
    base = path.parent

    def resolve(key: str) -> Path | None:
        if key not in data or data[key] is None:
            return None
        return base / str(data[key])

    try:
        return RunConfig(
            functionality=str(data["functionality"]),
            circuit_path=base / str(data["circuit"]),
            output_dir=base / str(data["output_dir"]),
            spec_path=resolve("spec"),
            golden_path=resolve("golden"),
            seeds_path=resolve("seeds"),
            strength=int(data.get("strength", 2)),
            alpha=float(data.get("alpha", 0.01)),
            master_seed=int(data.get("master_seed", 0)),
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"invalid config value: {exc}") from None


@dataclass(frozen=True)
class TestRecord:
    __test__ = False  # not a pytest class, despite the name

    index: int
    strength: int
    input: str
    shots: int
    seed: int
    histogram: dict[str, int]
    verdict: Verdict


@dataclass
class CampaignReport:
    functionality: str
    alpha: float
    master_seed: int
    circuit_text: str
    spec_json: str
    records: list[TestRecord] = field(default_factory=list)
    k_end: int | None = None
    elapsed_seconds: float = 0.0

    @property
    def executed_count(self) -> int:
        return len(self.records)

    @property
    def first_failure(self) -> TestRecord | None:
        return next((r for r in self.records if r.verdict.kind != "pass"), None)


def derive_spec(golden: Circuit, inputs: list[str]) -> ProgramSpec:
    """Specification induced by exact simulation of a reference circuit."""
    return ProgramSpec({i: exact_distribution(golden, i) for i in inputs})


class _SpecSource:
    """Expected behaviour, from a spec file or derived from a golden circuit."""

    def __init__(self, cfg: RunConfig, circuit: Circuit):
        self._golden: Circuit | None = None
        self._entries: dict[str, dict[str, float]] = {}
        if cfg.spec_path is not None:
            try:
                spec = load_spec(cfg.spec_path)
            except FileNotFoundError:
                raise ConfigError(f"spec file not found: {cfg.spec_path}") from None
            if spec.input_width != len(circuit.input_qubits):
                raise ConfigError(
                    f"spec input width {spec.input_width} does not match the "
                    f"circuit's {len(circuit.input_qubits)} input qubit(s)"
                )
            if spec.output_width != len(circuit.output_qubits):
                raise ConfigError(
                    f"spec output width {spec.output_width} does not match the "
                    f"circuit's {len(circuit.output_qubits)} output qubit(s)"
                )
            self._entries = spec.entries
        else:
            golden_text = _read_text(cfg.golden_path, "golden circuit")
            golden = parse_circuit(golden_text)
            if len(golden.input_qubits) != len(circuit.input_qubits) or len(
                golden.output_qubits
            ) != len(circuit.output_qubits):
                raise ConfigError(
                    "golden circuit input/output widths do not match the "
                    "circuit under test"
                )
            self._golden = golden

    def spec_for(self, inputs: list[str]) -> ProgramSpec:
        """Spec covering the given inputs; derives missing entries if golden."""
        if self._golden is not None:
            for i in inputs:
                if i not in self._entries:
                    self._entries[i] = exact_distribution(self._golden, i)
        else:
            for i in inputs:
                if i not in self._entries:
                    raise SpecError(f"specification has no entry for input {i!r}")
        return ProgramSpec(dict(self._entries))

    def accumulated_json(self) -> str:
        return spec_to_json(ProgramSpec(dict(self._entries)))


def run_f1(cfg: RunConfig) -> CampaignReport:
    """Fixed-strength campaign: generate one suite, execute every test."""
    if cfg.functionality != "F1":
        raise ConfigError(f"run_f1 requires functionality F1, got {cfg.functionality}")
    return _run(cfg)


def run_f2(cfg: RunConfig) -> CampaignReport:
    """Escalating campaign: strengths 2..K, stopping at the first failure."""
    if cfg.functionality != "F2":
        raise ConfigError(f"run_f2 requires functionality F2, got {cfg.functionality}")
    return _run(cfg)


def run_campaign(cfg: RunConfig) -> CampaignReport:
    """Dispatch on the configured functionality."""
    return _run(cfg)


def _run(cfg: RunConfig) -> CampaignReport:
    start = time.perf_counter()
    circuit_text = _read_text(cfg.circuit_path, "circuit")
    circuit = parse_circuit(circuit_text)
    width = len(circuit.input_qubits)
    if cfg.functionality == "F1":
        if not 1 <= cfg.strength <= width:
            raise ConfigError(
                f"F1 strength must be in 1..{width}, got {cfg.strength}"
            )
        strengths = [cfg.strength]
        stop_on_failure = False
    else:
        if not 2 <= cfg.strength <= width:
            raise ConfigError(
                f"F2 maximum strength must be in 2..{width}, got {cfg.strength}"
            )
        strengths = list(range(2, cfg.strength + 1))
        stop_on_failure = True

    seeds: list[str] = []
    if cfg.seeds_path is not None:
        seeds = read_seed_rows(_read_text(cfg.seeds_path, "seeding rows"), width)

    source = _SpecSource(cfg, circuit)
    report = CampaignReport(
        functionality=cfg.functionality,
        alpha=cfg.alpha,
        master_seed=cfg.master_seed,
        circuit_text=circuit_text,
        spec_json="",
    )
    index = 0
    for k in strengths:
        suite = generate(width, k, seeds)
        spec = source.spec_for(list(suite.rows))
        failed = False
        for row in suite.rows:
            shots = shots_for_input(spec, row)
            seed = (cfg.master_seed ^ index) & _SEED_MASK
            histogram = run_shots(circuit, row, shots, seed)
            verdict = assess(spec, row, histogram, cfg.alpha)
            report.records.append(
                TestRecord(index, k, row, shots, seed, histogram, verdict)
            )
            index += 1
            if stop_on_failure and verdict.kind != "pass":
                failed = True
                break
        if failed:
            report.k_end = k
            break
    report.spec_json = source.accumulated_json()
    report.elapsed_seconds = time.perf_counter() - start
    return report


def _assessment_entry(record: TestRecord) -> dict:
    entry: dict = {
        "strength": record.strength,
        "input": record.input,
        "shots": record.shots,
        "verdict": record.verdict.kind,
        "alpha": record.verdict.alpha,
        "seed": record.seed,
    }
    if record.verdict.witness is not None:
        entry["witness"] = record.verdict.witness
    if record.verdict.statistic is not None:
        entry["statistic"] = record.verdict.statistic
    if record.verdict.p_value is not None:
        entry["p_value"] = record.verdict.p_value
    return entry


def emit_outputs(report: CampaignReport, out_dir: str | Path) -> dict[str, Path]:
    """Write the campaign artifacts; all-or-nothing via temp files + rename.

    Files: ``circuit.qasm`` and ``spec.json`` (self-contained copies of what
    was tested and against what), ``results.csv`` (per-test observed
    outputs), ``assessment.json`` (per-test verdicts), and ``replay.json``
    (the replay manifest). Byte-deterministic given the report.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    csv_lines = ["strength,input,shots,output,count"]
    for record in report.records:
        for output in sorted(record.histogram):
            csv_lines.append(
                f"{record.strength},{record.input},{record.shots},"
                f"{output},{record.histogram[output]}"
            )
    results_csv = "\n".join(csv_lines) + "\n"

    assessment = json.dumps(
        [_assessment_entry(r) for r in report.records], indent=2, sort_keys=True
    ) + "\n"

    manifest = json.dumps(
        {
            "circuit_path": "circuit.qasm",
            "circuit_sha256": _sha256(report.circuit_text),
            "spec_path": "spec.json",
            "spec_sha256": _sha256(report.spec_json),
            "alpha": report.alpha,
            "tests": [
                {
                    "input": r.input,
                    "shots": r.shots,
                    "seed": r.seed,
                    "recorded_verdict": r.verdict.kind,
                }
                for r in report.records
            ],
        },
        indent=2,
        sort_keys=True,
    ) + "\n"

    contents = {
        "circuit.qasm": report.circuit_text,
        "spec.json": report.spec_json,
        "results.csv": results_csv,
        "assessment.json": assessment,
        "replay.json": manifest,
    }
    temp_paths: dict[str, Path] = {}
    for name, text in contents.items():
        temp = out_dir / (name + ".tmp")
        temp.write_text(text, encoding="utf-8")
        temp_paths[name] = temp
    final: dict[str, Path] = {}
    for name, temp in temp_paths.items():
        target = out_dir / name
        os.replace(temp, target)
        final[name] = target
    return final


def replay(manifest_path: str | Path) -> CampaignReport:
    """Re-execute the recorded (input, shots, seed) triples and re-assess.

    The referenced circuit and spec files must hash to the recorded digests;
    every reproduced verdict must equal the recorded one.
    """
    manifest_path = Path(manifest_path)
    try:
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ReplayError(f"manifest not found: {manifest_path}") from None
    except json.JSONDecodeError as exc:
        raise ReplayError(f"manifest is not valid JSON: {exc}") from None
    base = manifest_path.parent
    try:
        circuit_ref = base / manifest["circuit_path"]
        spec_ref = base / manifest["spec_path"]
        alpha = float(manifest["alpha"])
        tests = manifest["tests"]
    except (KeyError, TypeError) as exc:
        raise ReplayError(f"manifest is missing field: {exc}") from None

    circuit_text = _read_text(circuit_ref, "replayed circuit", ReplayError)
    spec_text = _read_text(spec_ref, "replayed spec", ReplayError)
    for label, text, want in (
        ("circuit", circuit_text, manifest.get("circuit_sha256")),
        ("spec", spec_text, manifest.get("spec_sha256")),
    ):
        got = _sha256(text)
        if got != want:
            raise ReplayError(
                f"{label} file hash mismatch: manifest records {want}, file has {got}"
            )

    circuit = parse_circuit(circuit_text)
    spec = spec_from_json(spec_text)
    report = CampaignReport(
        functionality="replay",
        alpha=alpha,
        master_seed=0,
        circuit_text=circuit_text,
        spec_json=spec_text,
    )
    for position, test in enumerate(tests):
        row = str(test["input"])
        shots = int(test["shots"])
        seed = int(test["seed"])
        histogram = run_shots(circuit, row, shots, seed)
        verdict = assess(spec, row, histogram, alpha)
        if verdict.kind != test["recorded_verdict"]:
            raise ReplayError(
                f"test {position} (input {row!r}) reproduced verdict "
                f"{verdict.kind!r}, manifest records {test['recorded_verdict']!r}"
            )
        report.records.append(
            TestRecord(position, 0, row, shots, seed, histogram, verdict)
        )
    return report


def _sha256(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _read_text(path: Path | None, label: str, err=ConfigError) -> str:
    if path is None:
        raise err(f"{label} path not given")
    try:
        return Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise err(f"{label} file not found: {path}") from None
