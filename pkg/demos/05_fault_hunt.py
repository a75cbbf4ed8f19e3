"""Escalating-strength (F2) campaigns against the fault-injected corpus.

Suites of strength 2, 3, ... are generated until a test fails or the
maximum strength is reached. Faults conditioned on more input qubits need
stronger suites.
"""

import tempfile
from pathlib import Path

from qcomb import corpus
from qcomb.harness import RunConfig, run_f2

workdir = Path(tempfile.mkdtemp(prefix="qcomb-demo-"))

for name in corpus.PROGRAMS:
    golden_path = workdir / f"{name}.qasm"
    golden_path.write_text(corpus.source(name))
    print(f"\n=== {name} ===")
    for level in corpus.FAULT_LEVELS:
        faulty_path = workdir / f"{name}_{level}.qasm"
        faulty_path.write_text(corpus.fault_source(name, level))
        cfg = RunConfig(
            functionality="F2",
            circuit_path=faulty_path,
            golden_path=golden_path,
            output_dir=workdir / "out",
            strength=4,
            alpha=0.01,
            master_seed=0,
        )
        report = run_f2(cfg)
        condition = corpus.fault_condition(name, level)
        trigger = (
            "any input" if not condition
            else ", ".join(f"q{p}={b}" for p, b in sorted(condition.items()))
        )
        failing = report.records[-1]
        hit = all(int(failing.input[p]) == b for p, b in condition.items())
        note = "" if hit else "  [chi-square false alarm before the true trigger]"
        print(f"  {level:6s} (trigger: {trigger})")
        print(f"         found at k_end={report.k_end} after "
              f"{report.executed_count} tests; failing input {failing.input} "
              f"({failing.verdict.kind}){note}")
