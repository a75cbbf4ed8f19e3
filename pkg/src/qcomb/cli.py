"""Command-line entry point.

Subcommands: ``run`` (execute a configured campaign), ``replay`` (re-run a
recorded manifest), ``gen-ca`` (print a covering array as CSV),
``derive-spec`` (print the spec induced by a circuit), ``check-spec``
(validate a spec file against a circuit).

Exit codes: 0 success with no failures, 1 a failure was detected (a fault
was found), 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import itertools
import sys

from .covering import generate, read_seed_rows, suite_to_csv
from .harness import (
    ConfigError,
    ReplayError,
    derive_spec,
    emit_outputs,
    load_config,
    replay,
    run_campaign,
)
from .oracle import SpecError, load_spec, spec_to_json
from .qasm import QasmError, parse_circuit

__all__ = ["cli_main", "main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcomb",
        description="Combinatorial testing for quantum programs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="generate, execute and assess a campaign")
    p_run.add_argument("--config", required=True, help="JSON run configuration")

    p_replay = sub.add_parser("replay", help="re-execute a recorded campaign")
    p_replay.add_argument("--manifest", required=True, help="replay.json manifest")

    p_gen = sub.add_parser("gen-ca", help="print a covering array as CSV")
    p_gen.add_argument("--width", type=int, required=True, help="number of inputs")
    p_gen.add_argument("--strength", type=int, required=True, help="coverage strength")
    p_gen.add_argument("--seeds", help="seeding rows file")

    p_derive = sub.add_parser("derive-spec", help="derive a spec from a circuit")
    p_derive.add_argument("--circuit", required=True, help=".qasm circuit file")
    p_derive.add_argument(
        "--inputs",
        help="comma-separated input bitstrings (default: every input assignment)",
    )
    p_derive.add_argument("--out", help="write to a file instead of stdout")

    p_check = sub.add_parser("check-spec", help="validate a spec against a circuit")
    p_check.add_argument("--spec", required=True, help="spec JSON file")
    p_check.add_argument("--circuit", required=True, help=".qasm circuit file")
    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except (ConfigError, ReplayError, SpecError, QasmError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "replay":
        return _cmd_replay(args)
    if args.command == "gen-ca":
        return _cmd_gen_ca(args)
    if args.command == "derive-spec":
        return _cmd_derive_spec(args)
    if args.command == "check-spec":
        return _cmd_check_spec(args)
    raise ConfigError(f"unknown command {args.command!r}")


def _cmd_run(args: argparse.Namespace) -> int:
    cfg = load_config(args.config)
    report = run_campaign(cfg)
    emit_outputs(report, cfg.output_dir)
    failure = report.first_failure
    print(
        f"{report.functionality}: executed {report.executed_count} test(s) "
        f"in {report.elapsed_seconds:.2f}s"
    )
    if failure is None:
        print("no failure detected")
        return 0
    detail = f"input {failure.input}, verdict {failure.verdict.kind}"
    if failure.verdict.witness is not None:
        detail += f", witness {failure.verdict.witness}"
    if failure.verdict.p_value is not None:
        detail += f", p={failure.verdict.p_value:.3g}"
    if report.k_end is not None:
        print(f"failure at strength k_end={report.k_end}: {detail}")
    else:
        print(f"failure detected: {detail}")
    return 1


def _cmd_replay(args: argparse.Namespace) -> int:
    report = replay(args.manifest)
    failures = sum(1 for r in report.records if r.verdict.kind != "pass")
    print(
        f"replayed {report.executed_count} test(s); all verdicts reproduced; "
        f"{failures} failure(s)"
    )
    return 1 if failures else 0


def _cmd_gen_ca(args: argparse.Namespace) -> int:
    seeds: list[str] = []
    if args.seeds:
        with open(args.seeds, encoding="utf-8") as fh:
            seeds = read_seed_rows(fh.read(), args.width)
    suite = generate(args.width, args.strength, seeds)
    sys.stdout.write(suite_to_csv(suite))
    return 0


def _cmd_derive_spec(args: argparse.Namespace) -> int:
    with open(args.circuit, encoding="utf-8") as fh:
        circuit = parse_circuit(fh.read())
    width = len(circuit.input_qubits)
    if args.inputs:
        inputs = args.inputs.split(",")
        for row in inputs:
            if len(row) != width or any(ch not in "01" for ch in row):
                raise ConfigError(
                    f"input {row!r} is not a bitstring of length {width}"
                )
    else:
        if width > 16:
            raise ConfigError(
                f"refusing to enumerate 2^{width} inputs; pass --inputs explicitly"
            )
        inputs = ["".join(bits) for bits in itertools.product("01", repeat=width)]
    spec = derive_spec(circuit, inputs)
    text = spec_to_json(spec)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_check_spec(args: argparse.Namespace) -> int:
    with open(args.circuit, encoding="utf-8") as fh:
        circuit = parse_circuit(fh.read())
    spec = load_spec(args.spec)
    problems: list[str] = []
    if spec.input_width != len(circuit.input_qubits):
        problems.append(
            f"spec input width {spec.input_width} != circuit's "
            f"{len(circuit.input_qubits)} input qubit(s)"
        )
    if spec.output_width != len(circuit.output_qubits):
        problems.append(
            f"spec output width {spec.output_width} != circuit's "
            f"{len(circuit.output_qubits)} output qubit(s)"
        )
    if problems:
        for problem in problems:
            print(f"error: {problem}", file=sys.stderr)
        return 2
    print(f"spec is consistent with the circuit ({len(spec.entries)} input entries)")
    return 0


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
