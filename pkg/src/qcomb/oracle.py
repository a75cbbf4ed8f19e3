"""Program specifications and the two statistical test verdicts.

A program specification maps each input bitstring to its expected output
distribution. A test execution is classified against it in two stages:

* unexpected output (``uof``): some observed output has specified
  probability zero; checked first and reported with the lexicographically
  smallest such output as witness.
* wrong output distribution (``wodf``): Pearson's chi-square goodness-of-fit
  of the observed histogram against the expected distribution rejects at the
  configured significance level. With a single possible output (zero degrees
  of freedom) this failure type is unreachable and the test passes once the
  unexpected-output check clears.

Shot counts are specification-derived: 100 executions per output with
nonzero expected probability.

No continuity correction or bin merging is applied; with expected
probabilities below ~0.05 the chi-square approximation is known to weaken,
and the statistic is still computed exactly as defined.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Literal

from .stats import regularized_gamma_q

__all__ = [
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
]

SHOTS_PER_OUTPUT = 100

VerdictKind = Literal["pass", "uof", "wodf"]


class SpecError(ValueError):
    """Malformed specification content, or a missing required input entry."""


@dataclass(frozen=True)
class ProgramSpec:
    """Expected output distribution per input bitstring.

    Distributions contain only nonzero probabilities: an output's absence
    means its expected probability is exactly zero.
    """

    entries: dict[str, dict[str, float]]

    def __post_init__(self) -> None:
        if not self.entries:
            raise SpecError("specification has no input entries")
        input_widths = {len(i) for i in self.entries}
        if len(input_widths) != 1:
            raise SpecError(f"inconsistent input widths: {sorted(input_widths)}")
        output_widths: set[int] = set()
        for i, dist in self.entries.items():
            if any(ch not in "01" for ch in i):
                raise SpecError(f"input key {i!r} is not a bitstring")
            if not dist:
                raise SpecError(f"input {i!r} has an empty distribution")
            for h, p in dist.items():
                output_widths.add(len(h))
                if any(ch not in "01" for ch in h):
                    raise SpecError(f"output key {h!r} is not a bitstring")
                if not 0.0 < p <= 1.0:
                    raise SpecError(
                        f"probability of output {h!r} for input {i!r} must be in "
                        f"(0, 1], got {p}"
                    )
            total = sum(dist.values())
            if abs(total - 1.0) > 1e-6:
                raise SpecError(
                    f"distribution for input {i!r} sums to {total}, expected 1"
                )
        if len(output_widths) != 1:
            raise SpecError(f"inconsistent output widths: {sorted(output_widths)}")

    @property
    def input_width(self) -> int:
        return len(next(iter(self.entries)))

    @property
    def output_width(self) -> int:
        first = next(iter(self.entries.values()))
        return len(next(iter(first)))

    def distribution(self, i: str) -> dict[str, float]:
        try:
            return self.entries[i]
        except KeyError:
            raise SpecError(f"specification has no entry for input {i!r}") from None


def spec_from_json(text: str) -> ProgramSpec:
    """Parse the spec file format: {"inputs": {input: {output: prob}}}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"specification is not valid JSON: {exc}") from None
    if not isinstance(data, dict) or "inputs" not in data:
        raise SpecError('specification must be an object with an "inputs" key')
    inputs = data["inputs"]
    if not isinstance(inputs, dict):
        raise SpecError('"inputs" must map input bitstrings to distributions')
    entries: dict[str, dict[str, float]] = {}
    for i, dist in inputs.items():
        if not isinstance(dist, dict):
            raise SpecError(f"distribution for input {i!r} must be an object")
        entries[str(i)] = {str(h): float(p) for h, p in dist.items()}
    return ProgramSpec(entries)


def spec_to_json(spec: ProgramSpec) -> str:
    """Canonical (sorted, indented) spec file content."""
    payload = {
        "inputs": {
            i: dict(sorted(spec.entries[i].items())) for i in sorted(spec.entries)
        }
    }
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def load_spec(path) -> ProgramSpec:
    with open(path, encoding="utf-8") as fh:
        return spec_from_json(fh.read())


@dataclass(frozen=True)
class Verdict:
    """Assessment of one test: pass, or one of the two failure types."""

    kind: VerdictKind
    alpha: float
    witness: str | None = None
    statistic: float | None = None
    p_value: float | None = None


def shots_for_input(spec: ProgramSpec, i: str) -> int:
    """Number of executions: outputs with nonzero expected probability x 100."""
    return len(spec.distribution(i)) * SHOTS_PER_OUTPUT


def check_uof(spec: ProgramSpec, i: str, histogram: dict[str, int]) -> str | None:
    """Smallest observed output with expected probability zero, if any."""
    expected = spec.distribution(i)
    width = spec.output_width
    unexpected = []
    for h, count in histogram.items():
        if len(h) != width:
            raise ValueError(
                f"observed output {h!r} has width {len(h)}, expected {width}"
            )
        if count > 0 and h not in expected:
            unexpected.append(h)
    return min(unexpected) if unexpected else None


def chi_square_statistic(
    observed: dict[str, int], expected: dict[str, float]
) -> tuple[float, int]:
    """Pearson statistic and degrees of freedom over the expected support.

    Outputs absent from the histogram count as zero; an observed output
    outside the expected support is a contract violation (unexpected outputs
    must be handled first).
    """
    total = sum(observed.values())
    if total < 1:
        raise ValueError("histogram is empty")
    for h, count in observed.items():
        if count > 0 and h not in expected:
            raise ValueError(
                f"observed output {h!r} has expected probability 0; "
                "unexpected outputs must be excluded before the chi-square test"
            )
    statistic = 0.0
    for h, p in expected.items():
        if p <= 0:
            raise ValueError(f"expected probability for {h!r} must be positive")
        exp_count = total * p
        diff = observed.get(h, 0) - exp_count
        statistic += diff * diff / exp_count
    return statistic, len(expected) - 1


def chi_square_pvalue(statistic: float, df: int) -> float:
    """Upper-tail probability of the chi-square distribution with ``df`` dof."""
    if df < 1:
        raise ValueError(f"degrees of freedom must be >= 1, got {df}")
    if statistic < 0:
        raise ValueError(f"statistic must be nonnegative, got {statistic}")
    return regularized_gamma_q(df / 2.0, statistic / 2.0)


def assess(
    spec: ProgramSpec, i: str, histogram: dict[str, int], alpha: float
) -> Verdict:
    """Classify one test result; the unexpected-output check takes priority."""
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    expected = spec.distribution(i)
    total = sum(histogram.values())
    required = shots_for_input(spec, i)
    if total != required:
        raise ValueError(
            f"histogram total {total} does not match the required shot count "
            f"{required} for input {i!r}"
        )
    witness = check_uof(spec, i, histogram)
    if witness is not None:
        return Verdict(kind="uof", alpha=alpha, witness=witness)
    if len(expected) < 2:
        return Verdict(kind="pass", alpha=alpha)
    statistic, df = chi_square_statistic(histogram, expected)
    p_value = chi_square_pvalue(statistic, df)
    kind: VerdictKind = "wodf" if p_value < alpha else "pass"
    return Verdict(kind=kind, alpha=alpha, statistic=statistic, p_value=p_value)
