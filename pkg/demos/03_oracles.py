"""The two statistical oracles: unexpected output, wrong output distribution."""

from qcomb.oracle import (
    ProgramSpec,
    assess,
    chi_square_pvalue,
    chi_square_statistic,
    shots_for_input,
)

# A program specification gives the expected output distribution per input.
spec = ProgramSpec({"00": {"00": 0.5, "11": 0.5}})

# Shot counts are derived from the spec: 100 per possible output.
print("shots for input 00:", shots_for_input(spec, "00"))

# A histogram whose support matches the spec and whose frequencies are close
# passes; the chi-square statistic and p-value are recorded on the verdict.
verdict = assess(spec, "00", {"00": 104, "11": 96}, alpha=0.01)
print(f"\nbalanced: {verdict.kind} (stat={verdict.statistic:.3f}, p={verdict.p_value:.3f})")

# A strongly skewed histogram fails the goodness-of-fit test (wodf).
verdict = assess(spec, "00", {"00": 140, "11": 60}, alpha=0.01)
print(f"skewed:   {verdict.kind} (stat={verdict.statistic:.3f}, p={verdict.p_value:.2e})")

# Any output with specified probability zero fails immediately (uof),
# whatever the rest of the histogram looks like.
verdict = assess(spec, "00", {"00": 120, "11": 79, "01": 1}, alpha=0.01)
print(f"unexpected output: {verdict.kind} (witness={verdict.witness})")

# The chi-square machinery is exposed directly as well.
stat, df = chi_square_statistic({"00": 120, "11": 80}, {"00": 0.5, "11": 0.5})
print(f"\nstat for 120/80 vs 50/50: {stat} (df={df})")
print("p-value:", chi_square_pvalue(stat, df))
print("p-value at the classic 5% critical value:", chi_square_pvalue(3.841, 1))
