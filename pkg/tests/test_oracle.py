"""Oracle tests: spec validation, shot formula, uof/wodf classification,
and the chi-square engine against an independent reference."""

import itertools
import json

import numpy as np
import pytest
import scipy.stats
from hypothesis import given, settings
from hypothesis import strategies as st

from qcomb.oracle import (
    ProgramSpec,
    SpecError,
    assess,
    check_uof,
    chi_square_pvalue,
    chi_square_statistic,
    load_spec,
    shots_for_input,
    spec_from_json,
    spec_to_json,
)

BELL_SPEC = ProgramSpec({"00": {"00": 0.5, "11": 0.5}})


class TestProgramSpec:
    def test_distribution_must_sum_to_one(self):
        with pytest.raises(SpecError, match="sums to"):
            ProgramSpec({"0": {"0": 0.6, "1": 0.3}})

    def test_zero_probability_rejected(self):
        with pytest.raises(SpecError, match="must be in"):
            ProgramSpec({"0": {"0": 1.0, "1": 0.0}})

    def test_inconsistent_widths_rejected(self):
        with pytest.raises(SpecError, match="input widths"):
            ProgramSpec({"0": {"0": 1.0}, "00": {"0": 1.0}})
        with pytest.raises(SpecError, match="output widths"):
            ProgramSpec({"0": {"0": 0.5, "11": 0.5}})

    def test_missing_input_is_spec_error(self):
        with pytest.raises(SpecError, match="no entry for input '01'"):
            BELL_SPEC.distribution("01")

    def test_json_roundtrip(self):
        text = spec_to_json(BELL_SPEC)
        assert spec_from_json(text) == BELL_SPEC
        payload = json.loads(text)
        assert payload == {"inputs": {"00": {"00": 0.5, "11": 0.5}}}

    def test_load_spec_file(self, tmp_path):
        path = tmp_path / "spec.json"
        path.write_text(spec_to_json(BELL_SPEC))
        assert load_spec(path) == BELL_SPEC

    def test_malformed_json(self):
        with pytest.raises(SpecError, match="not valid JSON"):
            spec_from_json("{nope")
        with pytest.raises(SpecError, match='"inputs"'):
            spec_from_json('{"other": 1}')


class TestShotsForInput:
    def test_two_output_spec(self):
        assert shots_for_input(BELL_SPEC, "00") == 200

    def test_single_output_spec(self):
        spec = ProgramSpec({"1": {"0": 1.0}})
        assert shots_for_input(spec, "1") == 100

    def test_four_output_spec(self):
        spec = ProgramSpec({"0": {"00": 0.25, "01": 0.25, "10": 0.25, "11": 0.25}})
        assert shots_for_input(spec, "0") == 400

    def test_missing_input(self):
        with pytest.raises(SpecError):
            shots_for_input(BELL_SPEC, "10")


class TestCheckUof:
    def test_witness_found(self):
        assert check_uof(BELL_SPEC, "00", {"00": 150, "11": 49, "01": 1}) == "01"

    def test_no_witness_within_support(self):
        assert check_uof(BELL_SPEC, "00", {"00": 120, "11": 80}) is None

    def test_smallest_witness_wins(self):
        assert check_uof(BELL_SPEC, "00", {"10": 1, "01": 1}) == "01"

    def test_zero_counts_ignored(self):
        assert check_uof(BELL_SPEC, "00", {"00": 200, "01": 0}) is None

    def test_width_mismatch(self):
        with pytest.raises(ValueError, match="width"):
            check_uof(BELL_SPEC, "00", {"0": 200})

    def test_exhaustive_small_histograms(self):
        # uof triggers iff some observed output has spec probability zero
        spec = ProgramSpec({"0": {"0": 1.0}})
        for c0, c1 in itertools.product(range(7), repeat=2):
            if c0 + c1 == 0:
                continue
            hist = {k: v for k, v in (("0", c0), ("1", c1))}
            expected = "1" if c1 > 0 else None
            assert check_uof(spec, "0", hist) == expected
        two = ProgramSpec({"0": {"0": 0.5, "1": 0.5}})
        for c0, c1 in itertools.product(range(7), repeat=2):
            if c0 + c1 == 0:
                continue
            assert check_uof(two, "0", {"0": c0, "1": c1}) is None


class TestChiSquareStatistic:
    def test_hand_computed_value(self):
        # (120-100)^2/100 + (80-100)^2/100 = 8.0
        stat, df = chi_square_statistic({"00": 120, "11": 80}, {"00": 0.5, "11": 0.5})
        assert stat == pytest.approx(8.0, abs=1e-12)
        assert df == 1

    def test_exact_match_gives_zero(self):
        stat, df = chi_square_statistic({"00": 100, "11": 100}, {"00": 0.5, "11": 0.5})
        assert stat == 0.0 and df == 1

    def test_single_output_support(self):
        stat, df = chi_square_statistic({"0": 100}, {"0": 1.0})
        assert stat == 0.0 and df == 0

    def test_missing_observed_counts_as_zero(self):
        stat, df = chi_square_statistic({"00": 200}, {"00": 0.5, "11": 0.5})
        assert stat == pytest.approx(200.0)
        assert df == 1

    def test_observed_outside_support_rejected(self):
        with pytest.raises(ValueError, match="probability 0"):
            chi_square_statistic({"01": 1, "00": 199}, {"00": 0.5, "11": 0.5})

    def test_empty_histogram_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            chi_square_statistic({}, {"0": 1.0})

    def test_matches_scipy_formula(self):
        rng = np.random.default_rng(11)
        for _ in range(25):
            size = int(rng.integers(2, 6))
            probs = rng.dirichlet(np.ones(size))
            total = int(rng.integers(50, 500))
            counts = rng.multinomial(total, probs)
            observed = {format(i, "03b"): int(c) for i, c in enumerate(counts)}
            expected = {format(i, "03b"): float(p) for i, p in enumerate(probs)}
            stat, df = chi_square_statistic(observed, expected)
            ref = scipy.stats.chisquare(counts, total * probs)
            assert stat == pytest.approx(ref.statistic, rel=1e-12)
            assert df == size - 1


class TestChiSquarePvalue:
    def test_zero_statistic(self):
        assert chi_square_pvalue(0.0, 1) == 1.0
        assert chi_square_pvalue(0.0, 7) == 1.0

    def test_frozen_reference_points(self):
        assert chi_square_pvalue(8.0, 1) == pytest.approx(0.004678, abs=1e-5)
        assert chi_square_pvalue(3.841, 1) == pytest.approx(0.05, abs=1e-4)
        assert chi_square_pvalue(5.991, 2) == pytest.approx(0.05, abs=1e-3)
        assert chi_square_pvalue(7.815, 3) == pytest.approx(0.05, abs=1e-3)

    def test_against_independent_reference(self):
        for df in (1, 2, 3, 5, 10, 30, 100):
            for stat in (0.0, 0.01, 0.5, 1.0, 2.5, 5.0, 10.0, 25.0, 80.0, 300.0):
                mine = chi_square_pvalue(stat, df)
                ref = scipy.stats.chi2.sf(stat, df)
                assert abs(mine - ref) <= 1e-8, (stat, df)

    @given(
        stat=st.floats(min_value=0.0, max_value=1e4),
        df=st.integers(min_value=1, max_value=200),
    )
    @settings(max_examples=200, deadline=None)
    def test_reference_property(self, stat, df):
        assert abs(chi_square_pvalue(stat, df) - scipy.stats.chi2.sf(stat, df)) <= 1e-8

    def test_monotone_in_statistic(self):
        for df in (1, 3, 9):
            values = [chi_square_pvalue(s, df) for s in np.linspace(0, 50, 200)]
            assert all(a >= b for a, b in zip(values, values[1:]))
            assert values[0] == 1.0

    def test_invalid_arguments(self):
        with pytest.raises(ValueError, match="degrees of freedom"):
            chi_square_pvalue(1.0, 0)
        with pytest.raises(ValueError, match="nonnegative"):
            chi_square_pvalue(-0.5, 1)


class TestAssess:
    def test_balanced_pass(self):
        verdict = assess(BELL_SPEC, "00", {"00": 100, "11": 100}, alpha=0.01)
        assert verdict.kind == "pass"
        assert verdict.statistic == 0.0
        assert verdict.p_value == 1.0
        assert verdict.alpha == 0.01

    def test_skewed_wodf(self):
        verdict = assess(BELL_SPEC, "00", {"00": 120, "11": 80}, alpha=0.01)
        assert verdict.kind == "wodf"
        assert verdict.statistic == pytest.approx(8.0)
        assert verdict.p_value == pytest.approx(0.004678, abs=1e-5)

    def test_uof_takes_priority(self):
        verdict = assess(BELL_SPEC, "00", {"00": 199, "01": 1}, alpha=0.01)
        assert verdict.kind == "uof"
        assert verdict.witness == "01"
        assert verdict.statistic is None and verdict.p_value is None

    def test_single_output_cannot_wodf(self):
        spec = ProgramSpec({"0": {"1": 1.0}})
        verdict = assess(spec, "0", {"1": 100}, alpha=0.01)
        assert verdict.kind == "pass"
        assert verdict.statistic is None

    def test_total_mismatch_rejected(self):
        with pytest.raises(ValueError, match="shot count"):
            assess(BELL_SPEC, "00", {"00": 99, "11": 99}, alpha=0.01)

    def test_alpha_bounds(self):
        with pytest.raises(ValueError, match="alpha"):
            assess(BELL_SPEC, "00", {"00": 100, "11": 100}, alpha=1.5)

    def test_false_positive_rate_under_alpha(self):
        # sampling a correct program's own spec: expect ~alpha wodf rate
        probs = np.array([0.5, 0.5])
        failures = 0
        trials = 200
        for seed in range(trials):
            rng = np.random.default_rng(seed)
            counts = rng.multinomial(200, probs)
            hist = {"00": int(counts[0]), "11": int(counts[1])}
            verdict = assess(BELL_SPEC, "00", hist, alpha=0.01)
            assert verdict.kind in ("pass", "wodf")
            if verdict.kind == "wodf":
                failures += 1
        assert failures <= 0.05 * trials
