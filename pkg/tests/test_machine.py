"""Tests for the normalization memory and the gate-restriction verdicts."""

import numpy as np
import pytest

from golden import RESTRICTION_ROWS
from revlogic.derivation import Connective, Fixing, restrict
from revlogic.device import AA, DD, PROBE_STATES, DeviceConfig, equilibrium_angle, sample_many
from revlogic.library import GateId, build
from revlogic.machine import (
    CONCLUSIONS,
    Ancilla,
    NormalizationId,
    U4Unclassifiable,
    coherence_check,
    delta_normalize,
    machine_table,
    normalize,
    u4_tolerance,
    verify_all_conclusions,
    verify_conclusion,
)

DISTINGUISHABLE = DeviceConfig(distinguishable=True)


class TestNormalize:
    def test_u1_zero_iff_vertical(self):
        assert normalize("u1", 0.0) == 0
        assert normalize("u1", 0.78) == 1

    def test_u2_threshold_at_boundary(self):
        assert normalize("u2", 0.93) == 0
        assert normalize("u2", 1.0) == 0
        assert normalize("u2", 1.12) == 1

    def test_u3_band(self):
        assert normalize("u3", 0.0) == 0
        assert normalize("u3", 0.855) == 1
        assert normalize("u3", 1.12) == 0

    def test_bars_complement(self):
        for base, bar in (("u1", "u1bar"), ("u2", "u2bar"), ("u3", "u3bar")):
            for alpha in (0.0, 0.78, 0.93, 1.0, 1.12):
                assert normalize(bar, alpha) == 1 - normalize(base, alpha)

    def test_u4_table(self):
        cfg = DISTINGUISHABLE
        assert normalize("u4", 0.0, cfg) == 1
        assert normalize("u4", cfg.alpha_hat1, cfg) == 1
        assert normalize("u4", cfg.alpha_tilde1, cfg) == 0
        assert normalize("u4", cfg.alpha2, cfg) == 1

    def test_u4_nearest_mean_tolerance(self):
        cfg = DISTINGUISHABLE
        tol = u4_tolerance(cfg)
        assert tol == pytest.approx(0.075)
        assert normalize("u4", cfg.alpha_tilde1 + tol / 2, cfg) == 0
        with pytest.raises(U4Unclassifiable):
            normalize("u4", 0.5, cfg)

    def test_u4_needs_distinguishable_config(self):
        with pytest.raises(U4Unclassifiable):
            normalize("u4", 0.0, DeviceConfig())

    def test_delta_is_not_a_plain_angle_map(self):
        with pytest.raises(ValueError):
            normalize("delta", 0.5)

    def test_negative_angle_rejected(self):
        with pytest.raises(ValueError):
            normalize("u1", -0.1)


class TestDeltaNormalize:
    def test_vertical_stays_vertical(self):
        assert delta_normalize(0.0, 0.0) == 0

    def test_deflected_returning_to_vertical(self):
        assert delta_normalize(0.78, 0.0) == 1

    def test_deflected_staying_deflected_even_at_new_angle(self):
        assert delta_normalize(0.78, 1.12) == 0

    def test_vertical_becoming_deflected(self):
        assert delta_normalize(0.0, 0.855) == 1


class TestMachineTable:
    @pytest.mark.parametrize("norm,connective", [
        ("u1", Connective.OR),
        ("u2", Connective.AND),
        ("u3", Connective.XOR),
        ("u1bar", Connective.NOR),
        ("u2bar", Connective.NAND),
        ("u3bar", Connective.NXOR),
    ])
    def test_connectives(self, norm, connective):
        assert machine_table(norm).connective is connective

    def test_u4_gives_implication(self):
        table = machine_table("u4", cfg=DISTINGUISHABLE)
        assert table.connective is Connective.IMPLIES_AB

    def test_delta_gives_xor_of_lines_2_and_3(self):
        table = machine_table("delta")
        assert table.connective is Connective.XOR
        assert table.ancilla_line == 1
        assert table.free_lines == (2, 3)

    def test_nor_rows_match_golden_restriction(self):
        rows = [(str(a), str(b)) for a, b in machine_table("u1bar").rows]
        assert rows == RESTRICTION_ROWS[("cl", (3, 1))]

    def test_probe_lines_pass_through_and_ancilla_constant(self):
        for norm in NormalizationId:
            cfg = DISTINGUISHABLE if norm is NormalizationId.U4 else None
            table = machine_table(norm, cfg=cfg)
            col = table.ancilla_line - 1
            ancilla_bits = {win.bits[col] for win, _ in table.rows}
            assert len(ancilla_bits) == 1
            for win, wout in table.rows:
                assert win.bits[:2] == wout.bits[:2]

    def test_deflected_ancilla_breaks_the_nor_reading(self):
        # starting deflected, u1 labels the ancilla 1 but the device still
        # relaxes DD to vertical: the result is not the line-3=1 restriction
        table = machine_table("u1", Ancilla.DEFLECTED)
        rows = {win: wout for win, wout in table.rows}
        gate_rows = {
            Fixing.of(3, {3: 1}).full_word(f.bits): out
            for f, out in restrict(build(GateId.CL), Fixing.of(3, {3: 1}))
        }
        assert rows != gate_rows


class TestVerdicts:
    def test_u1_verdict_fields(self):
        verdict = verify_conclusion("u1")
        assert verdict.passed
        assert verdict.gate_id is GateId.CL
        assert verdict.fixing.assignments == {3: 0}
        assert verdict.table.connective is Connective.OR

    def test_u2bar_matches_toffoli_nand(self):
        verdict = verify_conclusion("u2bar")
        assert verdict.passed
        assert verdict.gate_id is GateId.TOFFOLI
        assert verdict.fixing.assignments == {3: 1}
        assert verdict.expected is Connective.NAND

    def test_u4_matches_i_gate_implication(self):
        verdict = verify_conclusion("u4")
        assert verdict.passed
        assert verdict.gate_id is GateId.I

    def test_all_conclusions_pass(self):
        verdicts = verify_all_conclusions()
        assert len(verdicts) == len(CONCLUSIONS) == 8
        assert all(v.passed for v in verdicts)

    def test_delta_matches_cl_with_line1_fixed(self):
        verdict = verify_conclusion("delta")
        assert verdict.passed
        assert verdict.fixing.assignments == {1: 0}
        assert verdict.expected is Connective.XOR


class TestComplementDuality:
    @pytest.mark.parametrize("base,bar", [
        ("u1", "u1bar"), ("u2", "u2bar"), ("u3", "u3bar"),
    ])
    def test_bar_connective_is_pointwise_negation(self, base, bar):
        low = machine_table(base)
        high = machine_table(bar)
        low_truth = tuple(out.bits[2] for _, out in low.rows)
        high_truth = tuple(out.bits[2] for _, out in high.rows)
        assert tuple(1 - b for b in low_truth) == high_truth


class TestReversibilityWitness:
    def test_output_triples_pairwise_distinct_for_all_ids(self):
        for norm in NormalizationId:
            cfg = DISTINGUISHABLE if norm is NormalizationId.U4 else None
            table = machine_table(norm, cfg=cfg)
            outs = [out for _, out in table.rows]
            assert len(set(outs)) == len(outs), norm

    def test_u2_output_bit_alone_is_not_injective(self):
        # the garbage pair is what disambiguates the AND table
        bits = [out.bits[2] for _, out in machine_table("u2").rows]
        assert len(set(bits)) < len(bits)


class TestCoherence:
    def test_rows_and_verdict(self):
        result = coherence_check()
        assert result.passed
        by_state = {row.probes: row for row in result.rows}
        assert (by_state[DD].u1_out, by_state[DD].delta) == (0, 0)
        assert (by_state[AA].u1_out, by_state[AA].delta) == (1, 1)


class TestNoiseRobustness:
    def test_noisy_u1_classification_mostly_reproduces_the_table(self):
        cfg = DeviceConfig()
        rng = np.random.default_rng(2024)
        trials = 1000
        wrong = 0
        for ps in PROBE_STATES:
            expected = normalize("u1", equilibrium_angle(ps, cfg), cfg)
            values = sample_many(ps, trials, cfg, rng)
            bits = np.where(values > 3 * cfg.sigma, 1, 0)
            wrong += int((bits != expected).sum())
        assert wrong / (4 * trials) < 1e-3
