"""Tests for the cooperation gate and the negotiation ladder."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coopsec import (
    ChannelGains,
    ConstraintMode,
    Geometry,
    NegotiationPolicy,
    NoiseModel,
    PowerBudget,
    ScenarioKind,
    adaptive_step,
    distance_constraints_met,
    mac_allocation,
    negotiate,
    noncoop_allocation,
    one_side_allocation,
    relay_allocation,
)

STD_GAINS = ChannelGains(g_ab=0.4, g_ae=0.3, g_jb=0.5, g_je=0.3, g_aj=0.2)
STD_BUDGETS = PowerBudget(p_a_max=5.0, p_j_max=5.0)


def geometry_with_eve_at(d_ae: float) -> Geometry:
    return Geometry(d_ab=1.0, d_ae=d_ae, d_jb=1.0, d_je=2.0, d_aj=2.0, eta=2.0)


class TestConstraintPredicate:
    """The gate holds while the eavesdropper is close and breaks as she leaves."""

    @pytest.mark.parametrize(
        "d_ae, expected",
        [(2.0, True), (math.sqrt(6.0), True), (3.0, False)],
    )
    def test_corrected_gate_over_eavesdropper_distance(self, d_ae, expected):
        verdict = distance_constraints_met(
            STD_GAINS,
            geometry_with_eve_at(d_ae),
            sigma2=1.0,
            alpha=0.8,
            p_a=5.0,
            p_j=5.0,
            mode=ConstraintMode.CORRECTED,
        )
        assert verdict.all_met is expected

    def test_boundary_square_counts_as_satisfied(self):
        # sqrt(6)**2 lands at 6.000000000000001; the comparison must not
        # flip on that last-bit excess
        verdict = distance_constraints_met(
            STD_GAINS,
            geometry_with_eve_at(math.sqrt(6.0)),
            1.0,
            0.8,
            5.0,
            5.0,
            mode="corrected",
        )
        assert verdict.distance_alice_eve
        assert verdict.snr_condition_alice

    def test_published_and_corrected_modes_diverge_when_pair_distances_differ(self):
        # d_ab=1 while d_aj=2: the published pair term is much tighter
        geometry = geometry_with_eve_at(2.0)
        published = distance_constraints_met(
            STD_GAINS, geometry, 1.0, 0.8, 5.0, 5.0, mode=ConstraintMode.AS_PUBLISHED
        )
        corrected = distance_constraints_met(
            STD_GAINS, geometry, 1.0, 0.8, 5.0, 5.0, mode=ConstraintMode.CORRECTED
        )
        assert not published.snr_condition_alice
        assert corrected.snr_condition_alice
        assert not published.all_met
        assert corrected.all_met

    def test_modes_coincide_when_pair_distances_match(self):
        geometry = Geometry(d_ab=2.0, d_ae=2.0, d_jb=1.0, d_je=2.0, d_aj=2.0, eta=2.0)
        published = distance_constraints_met(
            STD_GAINS, geometry, 1.0, 0.8, 5.0, 5.0, mode="paper"
        )
        corrected = distance_constraints_met(
            STD_GAINS, geometry, 1.0, 0.8, 5.0, 5.0, mode="corrected"
        )
        assert published == corrected

    def test_corrected_snr_conditions_match_distance_conditions_at_square_law(self):
        # with the pair term corrected and eta=2 the noise terms are the only
        # survivors of cross-multiplication, so the two condition families
        # must agree flag for flag
        for d_ae in (1.0, 2.0, 2.6, 3.5):
            for d_je in (1.0, 2.4, 3.0):
                geometry = Geometry(
                    d_ab=1.5, d_ae=d_ae, d_jb=1.0, d_je=d_je, d_aj=2.0, eta=2.0
                )
                verdict = distance_constraints_met(
                    STD_GAINS, geometry, 1.3, 0.7, 4.0, 6.0, mode="corrected"
                )
                assert verdict.snr_condition_alice == verdict.distance_alice_eve
                assert verdict.snr_condition_john == verdict.distance_john_eve

    @settings(max_examples=60, deadline=None)
    @given(
        p_a=st.floats(min_value=0.0, max_value=50.0),
        p_j=st.floats(min_value=0.0, max_value=50.0),
    )
    def test_verdict_does_not_depend_on_main_powers(self, p_a, p_j):
        # both spellings put the same gain product on the power term of each
        # side, so cross-multiplication cancels it exactly
        geometry = geometry_with_eve_at(2.3)
        for mode in ConstraintMode:
            base = distance_constraints_met(
                STD_GAINS, geometry, 1.0, 0.8, 5.0, 5.0, mode=mode
            )
            moved = distance_constraints_met(
                STD_GAINS, geometry, 1.0, 0.8, p_a, p_j, mode=mode
            )
            assert base == moved

    def test_as_dict_keys_and_conjunction(self):
        verdict = distance_constraints_met(
            STD_GAINS, geometry_with_eve_at(2.0), 1.0, 0.8, 5.0, 5.0, "corrected"
        )
        payload = verdict.as_dict()
        assert list(payload) == [
            "snr_condition_alice",
            "snr_condition_john",
            "distance_alice_eve",
            "distance_john_eve",
            "all_met",
        ]
        assert payload["all_met"] == all(
            payload[k] for k in payload if k != "all_met"
        )

    def test_rejects_bad_inputs(self):
        geometry = geometry_with_eve_at(2.0)
        with pytest.raises(ValueError):
            distance_constraints_met(STD_GAINS, geometry, 0.0, 0.8, 5.0, 5.0)
        with pytest.raises(ValueError):
            distance_constraints_met(STD_GAINS, geometry, 1.0, 0.0, 5.0, 5.0)
        with pytest.raises(ValueError):
            distance_constraints_met(STD_GAINS, geometry, 1.0, 0.8, -1.0, 5.0)


class TestNegotiationLadder:
    GEOMETRY = geometry_with_eve_at(2.0)

    def run(self, policy: NegotiationPolicy, geometry: Geometry | None = None):
        return negotiate(
            policy,
            STD_GAINS,
            geometry or self.GEOMETRY,
            sigma2=1.0,
            price=0.01,
            budgets=STD_BUDGETS,
            mode=ConstraintMode.CORRECTED,
        )

    def test_full_agreement_lands_on_mutual_relaying(self):
        mode, allocation = self.run(NegotiationPolicy())
        assert mode is ScenarioKind.RELAY_COOP
        assert allocation.mode is ScenarioKind.RELAY_COOP

    def test_relay_refusal_falls_back_to_power_cooperation(self):
        mode, _ = self.run(NegotiationPolicy(john_accepts_relay=False))
        assert mode is ScenarioKind.MAC_COOP
        mode, _ = self.run(NegotiationPolicy(alice_accepts_relay=False))
        assert mode is ScenarioKind.MAC_COOP

    def test_next_refusal_falls_back_to_one_sided_help(self):
        policy = NegotiationPolicy(john_accepts_relay=False, john_accepts_mac=False)
        mode, allocation = self.run(policy)
        assert mode is ScenarioKind.ONE_SIDE_COOP
        assert allocation.mode is ScenarioKind.ONE_SIDE_COOP

    def test_refusing_everything_means_no_cooperation(self):
        policy = NegotiationPolicy(
            john_accepts_relay=False,
            john_accepts_mac=False,
            john_accepts_one_side=False,
        )
        mode, allocation = self.run(policy)
        assert mode is ScenarioKind.NON_COOP
        assert allocation.mode is ScenarioKind.NON_COOP

    def test_failed_gate_skips_the_ladder_entirely(self):
        mode, allocation = self.run(NegotiationPolicy(), geometry_with_eve_at(3.0))
        assert mode is ScenarioKind.NON_COOP
        assert allocation.mode is ScenarioKind.NON_COOP

    def test_allocations_are_computed_over_attenuated_gains(self):
        noise = NoiseModel(1.0)
        attenuated = STD_GAINS.effective(self.GEOMETRY)
        cases = [
            (NegotiationPolicy(), relay_allocation(
                attenuated, noise, STD_BUDGETS, alpha=0.8, price=0.01
            )),
            (NegotiationPolicy(john_accepts_relay=False), mac_allocation(
                attenuated, noise, STD_BUDGETS, alpha=0.8, price=0.01
            )),
            (NegotiationPolicy(john_accepts_relay=False, john_accepts_mac=False),
             one_side_allocation(attenuated, noise, STD_BUDGETS, alpha=0.8, price=0.01)),
        ]
        for policy, expected in cases:
            _, allocation = self.run(policy)
            assert allocation == expected
        _, allocation = self.run(NegotiationPolicy(), geometry_with_eve_at(3.0))
        far = STD_GAINS.effective(geometry_with_eve_at(3.0))
        assert allocation == noncoop_allocation(far, noise, STD_BUDGETS, price=0.01)

    def test_policy_rejects_cooperation_level_out_of_range(self):
        with pytest.raises(ValueError):
            NegotiationPolicy(alpha=1.5)
        with pytest.raises(ValueError):
            NegotiationPolicy(alpha=-0.1)


class TestAdaptiveStep:
    def step(self, previous, d_ae):
        return adaptive_step(
            previous,
            NegotiationPolicy(),
            STD_GAINS,
            geometry_with_eve_at(d_ae),
            sigma2=1.0,
            price=0.01,
            budgets=STD_BUDGETS,
            mode="corrected",
        )

    def test_unchanged_geometry_keeps_mode(self):
        mode, _, changed = self.step(ScenarioKind.RELAY_COOP, 2.0)
        assert mode is ScenarioKind.RELAY_COOP
        assert changed is False

    def test_eavesdropper_leaving_flips_to_no_cooperation(self):
        mode, _, changed = self.step(ScenarioKind.RELAY_COOP, 3.0)
        assert mode is ScenarioKind.NON_COOP
        assert changed is True

    def test_eavesdropper_returning_flips_back(self):
        mode, _, changed = self.step("non_coop", 2.0)
        assert mode is ScenarioKind.RELAY_COOP
        assert changed is True

    def test_previous_mode_accepts_strings(self):
        mode, _, changed = self.step("relay_coop", 2.0)
        assert mode is ScenarioKind.RELAY_COOP
        assert changed is False
