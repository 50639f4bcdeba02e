"""Tests for the TRCB, CBR and baseline policies."""

import itertools
import math

import numpy as np
import pytest

from prebandit.core.errors import InvalidInputError
from prebandit.model import (
    ActionSpace,
    ChoiceObservation,
    Preselection,
    ScoreVector,
    reference_reward,
    relative_scores,
    sample_choice,
)
from prebandit.policies import (
    CbrPolicy,
    CbrSpec,
    CbrState,
    OraclePolicy,
    SShapedFunction,
    TrcbPolicy,
    TrcbSpec,
    TrcbState,
    UniformSpec,
    WinMatrix,
    baseline_oracle_suggest,
    baseline_uniform_suggest,
    build_policy,
    cbr_confidence,
    cbr_inclusion_prob,
    cbr_observe,
    cbr_suggest,
    reference_arm,
    trcb_confidence_width,
    trcb_observe,
    trcb_perturbed_score,
    trcb_suggest,
)
from prebandit.policies import trcb as trcb_module
from prebandit.policies.schemas import CbrSnapshot, TrcbSnapshot
from prebandit.policies.trcb import perturb
from tests.helpers import subset


def _play(policy, v, rounds, rng):
    """Suggest/choose/observe loop returning the offered subsets."""
    offered = []
    for t in range(1, rounds + 1):
        S = policy.suggest(rng)
        chosen = sample_choice(S, v, rng)
        policy.observe(ChoiceObservation(offered=S, chosen=chosen, round=t))
        offered.append(S)
    return offered


class TestWinMatrix:
    """Tests for win counts and the reference arm."""

    def test_record(self):
        """Test that only the chosen arm's row grows."""
        W = WinMatrix.zeros(3)
        W.record(ChoiceObservation(offered=subset(1, 2, 3), chosen=1))
        assert W.counts[1].tolist() == [1, 0, 1]
        assert W.counts[0, 2] == 0
        assert W.total() == 2

    def test_reference_arm_of_zeros(self):
        """Test the lowest-index tie-break."""
        assert reference_arm(WinMatrix.zeros(4)) == 0

    def test_reference_arm_counts(self):
        """Test a hand-counted majority."""
        W = WinMatrix(counts=np.array([[0, 3, 2], [1, 0, 1], [0, 1, 0]], dtype=np.int64))
        assert reference_arm(W) == 0

    def test_reference_arm_dominant_row(self):
        """Test that a strictly dominant arm is the reference."""
        W = WinMatrix(counts=np.array([[0, 0, 1], [4, 0, 2], [3, 1, 0]], dtype=np.int64))
        assert reference_arm(W) == 1


class TestSShapedFunction:
    """Tests for the clamp and arctan S-shaped functions."""

    @pytest.mark.parametrize("kind", ["clamp", "arctan"])
    def test_midpoint(self, kind):
        """Test sigma(1/2) = 1/2."""
        assert SShapedFunction(kind=kind)(0.5) == pytest.approx(0.5)

    @pytest.mark.parametrize("kind", ["clamp", "arctan"])
    def test_saturation(self, kind):
        """Test the values outside (0, 1)."""
        sigma = SShapedFunction(kind=kind)
        assert sigma(-0.3) == 0.0
        assert sigma(0.0) == 0.0
        assert sigma(1.0) == 1.0
        assert sigma(2.5) == 1.0

    @pytest.mark.parametrize("kind", ["clamp", "arctan"])
    def test_monotone(self, kind):
        """Test monotonicity on a grid."""
        sigma = SShapedFunction(kind=kind)
        values = [sigma(x) for x in np.linspace(-0.5, 1.5, 401)]
        assert all(b >= a for a, b in zip(values, values[1:]))

    def test_arctan_positive_near_zero(self):
        """Test that the arctan variant stays positive for tiny positive inputs."""
        sigma = SShapedFunction(kind="arctan")
        for x in (1e-4, 1e-8, 1e-9, 1e-12, 1e-100):
            assert sigma(x) > 0.0
        assert sigma(1e-9) == pytest.approx(2e-18 / math.pi, rel=1e-6)

    def test_clamp_is_identity_inside(self):
        """Test the clamp variant on the unit interval."""
        assert SShapedFunction()(0.75) == 0.75


class TestTrcb:
    """Tests for the TRCB policy."""

    def test_width_unbounded_without_comparisons(self):
        """Test the never-compared convention."""
        state = TrcbState.initial(3, 2, 0.1, 0.5)
        assert math.isinf(trcb_confidence_width(1, 0, state))

    def test_width_formula(self):
        """Test the width after eight comparisons in round one."""
        state = TrcbState.initial(3, 3, 0.1, 0.5)
        state.wins.counts[1, 0] = 5
        state.wins.counts[0, 1] = 3
        expected = math.sqrt(32.0 * math.log(3) / (0.0625 * 8))
        assert trcb_confidence_width(1, 0, state) == pytest.approx(expected, abs=1e-4)
        assert expected == pytest.approx(8.38518, abs=1e-4)

    def test_perturb_upper_clamp(self):
        """Test that a large positive shift hits 1/v_min."""
        assert perturb(1.0, 100.0, 0.4, 0.5, 1.0) == 2.0

    def test_perturb_lower_clamp(self):
        """Test that a large negative shift hits v_min."""
        assert perturb(0.5, 10.0, 0.4, 0.5, 0.0) == 0.5

    def test_perturb_uniform_law(self, rng):
        """Test that a unit width spreads the estimate uniformly over +-c_shrink."""
        draws = np.array([perturb(1.0, 1.0, 0.1, 0.5, u) for u in rng.random(20_000)])
        assert draws.mean() == pytest.approx(1.0, abs=0.01)
        assert draws.min() >= 0.9 and draws.max() <= 1.1
        assert np.histogram(draws, bins=4, range=(0.9, 1.1))[0].min() > 4500

    def test_perturb_unbounded(self):
        """Test the uniform draw over the admissible range."""
        assert perturb(1.0, math.inf, 0.1, 0.5, 0.5) == pytest.approx(1.25)

    def test_perturbed_score_consumes_one_draw(self):
        """Test that one variate is drawn per call, also for the reference arm."""
        state = TrcbState.initial(4, 2, 0.1, 0.1)
        a, b = np.random.default_rng(5), np.random.default_rng(5)
        assert trcb_perturbed_score(0, 0, state, a) == 1.0
        value = trcb_perturbed_score(2, 0, state, a)
        b.random()
        assert value == pytest.approx(0.1 + b.random() * (10.0 - 0.1))

    def test_observe_single_duel(self):
        """Test raw estimates after one win of arm 1 over arm 2."""
        state = TrcbState.initial(3, 2, 0.1, 0.3)
        trcb_observe(state, ChoiceObservation(offered=subset(1, 2), chosen=0))
        assert state.wins.counts[0, 1] == 1
        assert state.rel_scores[0, 1] == 0.3
        assert state.rel_scores[1, 0] == 0.0
        assert state.round == 1

    def test_observe_repeated_duel(self):
        """Test raw estimates after two identical observations."""
        state = TrcbState.initial(3, 2, 0.1, 0.3)
        obs = ChoiceObservation(offered=subset(1, 2), chosen=0)
        trcb_observe(state, obs)
        trcb_observe(state, obs)
        assert state.wins.counts[0, 1] == 2
        assert state.rel_scores[1, 0] == 0.0
        assert state.rel_scores[0, 1] == 0.3

    def test_observe_scope(self):
        """Test that only the chosen arm's wins over offered arms change."""
        state = TrcbState.initial(4, 3, 0.1, 0.3)
        trcb_observe(state, ChoiceObservation(offered=subset(1, 2, 3), chosen=1))
        expected = np.zeros((4, 4), dtype=np.int64)
        expected[1, 0] = expected[1, 2] = 1
        assert (state.wins.counts == expected).all()

    def test_first_round_size(self, rng):
        """Test that the fresh policy offers exactly l arms."""
        state = TrcbState.initial(6, 3, 7e-5, 0.02)
        for _ in range(50):
            assert len(trcb_suggest(state, rng)) == 3

    def test_exact_scores_attain_optimum(self, monkeypatch):
        """Test that injected exact relative scores give the best reference reward."""
        gen = np.random.default_rng(8)
        for _ in range(30):
            n = int(gen.integers(3, 11))
            l = int(gen.integers(2, n + 1))
            v = ScoreVector.of(1.0 - gen.random(n))
            state = TrcbState.initial(n, l, 0.1, 0.01)
            O_J = relative_scores(0, v)
            monkeypatch.setattr(trcb_module, "perturbed_scores", lambda J, s, r, o=O_J: o)
            offered = trcb_suggest(state, gen)
            best = max(
                reference_reward(Preselection.of(arms), O_J)
                for arms in itertools.combinations(range(n), l)
            )
            assert reference_reward(offered, O_J) == pytest.approx(best, abs=1e-12)

    def test_invalid_parameters(self):
        """Test the parameter ranges."""
        with pytest.raises(InvalidInputError, match="c_shrink"):
            TrcbState.initial(4, 2, 0.5, 0.1)
        with pytest.raises(InvalidInputError, match="v_min"):
            TrcbState.initial(4, 2, 0.1, 1.0)

    def test_episode_contract(self, decoy_scores, rng):
        """Test subset size and monotone win counts over a run."""
        policy = TrcbPolicy(5, 3, 7e-5, 0.02)
        previous = policy.state.wins.counts.copy()
        expected_total = 0
        for t in range(1, 301):
            S = policy.suggest(rng)
            assert len(S) == 3
            chosen = sample_choice(S, decoy_scores, rng)
            policy.observe(ChoiceObservation(offered=S, chosen=chosen, round=t))
            expected_total += len(S) - 1
            assert (policy.state.wins.counts >= previous).all()
            assert policy.state.wins.total() == expected_total
            previous = policy.state.wins.counts.copy()

    def test_deterministic(self, decoy_scores):
        """Test that a fixed seed reproduces the subsets and the state."""
        runs = []
        for _ in range(2):
            policy = TrcbPolicy(5, 3, 7e-5, 0.02)
            offered = _play(policy, decoy_scores, 200, np.random.default_rng(99))
            runs.append((offered, policy.snapshot()))
        assert runs[0] == runs[1]

    def test_snapshot_roundtrip(self, decoy_scores):
        """Test that a restored policy continues exactly like the original."""
        policy = TrcbPolicy(5, 3, 7e-5, 0.02)
        _play(policy, decoy_scores, 100, np.random.default_rng(1))
        snap = TrcbSnapshot.model_validate_json(policy.snapshot().model_dump_json())
        restored = TrcbPolicy.restore(snap)
        assert restored.snapshot() == policy.snapshot()
        left = _play(policy, decoy_scores, 50, np.random.default_rng(2))
        right = _play(restored, decoy_scores, 50, np.random.default_rng(2))
        assert left == right


class TestCbr:
    """Tests for the CBR policy."""

    def test_confidence_formula(self):
        """Test the radius after two comparisons in round one."""
        state = CbrState.initial(10, SShapedFunction())
        state.wins.counts[3, 0] = 2
        assert cbr_confidence(3, 0, state) == pytest.approx(1.51743, abs=1e-5)

    def test_confidence_unbounded(self):
        """Test the never-compared convention."""
        assert math.isinf(cbr_confidence(1, 0, CbrState.initial(4, SShapedFunction())))

    def test_inclusion_at_even_estimate(self):
        """Test that an even estimate gives probability 1/2 for any radius."""
        state = CbrState.initial(4, SShapedFunction())
        state.wins.counts[1, 0] = state.wins.counts[0, 1] = 6
        assert cbr_inclusion_prob(1, 0, state) == pytest.approx(0.5)
        assert cbr_inclusion_prob(2, 0, state) == pytest.approx(0.5)

    def test_inclusion_formula(self):
        """Test the normalized excess under the clamp function."""
        state = CbrState.initial(4, SShapedFunction())
        state.wins.counts[1, 0] = 30
        state.wins.counts[0, 1] = 20
        state.probs[1, 0] = 0.6
        c = cbr_confidence(1, 0, state)
        assert cbr_inclusion_prob(1, 0, state) == pytest.approx((0.6 + c - 0.5) / (2.0 * c))

    def test_inclusion_zero_when_dominated(self):
        """Test that an upper bound at or below 1/2 gives probability 0."""
        state = CbrState.initial(2, SShapedFunction())
        state.wins.counts[0, 1] = 200
        state.probs[1, 0] = 0.0
        assert cbr_inclusion_prob(1, 0, state) == 0.0

    def test_empty_active_set(self, rng):
        """Test that an empty pool leaves only the reference arm."""
        state = CbrState.initial(4, SShapedFunction())
        state.active = set()
        assert cbr_suggest(state, rng) == subset(1)

    def test_first_round_inclusion_rate(self, rng):
        """Test that every other arm joins with probability 1/2 in round one."""
        state = CbrState.initial(5, SShapedFunction())
        draws = 20_000
        counts = np.zeros(5)
        for _ in range(draws):
            for arm in cbr_suggest(state, rng).arms:
                counts[arm] += 1
        assert counts[0] == draws
        assert np.all(np.abs(counts[1:] / draws - 0.5) < 0.015)

    def test_observe_single_duel(self):
        """Test estimates after one win of arm 1."""
        state = CbrState.initial(3, SShapedFunction())
        cbr_observe(state, ChoiceObservation(offered=subset(1, 2), chosen=0))
        assert state.probs[0, 1] == 1.0
        assert state.probs[1, 0] == 0.0
        assert state.probs[0, 2] == 0.5
        assert state.round == 1

    def test_observe_split_duel(self):
        """Test that one win each gives even estimates."""
        state = CbrState.initial(2, SShapedFunction())
        cbr_observe(state, ChoiceObservation(offered=subset(1, 2), chosen=0))
        cbr_observe(state, ChoiceObservation(offered=subset(1, 2), chosen=1))
        assert state.probs[0, 1] == state.probs[1, 0] == 0.5

    def test_duel_estimate_converges(self):
        """Test that repeated duels estimate 1 / (1 + v_2)."""
        v = ScoreVector.of([1.0, 0.5])
        for seed in range(3):
            gen = np.random.default_rng(seed)
            state = CbrState.initial(2, SShapedFunction())
            S = subset(1, 2)
            for _ in range(10_000):
                cbr_observe(state, ChoiceObservation(offered=S, chosen=sample_choice(S, v, gen)))
            assert abs(state.probs[0, 1] - 1.0 / 1.5) < 0.02

    def test_episode_contract(self, rng):
        """Test reference-arm membership and permanent deactivation over a run."""
        v = ScoreVector.of([1.0, 0.2, 0.2, 0.2, 0.2])
        policy = CbrPolicy(5, SShapedFunction())
        removed: set[int] = set()
        for t in range(1, 2001):
            J = reference_arm(policy.state.wins)
            S = policy.suggest(rng)
            assert J in S
            assert not (set(S.arms) - {J}) & removed
            removed |= set(range(5)) - policy.state.active
            policy.observe(ChoiceObservation(offered=S, chosen=sample_choice(S, v, rng), round=t))
        assert 0 in policy.state.active

    def test_snapshot_roundtrip(self):
        """Test that a restored policy continues exactly like the original."""
        v = ScoreVector.of([1.0, 0.6, 0.3, 0.1])
        policy = CbrPolicy(4, SShapedFunction(kind="arctan"), name="CBR-As")
        _play(policy, v, 100, np.random.default_rng(3))
        snap = CbrSnapshot.model_validate_json(policy.snapshot().model_dump_json())
        restored = CbrPolicy.restore(snap, name="CBR-As")
        assert restored.snapshot() == policy.snapshot()
        left = _play(policy, v, 50, np.random.default_rng(4))
        right = _play(restored, v, 50, np.random.default_rng(4))
        assert left == right


class TestBaselines:
    """Tests for the uniform and oracle baselines and the factory."""

    def test_uniform_restricted(self, rng):
        """Test that every 3-subset of 5 arms is equally likely."""
        draws = 20_000
        freq: dict[tuple[int, ...], int] = {}
        for _ in range(draws):
            arms = baseline_uniform_suggest(5, 3, rng).arms
            freq[arms] = freq.get(arms, 0) + 1
        assert len(freq) == 10
        assert all(abs(count / draws - 0.1) < 0.01 for count in freq.values())

    def test_uniform_flexible(self, rng):
        """Test that every nonempty subset of 3 arms is equally likely."""
        draws = 20_000
        freq: dict[tuple[int, ...], int] = {}
        for _ in range(draws):
            arms = baseline_uniform_suggest(3, None, rng).arms
            freq[arms] = freq.get(arms, 0) + 1
        assert len(freq) == 7
        assert all(abs(count / draws - 1 / 7) < 0.01 for count in freq.values())

    def test_oracle(self, decoy_scores):
        """Test the oracle's restricted and flexible choices."""
        assert baseline_oracle_suggest(decoy_scores, 3) == subset(1, 4, 5)
        assert baseline_oracle_suggest(decoy_scores, None) == subset(1)

    def test_oracle_policy_ignores_rng(self, decoy_scores, rng):
        """Test that the oracle policy repeats its subset."""
        policy = OraclePolicy(decoy_scores, ActionSpace.restricted(3))
        assert {policy.suggest(rng) for _ in range(10)} == {subset(1, 4, 5)}

    def test_factory_names(self, decoy_scores):
        """Test display names of built policies."""
        flexible = ActionSpace.flexible()
        assert build_policy(CbrSpec(sigma="arctan"), decoy_scores, flexible).name == "CBR-As"
        assert build_policy(UniformSpec(label="Random"), decoy_scores, flexible).name == "Random"

    def test_factory_variant_mismatch(self, decoy_scores):
        """Test that policies refuse the wrong action space."""
        with pytest.raises(InvalidInputError, match="restricted"):
            build_policy(TrcbSpec(), decoy_scores, ActionSpace.flexible())
        with pytest.raises(InvalidInputError, match="flexible"):
            build_policy(CbrSpec(), decoy_scores, ActionSpace.restricted(3))
