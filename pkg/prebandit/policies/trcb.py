"""TRCB: thresholding random confidence bounds for the restricted variant.

Each round the policy anchors on the reference arm J, draws every other arm's
relative score uniformly from its (shrunk) confidence interval, clamps the
draw to [v_min, 1/v_min], and offers the l-subset maximizing the reward
measured relative to J. Sampling inside the interval instead of taking its
upper end keeps weak decoy arms in play.
"""

import math
from typing import Optional

import numpy as np

from prebandit.model.types import ChoiceObservation, Preselection, ScoreVector
from prebandit.optim.subsets import optimal_subset_greedy
from prebandit.policies.base import Policy
from prebandit.policies.schemas import TrcbSnapshot
from prebandit.policies.state import TrcbState
from prebandit.policies.win_matrix import reference_arm


def _log_term(l: int, t: int) -> float:
    return 32.0 * math.log(l * t**1.5)


def trcb_confidence_width(i: int, J: int, state: TrcbState, t: Optional[int] = None) -> float:
    """
    Half-width of the sampling interval for arm i's score relative to J.

    Args:
        i: Arm index (i != J)
        J: Reference arm
        state: TRCB state
        t: Round number (defaults to the round being played)

    Returns:
        sqrt(32 log(l t^1.5) / (v_min^4 * comparisons)), or ``math.inf`` when i
        and J were never offered together
    """
    t = state.t if t is None else t
    compared = state.wins.comparisons(i, J)
    if compared == 0:
        return math.inf
    return math.sqrt(_log_term(state.l, t) / (state.v_min**4 * compared))


def perturb(
    estimate: float, width: float, c_shrink: float, v_min: float, u: float
) -> float:
    """
    Clamped perturbed estimate from one uniform variate ``u`` in [0, 1).

    A finite width shifts the estimate by c_shrink * theta with theta uniform on
    [-width, width]. An unbounded width yields a draw uniform on the whole
    admissible range [v_min, 1/v_min].
    """
    upper = 1.0 / v_min
    if math.isinf(width):
        return v_min + u * (upper - v_min)
    theta = (2.0 * u - 1.0) * width
    return min(upper, max(estimate + c_shrink * theta, v_min))


def trcb_perturbed_score(
    i: int, J: int, state: TrcbState, rng: np.random.Generator
) -> float:
    """
    Randomized, clamped relative score of arm i with respect to J.

    Consumes exactly one uniform variate from ``rng``. The reference arm's own
    score is 1 by convention.
    """
    u = rng.random()
    if i == J:
        return 1.0
    width = trcb_confidence_width(i, J, state)
    return perturb(float(state.rel_scores[i, J]), width, state.c_shrink, state.v_min, u)


def perturbed_scores(J: int, state: TrcbState, rng: np.random.Generator) -> np.ndarray:
    """
    Vector form of ``trcb_perturbed_score`` over all arms, entry J fixed to 1.

    Draws one uniform variate per arm (including J) in arm order.
    """
    u = rng.random(state.n)
    compared = state.wins.comparisons_with(J).astype(float)
    upper = 1.0 / state.v_min

    scores = state.v_min + u * (upper - state.v_min)
    seen = compared > 0
    if np.any(seen):
        width = np.sqrt(_log_term(state.l, state.t) / (state.v_min**4 * compared[seen]))
        theta = (2.0 * u[seen] - 1.0) * width
        shifted = state.rel_scores[seen, J] + state.c_shrink * theta
        scores[seen] = np.minimum(upper, np.maximum(shifted, state.v_min))
    scores[J] = 1.0
    return scores


def trcb_suggest(state: TrcbState, rng: np.random.Generator) -> Preselection:
    """
    Preselection for the round being played.

    Args:
        state: TRCB state
        rng: Seeded random source

    Returns:
        The l-subset maximizing the reward relative to the reference arm under
        the perturbed relative scores
    """
    J = reference_arm(state.wins)
    scores = perturbed_scores(J, state, rng)
    return optimal_subset_greedy(ScoreVector.of(scores), state.l).subset


def trcb_observe(state: TrcbState, obs: ChoiceObservation) -> TrcbState:
    """
    Record a choice and refresh the relative-score estimates of the offered arms.

    For offered i != j the estimate becomes (w[i,j] + w[j,i]) / w[j,i] - 1, or
    v_min while j has never beaten i. Estimates are stored unclamped.

    Args:
        state: TRCB state (updated in place)
        obs: Observed choice

    Returns:
        The updated state
    """
    state.wins.record(obs)
    counts = state.wins.counts
    arms = obs.offered.arms
    for i in arms:
        for j in arms:
            if i == j:
                continue
            lost = counts[j, i]
            if lost != 0:
                state.rel_scores[i, j] = (counts[i, j] + lost) / lost - 1.0
            else:
                state.rel_scores[i, j] = state.v_min
    state.round += 1
    return state


class TrcbPolicy(Policy):
    """TRCB behind the common policy interface."""

    def __init__(self, n: int, l: int, c_shrink: float, v_min: float, name: str = "TRCB"):
        self.name = name
        self.state = TrcbState.initial(n, l, c_shrink, v_min)

    def suggest(self, rng: np.random.Generator) -> Preselection:
        return trcb_suggest(self.state, rng)

    def observe(self, obs: ChoiceObservation) -> None:
        trcb_observe(self.state, obs)

    def snapshot(self) -> TrcbSnapshot:
        return self.state.snapshot()

    @classmethod
    def restore(cls, snap: TrcbSnapshot, name: str = "TRCB") -> "TrcbPolicy":
        policy = cls(snap.n, snap.l, snap.c_shrink, snap.v_min, name=name)
        policy.state = TrcbState.from_snapshot(snap)
        return policy
