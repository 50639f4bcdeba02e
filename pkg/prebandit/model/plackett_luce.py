"""Plackett-Luce choice calculus.

Ranking and choice probabilities, samplers, relative scores, and the
expected-reward / regret quantities used by every policy and by the
simulation harness. All randomness comes from a caller-supplied
``numpy.random.Generator``.
"""

import itertools
from typing import Sequence, Union

import numpy as np

from prebandit.core.errors import ContractViolation, InvalidInputError
from prebandit.model.types import Preselection, Ranking, ScoreVector

# Tolerated float noise when an optimal reward is compared against itself
REGRET_TOLERANCE = 1e-12


def _require_fits(subset: Preselection, v: ScoreVector) -> None:
    if not subset.fits(v.n):
        raise InvalidInputError(f"preselection {subset.label} has arms outside [1, {v.n}]")


def reward_of(values: np.ndarray) -> float:
    """Sum of squares over sum of the given positive scores."""
    return float(np.dot(values, values) / values.sum())


def _stagewise_probability(ordered: np.ndarray) -> float:
    # Remaining mass at each stage: suffix sums of the ordered scores
    remaining = np.cumsum(ordered[::-1])[::-1]
    return float(np.prod(ordered / remaining))


def ranking_probability(r: Ranking, v: ScoreVector) -> float:
    """
    Probability of a full ranking under the PL model.

    Each stage places one of the remaining arms with probability proportional
    to its score.

    Args:
        r: Ranking of all n arms
        v: Score vector

    Returns:
        Probability in [0, 1]

    Raises:
        InvalidInputError: If the ranking and score vector disagree in size
    """
    if r.n != v.n:
        raise InvalidInputError(f"ranking over {r.n} arms does not match {v.n} scores")
    return _stagewise_probability(v.as_array()[list(r.order)])


def sample_ranking(v: ScoreVector, rng: np.random.Generator) -> Ranking:
    """
    Draw a ranking stage by stage from the PL model.

    Args:
        v: Score vector
        rng: Seeded random source

    Returns:
        Sampled ranking
    """
    remaining = list(range(v.n))
    weights = v.as_array()
    order = []
    while remaining:
        w = weights[remaining]
        cumulative = np.cumsum(w)
        k = int(np.searchsorted(cumulative, rng.random() * cumulative[-1], side="right"))
        k = min(k, len(remaining) - 1)
        order.append(remaining.pop(k))
    return Ranking(order=tuple(order))


def choice_probability(i: int, S: Preselection, v: ScoreVector) -> float:
    """
    Probability that arm i is chosen from S (the MNL marginal).

    Args:
        i: Arm index
        S: Offered preselection
        v: Score vector

    Returns:
        v_i divided by the total score of S

    Raises:
        InvalidInputError: If i is not in S
    """
    _require_fits(S, v)
    if i not in S:
        raise InvalidInputError(f"arm {i + 1} is not in {S.label}")
    scores = v.as_array()
    return float(scores[i] / scores[list(S.arms)].sum())


def marginal_by_enumeration(i: int, S: Preselection, v: ScoreVector) -> float:
    """Sum of ranking probabilities over all rankings of S that put i first."""
    _require_fits(S, v)
    if i not in S:
        raise InvalidInputError(f"arm {i + 1} is not in {S.label}")
    scores = v.as_array()
    others = [k for k in S.arms if k != i]
    return sum(
        _stagewise_probability(scores[[i, *tail]]) for tail in itertools.permutations(others)
    )


def draw_choice(arms: np.ndarray, weights: np.ndarray, rng: np.random.Generator) -> int:
    """Categorical draw of one arm with probability proportional to its weight."""
    cumulative = np.cumsum(weights)
    k = int(np.searchsorted(cumulative, rng.random() * cumulative[-1], side="right"))
    return int(arms[min(k, len(arms) - 1)])


def sample_choice(S: Preselection, v: ScoreVector, rng: np.random.Generator) -> int:
    """
    Simulate the selector's choice from S.

    Args:
        S: Offered preselection
        v: Score vector
        rng: Seeded random source

    Returns:
        The chosen arm
    """
    _require_fits(S, v)
    if len(S) == 1:
        return S.arms[0]
    arms = np.asarray(S.arms)
    return draw_choice(arms, v.as_array()[arms], rng)


def relative_score(i: int, j: int, v: ScoreVector) -> float:
    """Relative score O_{i,j} = v_i / v_j."""
    return v.scores[i] / v.scores[j]


def relative_scores(J: int, v: ScoreVector) -> np.ndarray:
    """Vector O_J of every arm's score relative to the reference arm J."""
    scores = v.as_array()
    return scores / scores[J]


def expected_reward(S: Preselection, v: ScoreVector) -> float:
    """
    Expected utility of the selector's choice from S.

    Args:
        S: Offered preselection
        v: Score vector

    Returns:
        Sum of squared scores in S over the sum of scores in S
    """
    _require_fits(S, v)
    return reward_of(v.as_array()[list(S.arms)])


def reference_reward(S: Preselection, O_J: Union[Sequence[float], np.ndarray]) -> float:
    """
    Expected utility of S measured against a reference arm.

    Args:
        S: Offered preselection
        O_J: Relative scores indexed by arm (one entry per arm, at least for arms in S)

    Returns:
        Sum of squared relative scores over their sum, restricted to S

    Raises:
        InvalidInputError: If an arm of S has no entry or a nonpositive one
    """
    rel = np.asarray(O_J, dtype=float)
    if rel.ndim != 1 or not S.fits(rel.shape[0]):
        raise InvalidInputError(f"relative scores do not cover every arm of {S.label}")
    values = rel[list(S.arms)]
    if not np.all(np.isfinite(values)) or np.any(values <= 0.0):
        raise InvalidInputError(f"relative scores for {S.label} must be positive and finite")
    return reward_of(values)


def instant_regret(S: Preselection, v: ScoreVector, opt_reward: float) -> float:
    """
    Regret of suggesting S when the best achievable reward is ``opt_reward``.

    Args:
        S: Suggested preselection
        v: Score vector
        opt_reward: Expected reward of an optimal preselection

    Returns:
        Nonnegative regret

    Raises:
        ContractViolation: If S beats ``opt_reward``, i.e. it was not optimal
    """
    regret = opt_reward - expected_reward(S, v)
    if regret < 0.0:
        if regret < -REGRET_TOLERANCE * max(1.0, abs(opt_reward)):
            raise ContractViolation(
                f"{S.label} earns more than the supplied optimum {opt_reward!r}"
            )
        return 0.0
    return regret
