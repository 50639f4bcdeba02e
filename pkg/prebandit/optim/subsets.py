"""Optimal preselections for the restricted and flexible variants.

The restricted optimum is always the top-scoring arm(s) plus a mix of the
strongest and the weakest remaining arms: weak arms act as decoys that raise
the chance the best arm is picked. ``optimal_subset_greedy`` exploits that
shape; ``optimal_subset_bruteforce`` is the exhaustive oracle it is tested
against.
"""

import itertools
import logging
import math
from functools import lru_cache
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from prebandit.config import settings
from prebandit.core.errors import BudgetExceededError, InvalidInputError
from prebandit.model.plackett_luce import reward_of
from prebandit.model.types import ActionSpace, Preselection, ScoreVector

logger = logging.getLogger(__name__)


class OptResult(BaseModel):
    """An optimal preselection and its expected reward."""

    model_config = ConfigDict(frozen=True)

    subset: Preselection
    reward: float = Field(..., ge=0.0)


def _sums(S: Preselection, v: ScoreVector) -> tuple[float, float]:
    if not S.fits(v.n):
        raise InvalidInputError(f"preselection {S.label} has arms outside [1, {v.n}]")
    values = v.as_array()[list(S.arms)]
    return float(values.sum()), float(np.dot(values, values))


def f_eval(x: float, S: Preselection, v: ScoreVector) -> float:
    """
    Reward of S after adding one more arm of score x.

    Args:
        x: Score of the added arm (nonnegative)
        S: Current preselection
        v: Score vector

    Returns:
        (x^2 + sum of squares over S) / (x + sum over S)
    """
    total, squares = _sums(S, v)
    return (x * x + squares) / (x + total)


def f_minimizer(S: Preselection, v: ScoreVector) -> float:
    """Score x at which adding an arm to S hurts the reward the most."""
    total, squares = _sums(S, v)
    return math.sqrt(total * total + squares) - total


def _check_size(n: int, l: int) -> None:
    if not 2 <= l <= n:
        raise InvalidInputError(f"preselection size l={l} must lie in [2, {n}]")


@lru_cache(maxsize=64)
def _combinations(n: int, l: int) -> np.ndarray:
    combos = np.array(list(itertools.combinations(range(n), l)), dtype=np.intp)
    combos.setflags(write=False)
    return combos


def optimal_subset_bruteforce(
    v: ScoreVector, l: int, budget: Optional[int] = None
) -> OptResult:
    """
    Exhaustive maximum of the expected reward over all l-subsets.

    Subsets are enumerated in lexicographic order and only a strictly larger
    reward replaces the incumbent, so ties resolve to the lexicographically
    smallest subset.

    Args:
        v: Score vector
        l: Preselection size
        budget: Maximal number of subsets to enumerate (defaults to settings)

    Returns:
        The optimal subset and its reward

    Raises:
        InvalidInputError: If l is out of range
        BudgetExceededError: If C(n, l) exceeds the budget
    """
    _check_size(v.n, l)
    budget = settings.brute_force_budget if budget is None else budget
    count = math.comb(v.n, l)
    if count > budget:
        raise BudgetExceededError(v.n, l, count, budget)

    combos = _combinations(v.n, l)
    # Sorted rows give every permutation of one score multiset the same float reward
    chosen = np.sort(v.as_array()[combos], axis=1)
    rewards = (chosen * chosen).sum(axis=1) / chosen.sum(axis=1)
    # argmax returns the first maximum, i.e. the lexicographically smallest subset
    best = combos[int(np.argmax(rewards))]
    subset = Preselection.of(best.tolist())
    return OptResult(subset=subset, reward=reward_of(v.as_array()[best]))


def optimal_subset_greedy(v: ScoreVector, l: int) -> OptResult:
    """
    Reward maximization from the sorted score sequence.

    Sorts the arms by decreasing score and seeds the set with every arm of
    maximal score (the lexicographically smallest l of them if there are at
    least l). The remaining slots are filled from the two ends of the sorted
    remainder: strong arms from the top, decoys from the bottom. Every split of
    the open slots between the two ends is scored and the best one is kept, so
    the result matches the exhaustive optimum.

    Args:
        v: Score vector
        l: Preselection size

    Returns:
        The optimal subset and its reward

    Raises:
        InvalidInputError: If l is out of range
    """
    _check_size(v.n, l)
    scores = v.as_array()
    order = sorted(range(v.n), key=lambda i: (-scores[i], i))
    top = scores[order[0]]
    seed = [i for i in order if scores[i] == top]

    if len(seed) >= l:
        subset = Preselection.of(seed[:l])
        return OptResult(subset=subset, reward=reward_of(scores[list(subset.arms)]))

    rest = order[len(seed):]
    open_slots = l - len(seed)
    best_key: Optional[tuple[float, tuple[int, ...]]] = None
    best_arms: tuple[int, ...] = ()
    for from_top in range(open_slots + 1):
        from_bottom = open_slots - from_top
        # Lowest scores first, smaller index first among equal scores
        bottom = sorted(rest[from_top:], key=lambda i: (scores[i], i))[:from_bottom]
        picked = seed + rest[:from_top] + bottom
        arms = tuple(sorted(picked))
        reward = reward_of(scores[list(arms)])
        # Larger reward wins; equal rewards fall back to the smaller index tuple
        if (
            best_key is None
            or reward > best_key[0]
            or (reward == best_key[0] and arms < best_key[1])
        ):
            best_key = (reward, arms)
            best_arms = arms

    return OptResult(subset=Preselection.of(best_arms), reward=best_key[0])


def optimal_subset_flexible(v: ScoreVector) -> OptResult:
    """All arms attaining the maximal score; their reward is that score."""
    top = v.v_max
    subset = Preselection.of(i for i, s in enumerate(v.scores) if s == top)
    # Same arithmetic as expected_reward, so the oracle's regret is exactly zero
    return OptResult(subset=subset, reward=reward_of(v.as_array()[list(subset.arms)]))


def optimal_subset(
    v: ScoreVector, space: ActionSpace, budget: Optional[int] = None
) -> OptResult:
    """
    Optimal preselection for an action space.

    The restricted variant is solved exhaustively when C(n, l) fits the budget
    and by ``optimal_subset_greedy`` otherwise.

    Args:
        v: Score vector
        space: Restricted or flexible action space
        budget: Brute-force budget (defaults to settings)

    Returns:
        The optimal subset and its reward
    """
    if not space.is_restricted:
        return optimal_subset_flexible(v)

    space.check_arms(v.n)
    budget = settings.brute_force_budget if budget is None else budget
    if math.comb(v.n, space.l) <= budget:
        logger.debug(f"Brute-force optimum for n={v.n}, l={space.l}")
        return optimal_subset_bruteforce(v, space.l, budget)

    logger.debug(f"Greedy optimum for n={v.n}, l={space.l} (C(n,l) over budget)")
    return optimal_subset_greedy(v, space.l)
