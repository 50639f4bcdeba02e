"""CBR: confidence-bound racing for the flexible variant.

The reference arm J is always offered. Every other active arm joins the
preselection with a probability that grows with how far the upper confidence
bound of its winning probability against J reaches above 1/2. An arm whose
bound falls to 1/2 or below is dropped from the pool for good.
"""

import logging
import math
from typing import Optional

import numpy as np

from prebandit.model.types import ChoiceObservation, Preselection
from prebandit.policies.base import Policy
from prebandit.policies.schemas import CbrSnapshot
from prebandit.policies.sigmoid import SShapedFunction
from prebandit.policies.state import CbrState
from prebandit.policies.win_matrix import reference_arm

logger = logging.getLogger(__name__)


def cbr_confidence(
    i: int, J: int, state: CbrState, n: Optional[int] = None, t: Optional[int] = None
) -> float:
    """
    Confidence radius for the winning probability of i against J.

    Args:
        i: Arm index (i != J)
        J: Reference arm
        state: CBR state
        n: Arm count (defaults to the state's)
        t: Round number (defaults to the round being played)

    Returns:
        sqrt(2 log(n t^1.5) / comparisons), or ``math.inf`` before the first comparison
    """
    n = state.n if n is None else n
    t = state.t if t is None else t
    compared = state.wins.comparisons(i, J)
    if compared == 0:
        return math.inf
    return math.sqrt(2.0 * math.log(n * t**1.5) / compared)


def cbr_inclusion_prob(i: int, J: int, state: CbrState, t: Optional[int] = None) -> float:
    """
    Probability of offering arm i next to the reference arm J.

    Applies sigma to (q[i,J] + c - 1/2) / (2c). With an unbounded radius the
    ratio tends to 1/2, so the result is sigma(1/2) = 1/2.
    """
    c = cbr_confidence(i, J, state, t=t)
    if math.isinf(c):
        return state.sigma(0.5)
    return state.sigma((state.probs[i, J] + c - 0.5) / (2.0 * c))


def cbr_suggest(state: CbrState, rng: np.random.Generator) -> Preselection:
    """
    Preselection for the round being played.

    Scans the active arms in ascending order with one uniform variate each.
    Arms whose inclusion probability is 0 leave the active pool.

    Args:
        state: CBR state (the active pool is updated in place)
        rng: Seeded random source

    Returns:
        The reference arm plus every active arm that won its Bernoulli draw
    """
    J = reference_arm(state.wins)
    chosen = [J]
    scan = [i for i in sorted(state.active) if i != J]
    draws = rng.random(len(scan))
    for i, u in zip(scan, draws):
        p = cbr_inclusion_prob(i, J, state)
        if u < p:
            chosen.append(i)
        if p == 0.0:
            state.active.discard(i)
            logger.debug(f"Arm {i + 1} deactivated in round {state.t}", extra={"round": state.t})
    return Preselection.of(chosen)


def cbr_observe(state: CbrState, obs: ChoiceObservation) -> CbrState:
    """
    Record a choice and refresh winning-probability estimates among offered arms.

    Args:
        state: CBR state (updated in place)
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
            compared = counts[i, j] + counts[j, i]
            if compared > 0:
                state.probs[i, j] = counts[i, j] / compared
    state.round += 1
    return state


class CbrPolicy(Policy):
    """CBR behind the common policy interface."""

    def __init__(self, n: int, sigma: SShapedFunction, name: str = "CBR"):
        self.name = name
        self.state = CbrState.initial(n, sigma)

    def suggest(self, rng: np.random.Generator) -> Preselection:
        return cbr_suggest(self.state, rng)

    def observe(self, obs: ChoiceObservation) -> None:
        cbr_observe(self.state, obs)

    def snapshot(self) -> CbrSnapshot:
        return self.state.snapshot()

    @classmethod
    def restore(cls, snap: CbrSnapshot, name: str = "CBR") -> "CbrPolicy":
        policy = cls(snap.n, snap.sigma, name=name)
        policy.state = CbrState.from_snapshot(snap)
        return policy
