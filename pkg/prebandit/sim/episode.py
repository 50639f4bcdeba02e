"""A single bandit episode: suggest, sample the selector's choice, observe."""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from prebandit.core.errors import ContractViolation
from prebandit.model.plackett_luce import instant_regret, sample_choice
from prebandit.model.types import ActionSpace, ChoiceObservation, Preselection, ScoreVector
from prebandit.optim.subsets import OptResult, optimal_subset
from prebandit.policies.base import Policy

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegretTrace:
    """Per-round and cumulative expected regret of one episode."""

    instantaneous: np.ndarray
    cumulative: np.ndarray
    subsets: Optional[list[Preselection]] = None

    @property
    def horizon(self) -> int:
        return len(self.instantaneous)

    def at(self, horizons: Sequence[int]) -> np.ndarray:
        """Cumulative regret after each of the given rounds."""
        return self.cumulative[np.asarray(horizons, dtype=np.intp) - 1]


def run_episode(
    policy: Policy,
    v: ScoreVector,
    T: int,
    space: ActionSpace,
    rng: np.random.Generator,
    opt: Optional[OptResult] = None,
    keep_subsets: bool = False,
) -> RegretTrace:
    """
    Play T rounds of ``policy`` against a PL selector with scores v.

    The regret recorded each round is the expected regret of the offered
    preselection, not a realized-reward difference.

    Args:
        policy: Fresh policy instance (mutated by the episode)
        v: True scores
        T: Horizon
        space: Restricted or flexible action space
        rng: Seeded random source shared by the policy and the selector
        opt: Precomputed optimum for (v, space); computed here if omitted
        keep_subsets: Also return every suggested preselection

    Returns:
        The regret trace

    Raises:
        ContractViolation: If the policy offers an illegal preselection
    """
    space.check_arms(v.n)
    if opt is None:
        opt = optimal_subset(v, space)

    instantaneous = np.empty(T)
    subsets: Optional[list[Preselection]] = [] if keep_subsets else None

    for t in range(1, T + 1):
        S = policy.suggest(rng)
        if not isinstance(S, Preselection) or not space.admits(S, v.n):
            raise ContractViolation(
                f"{policy.name} offered an illegal preselection {S!r} in round {t}"
            )

        instantaneous[t - 1] = instant_regret(S, v, opt.reward)
        chosen = sample_choice(S, v, rng)
        policy.observe(ChoiceObservation(offered=S, chosen=chosen, round=t))

        if subsets is not None:
            subsets.append(S)

    cumulative = np.cumsum(instantaneous)
    logger.debug(
        f"{policy.name}: T={T}, Reg(T)={cumulative[-1] if T else 0.0:.4f}",
        extra={"policy": policy.name},
    )
    return RegretTrace(instantaneous=instantaneous, cumulative=cumulative, subsets=subsets)
