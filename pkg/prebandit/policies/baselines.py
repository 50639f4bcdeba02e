"""Control baselines: uniformly random and oracle preselections."""

from typing import Optional

import numpy as np

from prebandit.core.errors import InvalidInputError
from prebandit.model.types import ActionSpace, ChoiceObservation, Preselection, ScoreVector
from prebandit.optim.subsets import optimal_subset
from prebandit.policies.base import Policy
from prebandit.policies.schemas import BaselineSnapshot


def baseline_uniform_suggest(
    n: int, l: Optional[int], rng: np.random.Generator
) -> Preselection:
    """
    Uniformly random preselection.

    Args:
        n: Arm count
        l: Preselection size, or None for any nonempty subset
        rng: Seeded random source

    Returns:
        A uniform l-subset, or a uniform nonempty subset when l is None
    """
    if l is not None:
        if not 1 <= l <= n:
            raise InvalidInputError(f"preselection size l={l} must lie in [1, {n}]")
        return Preselection.of(rng.choice(n, size=l, replace=False).tolist())
    # Rejection of the empty set keeps the draw uniform over the 2^n - 1 others
    while True:
        mask = rng.random(n) < 0.5
        if mask.any():
            return Preselection.of(np.flatnonzero(mask).tolist())


def baseline_oracle_suggest(v: ScoreVector, l: Optional[int]) -> Preselection:
    """Optimal preselection for the true scores (l=None means flexible)."""
    space = ActionSpace.flexible() if l is None else ActionSpace.restricted(l)
    return optimal_subset(v, space).subset


class UniformPolicy(Policy):
    """Offers uniformly random preselections and never learns."""

    def __init__(self, n: int, space: ActionSpace, name: str = "Uniform"):
        self.name = name
        self.n = n
        self.l = space.l
        self.rounds = 0

    def suggest(self, rng: np.random.Generator) -> Preselection:
        return baseline_uniform_suggest(self.n, self.l, rng)

    def observe(self, obs: ChoiceObservation) -> None:
        self.rounds += 1

    def snapshot(self) -> BaselineSnapshot:
        return BaselineSnapshot(kind="uniform", n=self.n, l=self.l, round=self.rounds)


class OraclePolicy(Policy):
    """Knows the true scores and always offers the optimal preselection."""

    def __init__(self, v: ScoreVector, space: ActionSpace, name: str = "Oracle"):
        self.name = name
        self.n = v.n
        self.l = space.l
        self.subset = baseline_oracle_suggest(v, space.l)
        self.rounds = 0

    def suggest(self, rng: np.random.Generator) -> Preselection:
        return self.subset

    def observe(self, obs: ChoiceObservation) -> None:
        self.rounds += 1

    def snapshot(self) -> BaselineSnapshot:
        return BaselineSnapshot(kind="oracle", n=self.n, l=self.l, round=self.rounds)
