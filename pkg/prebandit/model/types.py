"""Domain types for the Plackett-Luce environment.

Arm indices are 0-based everywhere inside the package. User-facing labels
(``Preselection.label``) switch to the 1-based ``[n]`` convention.
"""

import math
from enum import Enum
from typing import Iterable, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from prebandit.core.errors import InvalidInputError


class ScoreVector(BaseModel):
    """Hidden PL utilities v_1..v_n of an environment instance."""

    model_config = ConfigDict(frozen=True)

    scores: tuple[float, ...] = Field(..., description="Positive finite utility per arm")

    @field_validator("scores")
    @classmethod
    def _check_scores(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        if len(value) < 2:
            raise ValueError(f"need at least 2 arms, got {len(value)}")
        for i, score in enumerate(value):
            if not math.isfinite(score) or score <= 0.0:
                raise ValueError(f"score of arm {i + 1} must be positive and finite, got {score}")
        return value

    @classmethod
    def of(cls, values: Iterable[float]) -> "ScoreVector":
        """Build a score vector from any iterable of numbers."""
        return cls(scores=tuple(float(x) for x in values))

    @property
    def n(self) -> int:
        return len(self.scores)

    @property
    def v_min(self) -> float:
        return min(self.scores)

    @property
    def v_max(self) -> float:
        return max(self.scores)

    @property
    def normalized(self) -> bool:
        """True iff the maximal score equals 1 exactly."""
        return self.v_max == 1.0

    def in_parameter_space(self, v_min: float) -> bool:
        """Membership in the parameter space: normalized with every score >= v_min."""
        return self.normalized and self.v_min >= v_min

    def as_array(self) -> np.ndarray:
        return np.asarray(self.scores, dtype=float)

    def scaled(self, factor: float) -> "ScoreVector":
        return ScoreVector.of(factor * s for s in self.scores)


class Ranking(BaseModel):
    """A permutation of the arms; ``order[k]`` is the arm placed at rank k."""

    model_config = ConfigDict(frozen=True)

    order: tuple[int, ...]

    @field_validator("order")
    @classmethod
    def _check_permutation(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if sorted(value) != list(range(len(value))):
            raise ValueError(f"{value} is not a permutation of 0..{len(value) - 1}")
        return value

    @property
    def n(self) -> int:
        return len(self.order)

    def position(self, arm: int) -> int:
        """Rank (0 = first) of ``arm``."""
        return self.order.index(arm)


class Preselection(BaseModel):
    """A nonempty set of distinct arms offered to the selector."""

    model_config = ConfigDict(frozen=True)

    arms: tuple[int, ...] = Field(..., description="Distinct 0-based arm indices, ascending")

    @field_validator("arms", mode="before")
    @classmethod
    def _canonicalize(cls, value: Iterable[int]) -> tuple[int, ...]:
        raw = list(value)
        if any(isinstance(a, bool) or a != int(a) for a in raw):
            raise ValueError(f"arm indices must be integers, got {raw}")
        arms = sorted(int(a) for a in raw)
        if not arms:
            raise ValueError("a preselection must contain at least one arm")
        if arms[0] < 0:
            raise ValueError(f"arm indices must be nonnegative, got {arms[0]}")
        if len(set(arms)) != len(arms):
            raise ValueError(f"duplicate arms in preselection {arms}")
        return tuple(arms)

    @classmethod
    def of(cls, arms: Iterable[int]) -> "Preselection":
        return cls(arms=tuple(arms))

    def __len__(self) -> int:
        return len(self.arms)

    def __contains__(self, arm: object) -> bool:
        return arm in self.arms

    def fits(self, n: int) -> bool:
        """True iff every arm index lies in [0, n)."""
        return self.arms[-1] < n

    @property
    def label(self) -> str:
        """1-based set notation, e.g. ``{1,4,5}``."""
        return "{" + ",".join(str(a + 1) for a in self.arms) + "}"


class ChoiceObservation(BaseModel):
    """The selector's choice from an offered preselection in one round."""

    model_config = ConfigDict(frozen=True)

    offered: Preselection
    chosen: int
    round: int = Field(1, ge=1)

    @model_validator(mode="after")
    def _chosen_offered(self) -> "ChoiceObservation":
        if self.chosen not in self.offered:
            raise ValueError(f"chosen arm {self.chosen + 1} not in {self.offered.label}")
        return self


class Variant(str, Enum):
    """Action space variants."""

    RESTRICTED = "restricted"
    FLEXIBLE = "flexible"


class ActionSpace(BaseModel):
    """Restricted (fixed size l) or flexible (any nonempty subset) preselections."""

    model_config = ConfigDict(frozen=True)

    variant: Variant
    l: Optional[int] = Field(None, description="Preselection size, restricted variant only")

    @model_validator(mode="after")
    def _check_size(self) -> "ActionSpace":
        if self.variant is Variant.RESTRICTED:
            if self.l is None or self.l < 2:
                raise ValueError("the restricted variant needs a preselection size l >= 2")
        elif self.l is not None:
            raise ValueError("the flexible variant does not take a preselection size")
        return self

    @classmethod
    def restricted(cls, l: int) -> "ActionSpace":
        return cls(variant=Variant.RESTRICTED, l=l)

    @classmethod
    def flexible(cls) -> "ActionSpace":
        return cls(variant=Variant.FLEXIBLE)

    @property
    def is_restricted(self) -> bool:
        return self.variant is Variant.RESTRICTED

    def check_arms(self, n: int) -> None:
        """Raise InvalidInputError if this action space is infeasible with n arms."""
        if self.is_restricted and self.l > n:
            raise InvalidInputError(f"preselection size l={self.l} exceeds arm count n={n}")

    def admits(self, subset: Preselection, n: int) -> bool:
        """True iff ``subset`` is a legal action with n arms."""
        if not subset.fits(n):
            return False
        return len(subset) == self.l if self.is_restricted else True

    def optimal(self, v: ScoreVector, budget: Optional[int] = None):
        """Optimal preselection for v in this action space (an ``OptResult``)."""
        # optim depends on this module
        from prebandit.optim.subsets import optimal_subset

        return optimal_subset(v, self, budget)
