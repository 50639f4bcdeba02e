"""Pydantic schemas for experiment configuration and batch results."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from prebandit.model.types import ActionSpace, Variant
from prebandit.policies.schemas import CbrSpec, PolicySpec, TrcbSpec


class InstanceSource(str, Enum):
    """Where the hidden score vector of each replicate comes from."""

    SIMPLEX = "simplex"
    UNIT_INTERVAL = "unit_interval"
    EXPLICIT = "explicit"


class InstanceSpec(BaseModel):
    """Instance generator for a batch."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    source: InstanceSource = Field(InstanceSource.SIMPLEX, description="Instance distribution")
    scores: Optional[list[float]] = Field(
        None, description="Fixed score vector, required for the explicit source"
    )

    @model_validator(mode="after")
    def _scores_match_source(self) -> "InstanceSpec":
        if self.source is InstanceSource.EXPLICIT:
            if not self.scores:
                raise ValueError("the explicit instance source needs a 'scores' list")
            if any(s <= 0.0 for s in self.scores):
                raise ValueError("explicit scores must all be positive")
        elif self.scores is not None:
            raise ValueError(
                f"'scores' is only allowed with source = 'explicit', not '{self.source.value}'"
            )
        return self


class SimulationConfig(BaseModel):
    """Declarative description of a batch experiment."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    name: str = Field("experiment", description="Label for outputs")
    variant: Variant
    n: int = Field(..., ge=2, description="Number of arms")
    l: Optional[int] = Field(None, description="Preselection size (restricted variant)")
    horizons: list[int] = Field(..., min_length=1, description="Checkpoints T, ascending")
    replicates: int = Field(..., ge=1)
    instance: InstanceSpec = Field(default_factory=InstanceSpec)
    policies: list[PolicySpec] = Field(..., min_length=1)
    master_seed: int = Field(0, ge=0)
    keep_traces: bool = Field(False, description="Retain per-replicate checkpoint values")

    @field_validator("horizons")
    @classmethod
    def _ascending(cls, value: list[int]) -> list[int]:
        if any(t < 1 for t in value):
            raise ValueError("horizons must be positive")
        if any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError("horizons must be strictly ascending")
        return value

    @model_validator(mode="after")
    def _consistent(self) -> "SimulationConfig":
        if self.variant is Variant.RESTRICTED:
            if self.l is None or not 2 <= self.l <= self.n:
                raise ValueError(
                    f"the restricted variant needs 2 <= l <= n (n={self.n}, l={self.l})"
                )
        elif self.l is not None:
            raise ValueError("the flexible variant does not take 'l'")

        if self.instance.scores is not None and len(self.instance.scores) != self.n:
            raise ValueError(
                f"explicit scores have {len(self.instance.scores)} entries, expected n={self.n}"
            )

        names = [p.display_name for p in self.policies]
        if len(set(names)) != len(names):
            raise ValueError(f"policy names must be unique, got {names}")

        for spec in self.policies:
            if isinstance(spec, TrcbSpec) and self.variant is not Variant.RESTRICTED:
                raise ValueError("TRCB runs on the restricted variant only")
            if isinstance(spec, CbrSpec) and self.variant is not Variant.FLEXIBLE:
                raise ValueError("CBR runs on the flexible variant only")
        return self

    @property
    def action_space(self) -> ActionSpace:
        if self.variant is Variant.RESTRICTED:
            return ActionSpace.restricted(self.l)
        return ActionSpace.flexible()

    @property
    def max_horizon(self) -> int:
        return self.horizons[-1]


class BatchResult(BaseModel):
    """Mean and standard deviation of cumulative regret per checkpoint for one policy."""

    policy: str = Field(..., description="Policy display name")
    variant: Variant
    n: int
    l: Optional[int] = None
    replicates: int = Field(..., ge=1)
    master_seed: int
    checkpoints: list[int]
    mean: list[float] = Field(..., description="Mean cumulative regret per checkpoint")
    std: list[float] = Field(..., description="Population std of cumulative regret per checkpoint")
    replicate_values: Optional[list[list[float]]] = Field(
        None, description="Cumulative regret per replicate (rows) and checkpoint (columns)"
    )

    def mean_at(self, T: int) -> float:
        return self.mean[self.checkpoints.index(T)]

    def std_at(self, T: int) -> float:
        return self.std[self.checkpoints.index(T)]


class BatchSummary(BaseModel):
    """JSON summary written next to the CSV output."""

    config: SimulationConfig
    results: list[BatchResult]
    growth_ratios: dict[str, list[Optional[float]]] = Field(
        default_factory=dict,
        description="Mean regret ratio between consecutive checkpoints, per policy",
    )
