"""Pydantic schemas for policy specifications and state snapshots."""

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from prebandit.policies.sigmoid import SShapedFunction


class TrcbSpec(BaseModel):
    """Thresholding-random-confidence-bound policy for the restricted variant."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["trcb"] = "trcb"
    c_shrink: float = Field(
        7e-5, gt=0.0, lt=0.5, description="Magnitude of uncertainty consideration"
    )
    v_min: float = Field(0.02, gt=0.0, lt=1.0, description="Assumed lower bound on scores")
    label: Optional[str] = Field(None, description="Name used in outputs")

    @property
    def display_name(self) -> str:
        return self.label or "TRCB"


class CbrSpec(BaseModel):
    """Confidence-bound-racing policy for the flexible variant."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["cbr"] = "cbr"
    sigma: Literal["clamp", "arctan"] = "clamp"
    gamma: float = Field(2.0, gt=0.0, description="Steepness of the arctan S-shaped function")
    label: Optional[str] = Field(None, description="Name used in outputs")

    @property
    def display_name(self) -> str:
        if self.label:
            return self.label
        return "CBR" if self.sigma == "clamp" else "CBR-As"

    def s_shaped(self) -> SShapedFunction:
        return SShapedFunction(kind=self.sigma, gamma=self.gamma)


class UniformSpec(BaseModel):
    """Uniformly random preselections (control baseline)."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["uniform"] = "uniform"
    label: Optional[str] = None

    @property
    def display_name(self) -> str:
        return self.label or "Uniform"


class OracleSpec(BaseModel):
    """Always suggests the true optimal preselection (zero-regret reference)."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["oracle"] = "oracle"
    label: Optional[str] = None

    @property
    def display_name(self) -> str:
        return self.label or "Oracle"


PolicySpec = Annotated[
    Union[TrcbSpec, CbrSpec, UniformSpec, OracleSpec],
    Field(discriminator="kind"),
]


class WinMatrixSnapshot(BaseModel):
    """Serialized win counts."""

    counts: list[list[int]] = Field(..., description="Row i, column j holds w[i,j]")


class TrcbSnapshot(BaseModel):
    """JSON checkpoint of a TRCB policy."""

    kind: Literal["trcb"] = "trcb"
    n: int = Field(..., ge=2)
    l: int = Field(..., ge=2)
    c_shrink: float
    v_min: float
    round: int = Field(..., ge=0, description="Completed rounds")
    wins: WinMatrixSnapshot
    rel_scores: list[list[float]] = Field(..., description="Raw relative-score estimates")


class CbrSnapshot(BaseModel):
    """JSON checkpoint of a CBR policy."""

    kind: Literal["cbr"] = "cbr"
    n: int = Field(..., ge=2)
    round: int = Field(..., ge=0, description="Completed rounds")
    wins: WinMatrixSnapshot
    probs: list[list[float]] = Field(..., description="Pairwise winning-probability estimates")
    active: list[int] = Field(..., description="Arms still eligible for inclusion, 0-based")
    sigma: SShapedFunction


class BaselineSnapshot(BaseModel):
    """Baselines carry no learned state; the snapshot records what they are."""

    kind: Literal["uniform", "oracle"]
    n: int = Field(..., ge=2)
    l: Optional[int] = None
    round: int = Field(..., ge=0)
