"""Online learning policies behind a common suggest/observe interface."""

from prebandit.policies.base import Policy
from prebandit.policies.baselines import (
    OraclePolicy,
    UniformPolicy,
    baseline_oracle_suggest,
    baseline_uniform_suggest,
)
from prebandit.policies.cbr import (
    CbrPolicy,
    cbr_confidence,
    cbr_inclusion_prob,
    cbr_observe,
    cbr_suggest,
)
from prebandit.policies.factory import build_policy
from prebandit.policies.schemas import CbrSpec, OracleSpec, PolicySpec, TrcbSpec, UniformSpec
from prebandit.policies.sigmoid import SShapedFunction
from prebandit.policies.state import CbrState, TrcbState
from prebandit.policies.trcb import (
    TrcbPolicy,
    trcb_confidence_width,
    trcb_observe,
    trcb_perturbed_score,
    trcb_suggest,
)
from prebandit.policies.win_matrix import WinMatrix, reference_arm

__all__ = [
    "CbrPolicy",
    "CbrSpec",
    "CbrState",
    "OraclePolicy",
    "OracleSpec",
    "Policy",
    "PolicySpec",
    "SShapedFunction",
    "TrcbPolicy",
    "TrcbSpec",
    "TrcbState",
    "UniformPolicy",
    "UniformSpec",
    "WinMatrix",
    "baseline_oracle_suggest",
    "baseline_uniform_suggest",
    "build_policy",
    "cbr_confidence",
    "cbr_inclusion_prob",
    "cbr_observe",
    "cbr_suggest",
    "reference_arm",
    "trcb_confidence_width",
    "trcb_observe",
    "trcb_perturbed_score",
    "trcb_suggest",
]
