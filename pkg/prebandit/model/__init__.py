"""Plackett-Luce environment: domain types and choice calculus."""

from prebandit.model.plackett_luce import (
    choice_probability,
    expected_reward,
    instant_regret,
    marginal_by_enumeration,
    ranking_probability,
    reference_reward,
    relative_score,
    relative_scores,
    sample_choice,
    sample_ranking,
)
from prebandit.model.types import (
    ActionSpace,
    ChoiceObservation,
    Preselection,
    Ranking,
    ScoreVector,
    Variant,
)

__all__ = [
    "ActionSpace",
    "ChoiceObservation",
    "Preselection",
    "Ranking",
    "ScoreVector",
    "Variant",
    "choice_probability",
    "expected_reward",
    "instant_regret",
    "marginal_by_enumeration",
    "ranking_probability",
    "reference_reward",
    "relative_score",
    "relative_scores",
    "sample_choice",
    "sample_ranking",
]
