"""Shared test helpers."""

from prebandit.model.types import Preselection

# Score vectors whose optimal 3-subsets differ: {1,4,5}, {1,2,3}, {1,2,5}
DECOY_INSTANCE = (1.0, 0.122, 0.044, 0.037, 0.017)
TOP_INSTANCE = (1.0, 0.681, 0.572, 0.543, 0.399)
MIXED_INSTANCE = (1.0, 0.681, 0.572, 0.543, 0.171)


def subset(*one_based: int) -> Preselection:
    """Preselection from 1-based arm numbers."""
    return Preselection.of(a - 1 for a in one_based)
