"""Test configuration and fixtures."""

import numpy as np
import pytest

from prebandit.model.types import ScoreVector
from tests.helpers import DECOY_INSTANCE, MIXED_INSTANCE, TOP_INSTANCE


@pytest.fixture
def rng():
    """Seeded random source."""
    return np.random.default_rng(12345)


@pytest.fixture
def decoy_scores():
    """Instance whose best 3-subset pairs the top arm with the two weakest."""
    return ScoreVector.of(DECOY_INSTANCE)


@pytest.fixture
def top_scores():
    """Instance whose best 3-subset is the three strongest arms."""
    return ScoreVector.of(TOP_INSTANCE)


@pytest.fixture
def mixed_scores():
    """Instance whose best 3-subset mixes strong arms and one decoy."""
    return ScoreVector.of(MIXED_INSTANCE)


@pytest.fixture
def reference_instances(decoy_scores, top_scores, mixed_scores):
    """(scores, 1-based optimal 3-subset, reward to three decimals) triples."""
    return [
        (decoy_scores, (1, 4, 5), 0.951),
        (top_scores, (1, 2, 3), 0.795),
        (mixed_scores, (1, 2, 5), 0.806),
    ]
