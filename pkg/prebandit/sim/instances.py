"""Random problem instances."""

from typing import Optional, Sequence

import numpy as np

from prebandit.core.errors import InvalidInputError
from prebandit.model.types import ScoreVector
from prebandit.sim.schemas import InstanceSource


def draw_instance(
    source: InstanceSource,
    n: int,
    rng: np.random.Generator,
    scores: Optional[Sequence[float]] = None,
) -> ScoreVector:
    """
    Draw a score vector.

    Args:
        source: ``simplex`` (uniform on the n-simplex, i.e. normalized i.i.d.
            standard exponentials), ``unit_interval`` (i.i.d. uniform on (0, 1])
            or ``explicit`` (returns ``scores`` unchanged)
        n: Number of arms
        rng: Seeded random source
        scores: Fixed scores for the explicit source

    Returns:
        Strictly positive score vector
    """
    if n < 2:
        raise InvalidInputError(f"need at least 2 arms, got {n}")

    if source is InstanceSource.EXPLICIT:
        if scores is None or len(scores) != n:
            raise InvalidInputError(f"explicit source needs exactly {n} scores")
        return ScoreVector.of(scores)

    if source is InstanceSource.SIMPLEX:
        draws = rng.standard_exponential(n)
        # An exact zero has probability ~2^-53 per entry; redraw rather than emit it
        while np.any(draws == 0.0):
            draws = rng.standard_exponential(n)
        return ScoreVector.of(draws / draws.sum())

    # 1 - U maps [0, 1) onto (0, 1]
    return ScoreVector.of(1.0 - rng.random(n))
