"""Per-policy sufficient statistics.

A state belongs to exactly one episode. ``round`` counts completed rounds, so
the round being played is ``round + 1``.
"""

from dataclasses import dataclass, field

import numpy as np

from prebandit.core.errors import InvalidInputError
from prebandit.policies.schemas import CbrSnapshot, TrcbSnapshot, WinMatrixSnapshot
from prebandit.policies.sigmoid import SShapedFunction
from prebandit.policies.win_matrix import WinMatrix


@dataclass
class TrcbState:
    """Win counts and raw relative-score estimates of a TRCB run."""

    wins: WinMatrix
    rel_scores: np.ndarray
    c_shrink: float
    v_min: float
    l: int
    round: int = 0

    def __post_init__(self) -> None:
        if not 0.0 < self.c_shrink < 0.5:
            raise InvalidInputError(f"c_shrink must lie in (0, 1/2), got {self.c_shrink}")
        if not 0.0 < self.v_min < 1.0:
            raise InvalidInputError(f"v_min must lie in (0, 1), got {self.v_min}")
        if not 2 <= self.l <= self.n:
            raise InvalidInputError(f"preselection size l={self.l} must lie in [2, {self.n}]")

    @classmethod
    def initial(cls, n: int, l: int, c_shrink: float, v_min: float) -> "TrcbState":
        return cls(
            wins=WinMatrix.zeros(n),
            rel_scores=np.ones((n, n)),
            c_shrink=c_shrink,
            v_min=v_min,
            l=l,
        )

    @property
    def n(self) -> int:
        return self.wins.n

    @property
    def t(self) -> int:
        """The round currently being played."""
        return self.round + 1

    def snapshot(self) -> TrcbSnapshot:
        return TrcbSnapshot(
            n=self.n,
            l=self.l,
            c_shrink=self.c_shrink,
            v_min=self.v_min,
            round=self.round,
            wins=WinMatrixSnapshot(counts=self.wins.counts.tolist()),
            rel_scores=self.rel_scores.tolist(),
        )

    @classmethod
    def from_snapshot(cls, snap: TrcbSnapshot) -> "TrcbState":
        return cls(
            wins=WinMatrix(counts=np.asarray(snap.wins.counts, dtype=np.int64)),
            rel_scores=np.asarray(snap.rel_scores, dtype=float),
            c_shrink=snap.c_shrink,
            v_min=snap.v_min,
            l=snap.l,
            round=snap.round,
        )


@dataclass
class CbrState:
    """Win counts, winning-probability estimates and the active arm pool of a CBR run."""

    wins: WinMatrix
    probs: np.ndarray
    sigma: SShapedFunction = field(default_factory=SShapedFunction)
    active: set[int] = field(default_factory=set)
    round: int = 0

    @classmethod
    def initial(cls, n: int, sigma: SShapedFunction) -> "CbrState":
        return cls(
            wins=WinMatrix.zeros(n),
            probs=np.full((n, n), 0.5),
            sigma=sigma,
            active=set(range(n)),
        )

    @property
    def n(self) -> int:
        return self.wins.n

    @property
    def t(self) -> int:
        """The round currently being played."""
        return self.round + 1

    def snapshot(self) -> CbrSnapshot:
        return CbrSnapshot(
            n=self.n,
            round=self.round,
            wins=WinMatrixSnapshot(counts=self.wins.counts.tolist()),
            probs=self.probs.tolist(),
            active=sorted(self.active),
            sigma=self.sigma,
        )

    @classmethod
    def from_snapshot(cls, snap: CbrSnapshot) -> "CbrState":
        return cls(
            wins=WinMatrix(counts=np.asarray(snap.wins.counts, dtype=np.int64)),
            probs=np.asarray(snap.probs, dtype=float),
            sigma=snap.sigma,
            active=set(snap.active),
            round=snap.round,
        )
