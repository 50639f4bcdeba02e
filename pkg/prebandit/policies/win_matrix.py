"""Pairwise win counts accumulated from observed choices."""

from dataclasses import dataclass

import numpy as np

from prebandit.model.types import ChoiceObservation


@dataclass
class WinMatrix:
    """
    Counts w[i, j] of how often arm i was chosen while j was also offered.

    Entries only ever grow and the diagonal stays zero.
    """

    counts: np.ndarray

    @classmethod
    def zeros(cls, n: int) -> "WinMatrix":
        return cls(counts=np.zeros((n, n), dtype=np.int64))

    @property
    def n(self) -> int:
        return self.counts.shape[0]

    def record(self, obs: ChoiceObservation) -> None:
        """Credit the chosen arm with a win over every other offered arm."""
        losers = [j for j in obs.offered.arms if j != obs.chosen]
        self.counts[obs.chosen, losers] += 1

    def comparisons(self, i: int, j: int) -> int:
        """Number of rounds in which i and j were offered together (w[i,j] + w[j,i])."""
        return int(self.counts[i, j] + self.counts[j, i])

    def comparisons_with(self, J: int) -> np.ndarray:
        """Vector of w[i,J] + w[J,i] over all arms i."""
        return self.counts[:, J] + self.counts[J, :]

    def total(self) -> int:
        return int(self.counts.sum())


def reference_arm(W: WinMatrix) -> int:
    """
    Arm with the most pairwise non-losing records.

    Counts, for every arm i, the arms j != i with w[i,j] >= w[j,i] and returns
    the arm with the largest count. Ties go to the lowest index.
    """
    counts = W.counts
    # The diagonal always satisfies w[i,i] >= w[i,i]; it shifts every count by one
    non_losing = (counts >= counts.T).sum(axis=1)
    return int(np.argmax(non_losing))
