"""Uniform suggest/observe interface shared by all policies."""

from abc import ABC, abstractmethod

import numpy as np
from pydantic import BaseModel

from prebandit.model.types import ChoiceObservation, Preselection


class Policy(ABC):
    """An online learner that offers preselections and learns from choices."""

    name: str = "policy"

    @abstractmethod
    def suggest(self, rng: np.random.Generator) -> Preselection:
        """Preselection to offer in the next round."""

    @abstractmethod
    def observe(self, obs: ChoiceObservation) -> None:
        """Update internal statistics with the selector's choice."""

    @abstractmethod
    def snapshot(self) -> BaseModel:
        """JSON-serializable checkpoint of the policy state."""
