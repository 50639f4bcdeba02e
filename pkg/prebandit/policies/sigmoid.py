"""S-shaped functions mapping CBR's normalized confidence excess to a probability."""

import math
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


class SShapedFunction(BaseModel):
    """
    Monotone map from the reals to [0, 1] with sigma(1/2) = 1/2.

    ``clamp`` is min(1, max(0, x)). ``arctan`` is the smoother CBR-As curve
    (1/pi) * arctan((x - 1/2) / ((1 - x)^gamma * x^gamma)) + 1/2 on (0, 1).
    Both are 0 for x <= 0 and 1 for x >= 1.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["clamp", "arctan"] = "clamp"
    gamma: float = Field(2.0, gt=0.0, description="Steepness of the arctan variant")

    def __call__(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        if x >= 1.0:
            return 1.0
        if self.kind == "clamp":
            return x
        spread = ((1.0 - x) ** self.gamma) * (x**self.gamma)
        if x < 0.5:
            # atan(r) + pi/2 == atan(-1/r) for r < 0, without cancellation near x = 0
            return math.atan(spread / (0.5 - x)) / math.pi
        return math.atan((x - 0.5) / spread) / math.pi + 0.5

    @property
    def label(self) -> str:
        return "clamp" if self.kind == "clamp" else f"arctan(gamma={self.gamma:g})"
