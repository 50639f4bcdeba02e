"""Episode and batch simulation harness."""

from prebandit.sim.batch import consecutive_growth_ratios, regret_growth_ratio, run_batch
from prebandit.sim.episode import RegretTrace, run_episode
from prebandit.sim.instances import draw_instance
from prebandit.sim.schemas import (
    BatchResult,
    BatchSummary,
    InstanceSource,
    InstanceSpec,
    SimulationConfig,
)

__all__ = [
    "BatchResult",
    "BatchSummary",
    "InstanceSource",
    "InstanceSpec",
    "RegretTrace",
    "SimulationConfig",
    "consecutive_growth_ratios",
    "draw_instance",
    "regret_growth_ratio",
    "run_batch",
    "run_episode",
]
