"""Optimal-preselection computation."""

from prebandit.optim.subsets import (
    OptResult,
    f_eval,
    f_minimizer,
    optimal_subset,
    optimal_subset_bruteforce,
    optimal_subset_flexible,
    optimal_subset_greedy,
)

__all__ = [
    "OptResult",
    "f_eval",
    "f_minimizer",
    "optimal_subset",
    "optimal_subset_bruteforce",
    "optimal_subset_flexible",
    "optimal_subset_greedy",
]
