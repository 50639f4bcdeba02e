"""Reference instances with different optimal 3-subsets (n=5, l=3)."""

from dataclasses import dataclass

from prebandit.model.plackett_luce import expected_reward
from prebandit.model.types import Preselection, ScoreVector
from prebandit.optim.subsets import optimal_subset_bruteforce

# Subsets in 1-based notation, as printed
LISTED_SUBSETS = ((1, 2, 3), (1, 2, 5), (1, 3, 5), (1, 4, 5), (2, 3, 4))


@dataclass(frozen=True)
class ReferenceInstance:
    scores: tuple[float, ...]
    published: tuple[float, ...]  # rewards of LISTED_SUBSETS, as published
    best: tuple[int, ...]  # 1-based


INSTANCES = (
    ReferenceInstance(
        scores=(1.0, 0.122, 0.044, 0.037, 0.017),
        published=(0.872, 0.891, 0.945, 0.951, 0.0896),
        best=(1, 4, 5),
    ),
    ReferenceInstance(
        scores=(1.0, 0.681, 0.572, 0.543, 0.399),
        published=(0.795, 0.780, 0.754, 0.749, 0.604),
        best=(1, 2, 3),
    ),
    ReferenceInstance(
        scores=(1.0, 0.681, 0.572, 0.543, 0.171),
        published=(0.795, 0.806, 0.778, 0.773, 0.604),
        best=(1, 2, 5),
    ),
)


@dataclass(frozen=True)
class InstanceReport:
    instance: ReferenceInstance
    rewards: tuple[float, ...]
    argmax: tuple[int, ...]  # 1-based, among the listed subsets
    optimum: tuple[int, ...]  # 1-based, over all 3-subsets

    @property
    def matches(self) -> bool:
        return self.argmax == self.instance.best and self.optimum == self.instance.best


def to_preselection(one_based: tuple[int, ...]) -> Preselection:
    return Preselection.of(a - 1 for a in one_based)


def evaluate(instance: ReferenceInstance) -> InstanceReport:
    """Rewards of the listed subsets, their argmax and the exhaustive optimum."""
    v = ScoreVector.of(instance.scores)
    rewards = tuple(expected_reward(to_preselection(s), v) for s in LISTED_SUBSETS)
    argmax = LISTED_SUBSETS[max(range(len(rewards)), key=rewards.__getitem__)]
    optimum = tuple(a + 1 for a in optimal_subset_bruteforce(v, 3).subset.arms)
    return InstanceReport(instance=instance, rewards=rewards, argmax=argmax, optimum=optimum)


def format_report(reports: list[InstanceReport]) -> str:
    """Plain-text table, the argmax marked with '*'."""
    header = "S".rjust(8) + "".join(
        ("{" + ",".join(map(str, s)) + "}").rjust(12) for s in LISTED_SUBSETS
    )
    out = [header]
    for report in reports:
        out.append("v = (" + ", ".join(f"{x:g}" for x in report.instance.scores) + ")")
        cells = []
        for subset, reward in zip(LISTED_SUBSETS, report.rewards):
            mark = "*" if subset == report.argmax else " "
            cells.append(f"{reward:.4f}{mark}".rjust(12))
        out.append("R(S)".rjust(8) + "".join(cells))
        status = "ok" if report.matches else "MISMATCH"
        out.append(
            f"  best listed {{{','.join(map(str, report.argmax))}}}, "
            f"exhaustive optimum {{{','.join(map(str, report.optimum))}}}, "
            f"expected {{{','.join(map(str, report.instance.best))}}}: {status}"
        )
    return "\n".join(out)
