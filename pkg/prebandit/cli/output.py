"""CSV, JSON and SVG emission for batch results.

CSVs use a fixed column order, a header row, '.' as decimal point, UTF-8 and
LF line endings. SVGs embed no timestamps and use a fixed hash salt, so they
depend only on the plotted numbers.
"""

import csv
from pathlib import Path
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from prebandit.config import settings  # noqa: E402
from prebandit.policies.sigmoid import SShapedFunction  # noqa: E402
from prebandit.sim.batch import consecutive_growth_ratios  # noqa: E402
from prebandit.sim.schemas import BatchResult, BatchSummary, SimulationConfig  # noqa: E402

CSV_COLUMNS = (
    "policy",
    "variant",
    "n",
    "l",
    "replicate_count",
    "checkpoint_T",
    "mean_cum_regret",
    "std_cum_regret",
    "seed",
)

_SVG_RC = {"svg.hashsalt": "prebandit", "svg.fonttype": "none"}


def format_float(value: float, digits: Optional[int] = None) -> str:
    digits = settings.csv_float_digits if digits is None else digits
    return format(value, f".{digits}g")


def csv_rows(results: Sequence[BatchResult]) -> list[list[str]]:
    """Flatten results into CSV rows, one per (policy, checkpoint)."""
    rows = []
    for result in results:
        for T, mean, std in zip(result.checkpoints, result.mean, result.std):
            rows.append(
                [
                    result.policy,
                    result.variant.value,
                    str(result.n),
                    "" if result.l is None else str(result.l),
                    str(result.replicates),
                    str(T),
                    format_float(mean),
                    format_float(std),
                    str(result.master_seed),
                ]
            )
    return rows


def write_csv(results: Sequence[BatchResult], path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerows(csv_rows(results))


def write_summary(config: SimulationConfig, results: Sequence[BatchResult], path: Path) -> None:
    summary = BatchSummary(
        config=config,
        results=list(results),
        growth_ratios={r.policy: consecutive_growth_ratios(r) for r in results},
    )
    path.write_text(summary.model_dump_json(indent=2) + "\n", encoding="utf-8")


def write_regret_svg(results: Sequence[BatchResult], path: Path, title: str = "") -> None:
    """Mean cumulative regret against T, one polyline per policy."""
    with plt.rc_context(_SVG_RC):
        fig, ax = plt.subplots(figsize=(7, 4.5))
        for result in results:
            ax.plot(result.checkpoints, result.mean, marker="o", label=result.policy)
        ax.set_xlabel("T")
        ax.set_ylabel("mean cumulative regret")
        if title:
            ax.set_title(title)
        ax.grid(True, alpha=0.3)
        ax.legend()
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)


def write_sigma_svg(functions: Sequence[SShapedFunction], path: Path) -> None:
    """Plot S-shaped functions over [-0.25, 1.25]."""
    xs = np.linspace(-0.25, 1.25, 301)
    with plt.rc_context(_SVG_RC):
        fig, ax = plt.subplots(figsize=(6, 4))
        for sigma in functions:
            ax.plot(xs, [sigma(float(x)) for x in xs], label=sigma.label)
        ax.axhline(0.5, color="grey", linewidth=0.5)
        ax.axvline(0.5, color="grey", linewidth=0.5)
        ax.set_xlabel("x")
        ax.set_ylabel("sigma(x)")
        ax.legend()
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
