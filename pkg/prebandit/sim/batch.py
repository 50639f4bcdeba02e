"""Batch execution: many replicates, one instance each, every configured policy.

Seeding scheme (``numpy.random.SeedSequence``):

* instance of replicate k: ``SeedSequence(master_seed, spawn_key=(k,))``
* episode of policy P in replicate k:
  ``SeedSequence(master_seed, spawn_key=(k, crc32(P.display_name)))``

Replicate k's streams depend on nothing but (master_seed, k, policy name), so
results do not change with the replicate count, the policy order or the
number of workers.
"""

import logging
import zlib
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from typing import Optional

import numpy as np

from prebandit.config import settings
from prebandit.core.errors import ContractViolation, InvalidInputError
from prebandit.optim.subsets import optimal_subset
from prebandit.policies.factory import build_policy
from prebandit.sim.episode import run_episode
from prebandit.sim.instances import draw_instance
from prebandit.sim.schemas import BatchResult, SimulationConfig

logger = logging.getLogger(__name__)


def instance_seed(master_seed: int, replicate: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(master_seed, spawn_key=(replicate,))


def episode_seed(master_seed: int, replicate: int, policy_name: str) -> np.random.SeedSequence:
    return np.random.SeedSequence(
        master_seed, spawn_key=(replicate, zlib.crc32(policy_name.encode("utf-8")))
    )


def run_replicate(config: SimulationConfig, replicate: int) -> np.ndarray:
    """
    Run every policy of ``config`` on replicate ``replicate``'s instance.

    Returns:
        Array of shape (policies, checkpoints) with cumulative regret values

    Raises:
        ContractViolation: Tagged with the replicate index
    """
    space = config.action_space
    v = draw_instance(
        config.instance.source,
        config.n,
        np.random.default_rng(instance_seed(config.master_seed, replicate)),
        config.instance.scores,
    )
    opt = optimal_subset(v, space)

    values = np.empty((len(config.policies), len(config.horizons)))
    for p, spec in enumerate(config.policies):
        name = spec.display_name
        rng = np.random.default_rng(episode_seed(config.master_seed, replicate, name))
        policy = build_policy(spec, v, space)
        try:
            trace = run_episode(policy, v, config.max_horizon, space, rng, opt=opt)
        except ContractViolation as e:
            logger.error(
                f"Contract violation in {name}: {e}",
                exc_info=True,
                extra={"policy": name, "replicate": replicate},
            )
            raise e.for_replicate(replicate) from e
        values[p] = trace.at(config.horizons)

    logger.debug(f"Replicate {replicate} done", extra={"replicate": replicate})
    return values


def run_batch(config: SimulationConfig, workers: Optional[int] = None) -> list[BatchResult]:
    """
    Run all replicates of an experiment and aggregate per checkpoint.

    Replicates may run in worker processes; aggregation always happens in
    replicate-index order, so the output is identical for any worker count.

    Args:
        config: Experiment description
        workers: Worker processes (defaults to ``settings.worker_count``)

    Returns:
        One BatchResult per configured policy, in configuration order
    """
    workers = settings.worker_count if workers is None else max(1, workers)
    logger.info(
        f"Running '{config.name}': {config.replicates} replicate(s), "
        f"{len(config.policies)} policy(ies), T={config.max_horizon}, workers={workers}",
        extra={"n": config.n, "l": config.l},
    )

    indices = range(config.replicates)
    if workers > 1 and config.replicates > 1:
        chunksize = max(1, config.replicates // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_replicate = list(
                pool.map(run_replicate, repeat(config), indices, chunksize=chunksize)
            )
    else:
        per_replicate = [run_replicate(config, k) for k in indices]

    # (replicates, policies, checkpoints)
    stacked = np.stack(per_replicate)
    means = stacked.mean(axis=0)
    stds = stacked.std(axis=0)

    results = []
    for p, spec in enumerate(config.policies):
        results.append(
            BatchResult(
                policy=spec.display_name,
                variant=config.variant,
                n=config.n,
                l=config.l,
                replicates=config.replicates,
                master_seed=config.master_seed,
                checkpoints=list(config.horizons),
                mean=means[p].tolist(),
                std=stds[p].tolist(),
                replicate_values=stacked[:, p, :].tolist() if config.keep_traces else None,
            )
        )

    logger.info(f"Finished '{config.name}'")
    return results


def regret_growth_ratio(result: BatchResult, T1: int, T2: int) -> Optional[float]:
    """
    Mean Reg(T2) / mean Reg(T1), a diagnostic for sublinear growth.

    Returns:
        The ratio, or None when mean Reg(T1) is zero

    Raises:
        InvalidInputError: If T1 >= T2 or either is not a checkpoint
    """
    if T1 >= T2:
        raise InvalidInputError(f"need T1 < T2, got T1={T1}, T2={T2}")
    missing = [T for T in (T1, T2) if T not in result.checkpoints]
    if missing:
        raise InvalidInputError(f"{missing} not among checkpoints {result.checkpoints}")
    denominator = result.mean_at(T1)
    if denominator == 0.0:
        return None
    return result.mean_at(T2) / denominator


def consecutive_growth_ratios(result: BatchResult) -> list[Optional[float]]:
    """Growth ratio between each pair of consecutive checkpoints."""
    points = result.checkpoints
    return [regret_growth_ratio(result, a, b) for a, b in zip(points, points[1:])]
