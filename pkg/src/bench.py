"""
Scaling harness: solves random cacti of growing size, checks operation counts
against 12n+5b additions and 9n+2b mins, and times each solve.
"""

import time
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from src.graph_core import SEED_MASK, ExtWeight, check_generator_arguments, generate_random_cactus
from src.dfs_cactus import block_decomposition, build_dfs_structure
from src.domination.solver import solve_cactus
from config.solver_config import solver_config

logger = logging.getLogger(__name__)

COLUMNS = ["n", "b", "additions", "min_ops", "add_bound", "min_bound", "wall_time", "gamma"]


class BoundViolationError(AssertionError):
    """A solve used more operations than the linear bound allows."""

    def __init__(self, message: str, seed: int):
        super().__init__(f"{message} (seed={seed})")
        self.seed = seed


class BenchInstanceError(RuntimeError):
    """Generating, building or solving one bench instance failed; the cause is chained."""

    def __init__(self, message: str, seed: int):
        super().__init__(f"{message} (seed={seed})")
        self.seed = seed


@dataclass(frozen=True)
class BenchRow:
    n: int
    b: int
    additions: int
    min_ops: int
    add_bound: int
    min_bound: int
    wall_time: float
    gamma: ExtWeight
    traversal_steps: int = 0


def addition_bound(n: int, b: int) -> int:
    return 12 * n + 5 * b


def min_bound(n: int, b: int) -> int:
    return 9 * n + 2 * b


def instance_seed(seed: int, n: int, repetition: int) -> int:
    """Seed of one generated instance; independent of the other sizes in the run."""
    sequence = np.random.SeedSequence([seed & SEED_MASK, n, repetition])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def run_scaling(seed: int,
                sizes: Sequence[int],
                cycle_fraction: float,
                repetitions: int,
                max_cycle_len: Optional[int] = None,
                weight_range: Optional[Tuple[float, float]] = None) -> List[BenchRow]:
    """
    Generate, solve and time `repetitions` cacti per size.

    Args:
        seed (int): Run seed
        sizes (Sequence[int]): Ascending target vertex counts
        cycle_fraction (float): Generator probability of attaching a cycle
        repetitions (int): Instances per size
        max_cycle_len (int, optional): Generator cycle length cap
        weight_range (Tuple[float, float], optional): Generator weight range

    Returns:
        List[BenchRow]: One row per size with median wall time and maximum counters
    """
    if not sizes:
        raise ValueError("sizes must not be empty")
    if any(n < 1 for n in sizes) or list(sizes) != sorted(sizes):
        raise ValueError(f"sizes must be positive and ascending, got {list(sizes)}")
    if repetitions < 1:
        raise ValueError(f"repetitions must be positive, got {repetitions}")
    if max_cycle_len is None:
        max_cycle_len = solver_config.max_cycle_len
    if weight_range is None:
        weight_range = solver_config.weight_range
    check_generator_arguments(cycle_fraction, max_cycle_len, weight_range)

    rows = []
    for n_target in sizes:
        times, additions, min_ops, steps, vertex_counts, block_counts = [], [], [], [], [], []
        gamma = None
        for repetition in range(repetitions):
            current = instance_seed(seed, n_target, repetition)
            try:
                graph = generate_random_cactus(current, n_target, cycle_fraction,
                                               max_cycle_len, weight_range)
                start = time.perf_counter()
                structure = build_dfs_structure(graph, 0)
                result = solve_cactus(graph, structure)
                times.append(time.perf_counter() - start)
            except Exception as e:
                logger.error(f"Bench instance n={n_target} seed={current} failed: {e}")
                raise BenchInstanceError(f"bench instance n={n_target} failed: {e}", current) from e

            n = graph.vertex_count
            b = block_decomposition(structure, graph).block_count
            if result.counter.additions > addition_bound(n, b):
                raise BoundViolationError(
                    f"{result.counter.additions} additions exceed 12n+5b={addition_bound(n, b)}", current)
            if result.counter.min_ops > min_bound(n, b):
                raise BoundViolationError(
                    f"{result.counter.min_ops} mins exceed 9n+2b={min_bound(n, b)}", current)

            additions.append(result.counter.additions)
            min_ops.append(result.counter.min_ops)
            steps.append(structure.traversal_steps)
            vertex_counts.append(n)
            block_counts.append(b)
            if gamma is None:
                gamma = result.gamma

        n, b = max(vertex_counts), max(block_counts)
        row = BenchRow(n=n, b=b, additions=max(additions), min_ops=max(min_ops),
                       add_bound=addition_bound(n, b), min_bound=min_bound(n, b),
                       wall_time=float(np.median(times)), gamma=gamma,
                       traversal_steps=max(steps))
        logger.info(f"Bench n={n} b={b}: additions={row.additions}/{row.add_bound}, "
                    f"min_ops={row.min_ops}/{row.min_bound}, median {row.wall_time:.6f}s")
        rows.append(row)
    return rows


def rows_to_frame(rows: Sequence[BenchRow], verbose: bool = False) -> pd.DataFrame:
    """Bench rows as a DataFrame; gamma is kept in its printed form."""
    columns = COLUMNS + (["traversal_steps"] if verbose else [])
    records = []
    for row in rows:
        record = {column: getattr(row, column) for column in columns}
        record["gamma"] = str(row.gamma)
        records.append(record)
    return pd.DataFrame(records, columns=columns)


def format_table(rows: Sequence[BenchRow], csv: bool = False, verbose: bool = False) -> str:
    """Tab-separated table with a header, or comma-separated with csv=True."""
    frame = rows_to_frame(rows, verbose)
    return frame.to_csv(sep="," if csv else "\t", index=False, float_format="%.6f",
                        lineterminator="\n")
