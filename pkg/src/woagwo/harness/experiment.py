"""Multi-run orchestration.

Every run is addressed by (algorithm, function, run index), so results do
not depend on which worker executes a run or in what order. Workers receive
the configuration and rebuild problems locally, because objectives built
from closures do not pickle.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..optimizers import run as run_optimizer
from ..stats import SampleStats, WilcoxonOutcome, describe, ranksum
from .config import ExperimentConfig, run_stream, stream_index


class RunFailedError(RuntimeError):
    """A single run raised; the message names the run so it can be replayed."""


@dataclass(frozen=True)
class RunRecord:
    algorithm: str
    function_id: str
    run: int
    stream_index: int
    best_fitness: float
    evals: int
    greedy_evals: int
    best_position: tuple


@dataclass
class ExperimentReport:
    algorithms: tuple
    function_ids: tuple
    records: list
    alpha: float = 0.05
    stats: dict = field(default_factory=dict)  # (algorithm, function_id) -> SampleStats
    tests: dict = field(default_factory=dict)  # (function_id, algo_a, algo_b) -> WilcoxonOutcome

    def finals(self, algorithm: str, function_id: str) -> np.ndarray:
        return np.array(
            [r.best_fitness for r in self.records if r.algorithm == algorithm and r.function_id == function_id]
        )

    def pairs(self):
        return list(itertools.combinations(self.algorithms, 2))


def execute_run(config: ExperimentConfig, algorithm: str, function_id: str, run: int) -> RunRecord:
    try:
        problem = config.problem(function_id)
        stream = run_stream(config.master_seed, algorithm, function_id, run)
        trace = run_optimizer(algorithm, problem, config.params(algorithm), stream)
    except Exception as exc:  # fail fast, but say exactly which run broke
        raise RunFailedError(
            f"{algorithm} on {function_id}, run {run} (master seed {config.master_seed}) failed: "
            f"{type(exc).__name__}: {exc}"
        ) from exc
    return RunRecord(
        algorithm=algorithm,
        function_id=function_id,
        run=run,
        stream_index=stream_index(algorithm, function_id, run),
        best_fitness=float(trace.best_fitness),
        evals=int(trace.evals),
        greedy_evals=int(trace.greedy_evals),
        best_position=tuple(float(v) for v in trace.best_position),
    )


def _execute_packed(task):
    return execute_run(*task)


def aggregate(algorithms, function_ids, records, alpha: float = 0.05) -> ExperimentReport:
    """Build the report from raw records alone."""
    order = {a: i for i, a in enumerate(algorithms)}
    forder = {f: i for i, f in enumerate(function_ids)}
    records = sorted(records, key=lambda r: (order[r.algorithm], forder[r.function_id], r.run))
    report = ExperimentReport(tuple(algorithms), tuple(function_ids), records, alpha)
    for fid in function_ids:
        for algo in algorithms:
            finals = report.finals(algo, fid)
            if finals.size:
                report.stats[(algo, fid)] = describe(finals)
        for a, b in report.pairs():
            fa, fb = report.finals(a, fid), report.finals(b, fid)
            if fa.size and fb.size:
                report.tests[(fid, a, b)] = ranksum(fa, fb, alpha=alpha)
    return report


def run_experiment(config: ExperimentConfig, workers: int = 1) -> ExperimentReport:
    """Run algorithms x functions x runs and aggregate.

    ``workers > 1`` fans runs out to a process pool; the report is the same
    for any worker count.
    """
    function_ids = config.function_ids()
    tasks = [
        (config, algo, fid, r)
        for algo in config.algorithms
        for fid in function_ids
        for r in range(config.runs)
    ]
    if workers <= 1:
        records = [execute_run(*t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_execute_packed, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    return aggregate(config.algorithms, function_ids, records, config.alpha)


__all__ = [
    "ExperimentReport",
    "RunFailedError",
    "RunRecord",
    "SampleStats",
    "WilcoxonOutcome",
    "aggregate",
    "execute_run",
    "run_experiment",
]
