"""Whale Optimization, Grey Wolf Optimizer and their WOAGWO hybrid.

Subpackages: :mod:`woagwo.prng` (counter-based random streams),
:mod:`woagwo.problems` (benchmark functions and the pressure vessel),
:mod:`woagwo.optimizers`, :mod:`woagwo.stats` and :mod:`woagwo.harness`
(experiments, reports and the command line).
"""
from ._jit import backend
from .optimizers import OptimizerParams, RunTrace, run
from .prng import RandomStream, new_stream, split
from .problems import PenaltyPolicy, Problem, SearchSpace, classic23, pressure_vessel
from .stats import SampleStats, WilcoxonOutcome, describe, ranksum

__version__ = "0.1.0"

__all__ = [
    "OptimizerParams",
    "PenaltyPolicy",
    "Problem",
    "RandomStream",
    "RunTrace",
    "SampleStats",
    "SearchSpace",
    "WilcoxonOutcome",
    "backend",
    "classic23",
    "describe",
    "new_stream",
    "pressure_vessel",
    "ranksum",
    "run",
    "split",
]
