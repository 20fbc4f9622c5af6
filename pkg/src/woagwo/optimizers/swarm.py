from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from ..prng import RandomStream


@dataclass
class SwarmState:
    """Population plus bookkeeping between iterations.

    ``leader_pos``/``leader_fit`` hold alpha, beta and delta, best first.
    Alpha is always the best point evaluated so far. Under
    ``leader_rule="best3"`` the three rows are the three best distinct points
    ever evaluated; under ``"reference"`` beta and delta follow the classic
    GWO update and may go stale.
    """

    positions: np.ndarray
    fitness: np.ndarray
    leader_pos: np.ndarray
    leader_fit: np.ndarray
    stream: RandomStream
    noise: Optional[RandomStream] = None
    iter: int = 0
    evals: int = 0
    greedy_evals: int = 0

    @property
    def best_position(self) -> np.ndarray:
        return self.leader_pos[0]

    @property
    def best_fitness(self) -> float:
        return float(self.leader_fit[0])

    def copy(self) -> "SwarmState":
        return replace(
            self,
            positions=self.positions.copy(),
            fitness=self.fitness.copy(),
            leader_pos=self.leader_pos.copy(),
            leader_fit=self.leader_fit.copy(),
            stream=self.stream.copy(),
            noise=None if self.noise is None else self.noise.copy(),
        )

    def same_as(self, other: "SwarmState") -> bool:
        return (
            np.array_equal(self.positions, other.positions)
            and np.array_equal(self.fitness, other.fitness)
            and np.array_equal(self.leader_pos, other.leader_pos)
            and np.array_equal(self.leader_fit, other.leader_fit)
            and self.iter == other.iter
            and self.evals == other.evals
            and self.stream.counter == other.stream.counter
        )


def reference_leaders(leader_pos, leader_fit, pos, fit):
    """Leader update of the reference GWO code, applied point by point.

    A new alpha does not demote the old one, so beta and delta can go stale;
    only the ordering alpha <= beta <= delta is guaranteed.
    """
    if leader_pos is None:
        lp = np.zeros((3, pos.shape[1]))
        lf = np.full(3, np.inf)
    else:
        lp, lf = leader_pos.copy(), leader_fit.copy()
    for x, f in zip(pos, fit):
        if f < lf[0]:
            lf[0], lp[0] = f, x
        if lf[0] < f < lf[1]:
            lf[1], lp[1] = f, x
        if f > lf[0] and f > lf[1] and f < lf[2]:
            lf[2], lp[2] = f, x
    # fewer than three distinct values seen so far: repeat the last leader
    for w in (1, 2):
        if not np.isfinite(lf[w]):
            lf[w], lp[w] = lf[w - 1], lp[w - 1]
    return lp, lf


def update_leaders(leader_pos, leader_fit, pos, fit, rule: str = "best3"):
    if rule == "best3":
        return merge_leaders(leader_pos, leader_fit, pos, fit)
    return reference_leaders(leader_pos, leader_fit, pos, fit)


def merge_leaders(leader_pos, leader_fit, pos, fit, k: int = 3):
    """Keep the ``k`` best distinct points among the old leaders and new ones.

    Old leaders come first so that a tie never displaces them.
    """
    all_pos = np.concatenate([leader_pos, pos]) if leader_pos is not None else pos
    all_fit = np.concatenate([leader_fit, fit]) if leader_fit is not None else fit
    order = np.argsort(all_fit, kind="stable")
    chosen = []
    for idx in order:
        p = all_pos[idx]
        if any(np.array_equal(p, all_pos[c]) for c in chosen):
            continue
        chosen.append(idx)
        if len(chosen) == k:
            break
    while len(chosen) < k:
        chosen.append(chosen[-1])
    chosen = np.asarray(chosen)
    return all_pos[chosen].copy(), all_fit[chosen].copy()


@dataclass
class RunTrace:
    best_curve: np.ndarray
    best_position: np.ndarray
    best_fitness: float
    evals: int
    seed: int
    greedy_evals: int = 0
    extra: dict = field(default_factory=dict)

    def same_as(self, other: "RunTrace") -> bool:
        return (
            self.best_curve.tobytes() == other.best_curve.tobytes()
            and self.best_position.tobytes() == other.best_position.tobytes()
            and self.best_fitness == other.best_fitness
            and self.evals == other.evals
            and self.seed == other.seed
        )
