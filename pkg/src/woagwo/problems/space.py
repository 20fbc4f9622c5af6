from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np


class DimensionError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SearchSpace:
    """Axis-aligned feasible box ``lower <= x <= upper``."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lo = np.atleast_1d(np.asarray(self.lower, dtype=float)).copy()
        hi = np.atleast_1d(np.asarray(self.upper, dtype=float)).copy()
        if lo.shape != hi.shape or lo.ndim != 1 or lo.size < 1:
            raise DimensionError("lower and upper must be equal-length non-empty vectors")
        if not np.all(lo < hi):
            raise ValueError("every lower bound must be strictly below its upper bound")
        lo.flags.writeable = False
        hi.flags.writeable = False
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @classmethod
    def box(cls, lo: float, hi: float, dim: int) -> "SearchSpace":
        if dim < 1:
            raise DimensionError(f"dim must be >= 1, got {dim}")
        return cls(np.full(dim, float(lo)), np.full(dim, float(hi)))

    @property
    def dim(self) -> int:
        return self.lower.size

    def __eq__(self, other):
        if not isinstance(other, SearchSpace):
            return NotImplemented
        return np.array_equal(self.lower, other.lower) and np.array_equal(self.upper, other.upper)

    def __hash__(self):
        return hash((self.lower.tobytes(), self.upper.tobytes()))

    def contains(self, x) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))


def clamp(space: SearchSpace, x):
    """Project ``x`` (a vector or a population matrix) onto the box."""
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != space.dim:
        raise DimensionError(f"expected trailing dimension {space.dim}, got {x.shape[-1]}")
    return np.minimum(space.upper, np.maximum(space.lower, x))


# Objective signature: (population matrix (n, dim), noise stream or None) -> fitness (n,)
Objective = Callable[..., np.ndarray]


@dataclass(frozen=True)
class Problem:
    name: str
    space: SearchSpace
    kind: str
    func: Objective = field(repr=False, compare=False)
    known_best: Optional[float] = None
    noisy: bool = False

    @property
    def dim(self) -> int:
        return self.space.dim

    def evaluate_batch(self, X, noise=None) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        if X.ndim != 2 or X.shape[1] != self.dim:
            raise DimensionError(f"{self.name}: expected (n, {self.dim}) population, got {X.shape}")
        if self.noisy and noise is None:
            raise MissingNoiseError(f"{self.name} needs a noise stream")
        return np.asarray(self.func(X, noise), dtype=float)


class MissingNoiseError(ValueError):
    pass


def evaluate(problem: Problem, x, noise=None) -> float:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size != problem.dim:
        raise DimensionError(f"{problem.name}: expected vector of length {problem.dim}, got shape {x.shape}")
    return float(problem.evaluate_batch(x[None, :], noise)[0])
