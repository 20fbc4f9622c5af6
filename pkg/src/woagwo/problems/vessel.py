"""Pressure-vessel design: minimize material, forming and welding cost.

x = (Ts, Th, R, L): shell thickness, head thickness, inner radius and the
length of the cylindrical section. Thicknesses are continuous in [0, 99].
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .space import DimensionError, Problem, SearchSpace

VESSEL_SPACE = SearchSpace(np.array([0.0, 0.0, 10.0, 10.0]), np.array([99.0, 99.0, 200.0, 200.0]))

# The cost is increasing in every coordinate on the box, so its maximum sits
# at the upper corner (about 5.5e7); the sentinel clears it with margin.
DEATH_SENTINEL = 1e12

CONSTRAINT_FORMS = ("corrected", "literal")


@dataclass(frozen=True)
class ConstraintReport:
    g: tuple
    feasible: bool
    violation: float


@dataclass(frozen=True)
class PenaltyPolicy:
    mode: str = "static"
    coefficient: float = 1e6

    def __post_init__(self):
        if self.mode not in ("static", "death"):
            raise ValueError(f"unknown penalty mode {self.mode!r}")
        if self.mode == "static" and not self.coefficient > 0:
            raise ValueError("static penalty coefficient must be > 0")

    @classmethod
    def parse(cls, text: str) -> "PenaltyPolicy":
        """Parse ``static:<coef>``, ``static`` or ``death``."""
        text = text.strip().lower()
        if text == "death":
            return cls("death", 1.0)
        if text == "static":
            return cls()
        if text.startswith("static:"):
            return cls("static", float(text.split(":", 1)[1]))
        raise ValueError(f"bad penalty spec {text!r}; expected static:<coef> or death")

    def __str__(self):
        return "death" if self.mode == "death" else f"static:{self.coefficient:g}"


def cost(x) -> np.ndarray:
    """Raw fabrication cost for one design or a (n, 4) batch."""
    X = np.atleast_2d(np.asarray(x, dtype=float))
    x1, x2, x3, x4 = X[:, 0], X[:, 1], X[:, 2], X[:, 3]
    out = 0.6224 * x1 * x3 * x4 + 1.7781 * x2 * x3**2 + 3.1661 * x1**2 * x4 + 19.84 * x1**2 * x3
    return out if np.ndim(x) == 2 else out[0]


def constraint_values(X, form: str = "corrected") -> np.ndarray:
    """Signed constraint values, shape (n, 4); ``g <= 0`` means satisfied."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if X.shape[1] != 4:
        raise DimensionError(f"pressure vessel designs have 4 coordinates, got {X.shape[1]}")
    x1, x2, x3, x4 = X[:, 0], X[:, 1], X[:, 2], X[:, 3]
    g3 = -math.pi * x3**2 * x4 - (4.0 / 3.0) * math.pi * x3**3 + 1_296_000.0
    if form == "corrected":
        g1 = -x1 + 0.0193 * x3
        g2 = -x2 + 0.00954 * x3
        g4 = x4 - 240.0
    elif form == "literal":
        # g2 only involves x3 here, and g4 can never be satisfied on the box
        g1 = -x1 + 0.0193 * x3
        g2 = -x3 + 0.00954 * x3
        g4 = x4 + 240.0
    else:
        raise ValueError(f"constraint form must be one of {CONSTRAINT_FORMS}, got {form!r}")
    return np.stack([g1, g2, g3, g4], axis=1)


def constraints(x, form: str = "corrected") -> ConstraintReport:
    x = np.asarray(x, dtype=float)
    if x.shape != (4,):
        raise DimensionError(f"expected a 4-vector, got shape {x.shape}")
    g = constraint_values(x, form)[0]
    violation = float(np.sum(np.maximum(g, 0.0)))
    return ConstraintReport(g=tuple(float(v) for v in g), feasible=violation == 0.0, violation=violation)


def penalized(X, policy: PenaltyPolicy, form: str = "corrected") -> np.ndarray:
    X = np.atleast_2d(np.asarray(X, dtype=float))
    raw = cost(X)
    violation = np.sum(np.maximum(constraint_values(X, form), 0.0), axis=1)
    if policy.mode == "static":
        return raw + policy.coefficient * violation
    return np.where(violation > 0.0, DEATH_SENTINEL, raw)


def pressure_vessel(policy: PenaltyPolicy = PenaltyPolicy(), form: str = "corrected") -> Problem:
    if form not in CONSTRAINT_FORMS:
        raise ValueError(f"constraint form must be one of {CONSTRAINT_FORMS}, got {form!r}")

    def objective(X, noise=None):
        return penalized(X, policy, form)

    return Problem(name="vessel", space=VESSEL_SPACE, kind="constrained", func=objective, known_best=None)
