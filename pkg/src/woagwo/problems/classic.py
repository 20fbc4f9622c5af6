"""The 23 classical test functions used throughout the WOA/GWO literature.

Definitions follow the reference MATLAB sources shipped with WOA and GWO
(``Get_Functions_details.m``); note that f6 there is ``sum(|x + 0.5|^2)``
rather than the floor-based step function. Bounds, dimensions and optima
live in ``functions.csv`` next to this module. Every function takes a
population matrix ``X`` of shape (n, dim) and returns n fitness values.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from importlib import resources
from typing import Optional

import numpy as np

from .space import DimensionError, Problem, SearchSpace


class UnknownFunctionError(KeyError):
    pass


def f1(X, noise=None):
    return np.sum(X**2, axis=1)


def f2(X, noise=None):
    A = np.abs(X)
    return np.sum(A, axis=1) + np.prod(A, axis=1)


def f3(X, noise=None):
    return np.sum(np.cumsum(X, axis=1) ** 2, axis=1)


def f4(X, noise=None):
    return np.max(np.abs(X), axis=1)


def f5(X, noise=None):
    head, tail = X[:, :-1], X[:, 1:]
    return np.sum(100.0 * (tail - head**2) ** 2 + (head - 1.0) ** 2, axis=1)


def f6(X, noise=None):
    return np.sum(np.abs(X + 0.5) ** 2, axis=1)


def f7(X, noise=None):
    i = np.arange(1, X.shape[1] + 1)
    return np.sum(i * X**4, axis=1) + noise.random(X.shape[0])


def f8(X, noise=None):
    return np.sum(-X * np.sin(np.sqrt(np.abs(X))), axis=1)


def f9(X, noise=None):
    return np.sum(X**2 - 10.0 * np.cos(2.0 * np.pi * X), axis=1) + 10.0 * X.shape[1]


def f10(X, noise=None):
    d = X.shape[1]
    return (
        -20.0 * np.exp(-0.2 * np.sqrt(np.sum(X**2, axis=1) / d))
        - np.exp(np.sum(np.cos(2.0 * np.pi * X), axis=1) / d)
        + 20.0
        + math.e
    )


def f11(X, noise=None):
    i = np.sqrt(np.arange(1, X.shape[1] + 1))
    return np.sum(X**2, axis=1) / 4000.0 - np.prod(np.cos(X / i), axis=1) + 1.0


def _ufun(X, a, k, m):
    return np.sum(k * ((X - a) ** m) * (X > a) + k * ((-X - a) ** m) * (X < -a), axis=1)


def f12(X, noise=None):
    d = X.shape[1]
    y = 1.0 + (X + 1.0) / 4.0
    return (np.pi / d) * (
        10.0 * np.sin(np.pi * y[:, 0]) ** 2
        + np.sum((y[:, :-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * y[:, 1:]) ** 2), axis=1)
        + (y[:, -1] - 1.0) ** 2
    ) + _ufun(X, 10.0, 100.0, 4)


def f13(X, noise=None):
    return 0.1 * (
        np.sin(3.0 * np.pi * X[:, 0]) ** 2
        + np.sum((X[:, :-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * X[:, 1:]) ** 2), axis=1)
        + (X[:, -1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * X[:, -1]) ** 2)
    ) + _ufun(X, 5.0, 100.0, 4)


_FOXHOLES = np.array(
    [
        [-32, -16, 0, 16, 32] * 5,
        [v for v in (-32, -16, 0, 16, 32) for _ in range(5)],
    ],
    dtype=float,
)


def f14(X, noise=None):
    # (n, 1, 2) - (25, 2) -> (n, 25, 2)
    diff6 = np.sum((X[:, None, :] - _FOXHOLES.T[None, :, :]) ** 6, axis=2)
    return 1.0 / (1.0 / 500.0 + np.sum(1.0 / (np.arange(1, 26) + diff6), axis=1))


_KOWALIK_A = np.array([0.1957, 0.1947, 0.1735, 0.16, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246])
_KOWALIK_B = 1.0 / np.array([0.25, 0.5, 1, 2, 4, 6, 8, 10, 12, 14, 16])


def f15(X, noise=None):
    b = _KOWALIK_B[None, :]
    x1, x2, x3, x4 = (X[:, [j]] for j in range(4))
    model = x1 * (b**2 + x2 * b) / (b**2 + x3 * b + x4)
    return np.sum((_KOWALIK_A[None, :] - model) ** 2, axis=1)


def f16(X, noise=None):
    x1, x2 = X[:, 0], X[:, 1]
    return 4 * x1**2 - 2.1 * x1**4 + x1**6 / 3 + x1 * x2 - 4 * x2**2 + 4 * x2**4


def f17(X, noise=None):
    x1, x2 = X[:, 0], X[:, 1]
    return (
        (x2 - x1**2 * 5.1 / (4 * np.pi**2) + 5 / np.pi * x1 - 6) ** 2
        + 10 * (1 - 1 / (8 * np.pi)) * np.cos(x1)
        + 10
    )


def f18(X, noise=None):
    x1, x2 = X[:, 0], X[:, 1]
    return (
        1 + (x1 + x2 + 1) ** 2 * (19 - 14 * x1 + 3 * x1**2 - 14 * x2 + 6 * x1 * x2 + 3 * x2**2)
    ) * (30 + (2 * x1 - 3 * x2) ** 2 * (18 - 32 * x1 + 12 * x1**2 + 48 * x2 - 36 * x1 * x2 + 27 * x2**2))


_HART_C = np.array([1.0, 1.2, 3.0, 3.2])
_HART3_A = np.array([[3, 10, 30], [0.1, 10, 35], [3, 10, 30], [0.1, 10, 35]])
_HART3_P = np.array(
    [[0.3689, 0.117, 0.2673], [0.4699, 0.4387, 0.747], [0.1091, 0.8732, 0.5547], [0.03815, 0.5743, 0.8828]]
)
_HART6_A = np.array(
    [[10, 3, 17, 3.5, 1.7, 8], [0.05, 10, 17, 0.1, 8, 14], [3, 3.5, 1.7, 10, 17, 8], [17, 8, 0.05, 10, 0.1, 14]]
)
_HART6_P = np.array(
    [
        [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
        [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
        [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
        [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
    ]
)


def _hartman(X, A, P):
    inner = np.sum(A[None, :, :] * (X[:, None, :] - P[None, :, :]) ** 2, axis=2)
    return -np.sum(_HART_C[None, :] * np.exp(-inner), axis=1)


def f19(X, noise=None):
    return _hartman(X, _HART3_A, _HART3_P)


def f20(X, noise=None):
    return _hartman(X, _HART6_A, _HART6_P)


_SHEKEL_A = np.array(
    [
        [4, 4, 4, 4],
        [1, 1, 1, 1],
        [8, 8, 8, 8],
        [6, 6, 6, 6],
        [3, 7, 3, 7],
        [2, 9, 2, 9],
        [5, 5, 3, 3],
        [8, 1, 8, 1],
        [6, 2, 6, 2],
        [7, 3.6, 7, 3.6],
    ],
    dtype=float,
)
_SHEKEL_C = np.array([0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5])


def _shekel(X, m):
    sq = np.sum((X[:, None, :] - _SHEKEL_A[None, :m, :]) ** 2, axis=2)
    return -np.sum(1.0 / (sq + _SHEKEL_C[None, :m]), axis=1)


def f21(X, noise=None):
    return _shekel(X, 5)


def f22(X, noise=None):
    return _shekel(X, 7)


def f23(X, noise=None):
    return _shekel(X, 10)


FUNCTIONS = {
    1: f1, 2: f2, 3: f3, 4: f4, 5: f5, 6: f6, 7: f7, 8: f8, 9: f9, 10: f10, 11: f11, 12: f12,
    13: f13, 14: f14, 15: f15, 16: f16, 17: f17, 18: f18, 19: f19, 20: f20, 21: f21, 22: f22, 23: f23,
}  # fmt: skip

@dataclass(frozen=True)
class CatalogEntry:
    id: int
    name: str
    dim: Optional[int]  # None: any dimension
    lower: list
    upper: list
    known_best: Optional[str]  # a number, or "<per-dim value>*dim" for f8
    kind: str


def _parse_bound(text):
    return [float(v) for v in text.split()]


def load_catalog() -> dict:
    """Read ``functions.csv`` into ``{id: CatalogEntry}``."""
    out = {}
    with resources.files(__package__).joinpath("functions.csv").open(newline="") as fh:
        for row in csv.DictReader(fh):
            fid = int(row["id"])
            out[fid] = CatalogEntry(
                id=fid,
                name=row["name"],
                dim=None if row["dim"] == "any" else int(row["dim"]),
                lower=_parse_bound(row["lower"]),
                upper=_parse_bound(row["upper"]),
                known_best=None if row["known_best"] == "" else row["known_best"],
                kind=row["kind"],
            )
    return out


CATALOG = load_catalog()


def catalog_csv_text() -> str:
    return resources.files(__package__).joinpath("functions.csv").read_text()


def _known_best(entry: CatalogEntry, dim: int) -> Optional[float]:
    if entry.known_best is None:
        return None
    text = entry.known_best
    if text.endswith("*dim"):
        return float(text[: -len("*dim")]) * dim
    return float(text)


def classic23(fid: int, dim: Optional[int] = None) -> Problem:
    """Problem for function ``fid`` (1..23).

    ``dim`` defaults to 30 for f1-f13 and to the function's own dimension
    for f14-f23, where any other value is rejected.
    """
    try:
        entry = CATALOG[int(fid)]
    except (KeyError, ValueError, TypeError):
        raise UnknownFunctionError(f"no classical function with id {fid!r} (expected 1..23)") from None
    if entry.dim is None:
        dim = 30 if dim is None else int(dim)
        if dim < 1:
            raise DimensionError(f"f{fid}: dim must be >= 1")
        space = SearchSpace.box(entry.lower[0], entry.upper[0], dim)
    else:
        if dim is not None and int(dim) != entry.dim:
            raise DimensionError(f"f{fid} ({entry.name}) is fixed at dim={entry.dim}, got {dim}")
        dim = entry.dim
        lo = entry.lower if len(entry.lower) == dim else entry.lower * dim
        hi = entry.upper if len(entry.upper) == dim else entry.upper * dim
        space = SearchSpace(np.array(lo), np.array(hi))
    return Problem(
        name=f"f{entry.id}",
        space=space,
        kind=entry.kind,
        func=FUNCTIONS[entry.id],
        known_best=_known_best(entry, dim),
        noisy=entry.id == 7,
    )
