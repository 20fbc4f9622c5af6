"""Descriptive statistics and the two-sample Wilcoxon rank-sum test.

Quantiles use linear interpolation between closest ranks (the R-7 rule,
numpy's default ``method="linear"``). The rank-sum test reports the
Mann-Whitney U of the first sample, a continuity-corrected z with tie
correction, and a two-sided p. Small tie-free samples get an exact p from
the full null distribution of U.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# exact enumeration is used when the smaller sample has at most this many values
EXACT_MAX = 8
RANKSUM_METHODS = ("auto", "exact", "normal")


class EmptySampleError(ValueError):
    pass


@dataclass(frozen=True)
class SampleStats:
    n: int
    mean: float
    std: float
    min: float
    q1: float
    median: float
    q3: float
    max: float


@dataclass(frozen=True)
class WilcoxonOutcome:
    u_statistic: float
    z: float
    p_two_sided: float
    significant: bool
    exact: bool = False


def _sample(values, label="sample") -> np.ndarray:
    x = np.asarray(values, dtype=float).ravel()
    if x.size == 0:
        raise EmptySampleError(f"{label} is empty")
    if np.isnan(x).any():
        raise ValueError(f"{label} contains NaN")
    return x


def describe(samples) -> SampleStats:
    # sorting first makes every field independent of input order, bit for bit
    x = np.sort(_sample(samples))
    if np.all(x == x[0]):
        v = float(x[0])
        return SampleStats(x.size, v, 0.0, v, v, v, v, v)
    q = np.quantile(x, [0.0, 0.25, 0.5, 0.75, 1.0], method="linear")
    # interpolation rounding must not break min <= q1 <= median <= q3 <= max
    q = np.maximum.accumulate(q)
    mean = float(np.mean(x))
    # scaled so tiny spreads do not underflow to 0 and huge ones do not overflow
    dev = x - mean
    scale = float(np.max(np.abs(dev)))
    std = scale * math.sqrt(float(np.sum((dev / scale) ** 2)) / (x.size - 1))
    return SampleStats(
        n=int(x.size),
        mean=mean,
        std=std,
        min=float(q[0]),
        q1=float(q[1]),
        median=float(q[2]),
        q3=float(q[3]),
        max=float(q[4]),
    )


def midranks(values) -> np.ndarray:
    """1-based ranks with ties sharing the average of their positions."""
    x = np.asarray(values, dtype=float)
    order = np.argsort(x, kind="stable")
    ranks = np.empty(x.size)
    sx = x[order]
    i = 0
    while i < x.size:
        j = i
        while j + 1 < x.size and sx[j + 1] == sx[i]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


@lru_cache(maxsize=256)
def u_null_counts(n: int, m: int) -> tuple:
    """Number of rank assignments giving U = 0, 1, ..., n*m under the null.

    These are the coefficients of the Gaussian binomial [n+m choose n]_q,
    built as a product of (1 - q^(m+i)) / (1 - q^i) over i = 1..n with exact
    integer arithmetic.
    """
    if n > m:
        n, m = m, n
    size = n * m + 1
    poly = [0] * size
    poly[0] = 1
    for i in range(1, n + 1):
        shift = m + i
        for k in range(size - 1, shift - 1, -1):
            poly[k] -= poly[k - shift]
        for k in range(i, size):
            poly[k] += poly[k - i]
    return tuple(poly)


def _exact_p(u: int, n: int, m: int) -> float:
    counts = u_null_counts(n, m)
    total = math.comb(n + m, n)
    lo = sum(counts[: u + 1])
    hi = sum(counts[u:])
    return min(1.0, 2 * min(lo, hi) / total)


def ranksum(a, b, alpha: float = 0.05, method: str = "auto") -> WilcoxonOutcome:
    """Two-sided Wilcoxon rank-sum (Mann-Whitney) test of ``a`` against ``b``.

    ``method="auto"`` uses the exact null distribution when the smaller
    sample has at most ``EXACT_MAX`` values and there are no ties, and the
    normal approximation otherwise. ``z`` is always the normal-approximation
    statistic; it is 0 when every pooled value is equal.
    """
    if method not in RANKSUM_METHODS:
        raise ValueError(f"method must be one of {RANKSUM_METHODS}, got {method!r}")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    x = _sample(a, "first sample")
    y = _sample(b, "second sample")
    n, m = x.size, y.size
    pooled = np.concatenate([x, y])
    ranks = midranks(pooled)
    u = float(ranks[:n].sum() - n * (n + 1) / 2.0)

    N = n + m
    _, tie_sizes = np.unique(pooled, return_counts=True)
    has_ties = bool(np.any(tie_sizes > 1))
    tie_term = float(np.sum(tie_sizes.astype(float) ** 3 - tie_sizes))
    var = n * m / 12.0 * ((N + 1) - tie_term / (N * (N - 1)))
    mu = n * m / 2.0
    if var > 0:
        dev = u - mu
        z = math.copysign(max(abs(dev) - 0.5, 0.0), dev) / math.sqrt(var)
        p_normal = math.erfc(abs(z) / math.sqrt(2.0))
    else:
        z, p_normal = 0.0, 1.0

    use_exact = method == "exact" or (method == "auto" and min(n, m) <= EXACT_MAX and not has_ties)
    if use_exact:
        if has_ties:
            raise ValueError("exact rank-sum p requires tie-free samples")
        p = _exact_p(int(round(u)), n, m)
    else:
        p = min(1.0, p_normal)
    return WilcoxonOutcome(u_statistic=u, z=z, p_two_sided=p, significant=p < alpha, exact=use_exact)
