"""Position-update kernels.

The small functions at the top (``encircle``, ``spiral``, ...) are the
textbook update rules on single vectors; they broadcast, so they also work
on whole populations. The kernels below apply those rules from pre-drawn
uniforms, to a whole population (``woa_moves``, ``gwo_moves``) or to one
agent (``woagwo_agent``), and come in a numba loop flavour and a numpy
flavour selected by :mod:`woagwo._jit`.

Per-agent uniform layout (columns of ``U``), shared by WOA and WOAGWO:
    0: r for A     1: r for C     2: p (branch)     3: k, mapped to [-1, 1)
    4: random-agent index, mapped to [0, n)
Hunt draws ``H`` have shape (n, 6, g): rows 0-2 feed A1..A3, rows 3-5 feed
C1..C3, and g is 1 (one scalar per agent) or dim (one per coordinate).
"""
from __future__ import annotations

import math

import numpy as np

from .._jit import njit, pick

TWO_PI = 2.0 * math.pi


class KernelInputError(ValueError):
    pass


def decay_a(iteration: int, max_iter: int) -> float:
    """Linear ramp from 2 at iteration 0 to 0 at ``max_iter``."""
    if max_iter < 1:
        raise KernelInputError(f"max_iter must be positive, got {max_iter}")
    if not 0 <= iteration <= max_iter:
        raise KernelInputError(f"iteration {iteration} outside [0, {max_iter}]")
    return 2.0 * (1.0 - iteration / max_iter)


def coefficients(a, stream=None, *, r=None, r_c=None, sign=-1.0):
    """A = 2*a*r + sign*a and C = 2*r'.

    Uniforms come from ``stream`` (A's draw first) unless given explicitly.
    ``sign=-1`` keeps A inside [-a, a]; ``sign=+1`` is the plus variant.
    """
    if r is None:
        r = stream.random()
    if r_c is None:
        r_c = stream.random()
    return 2.0 * a * r + sign * a, 2.0 * r_c


def _same_length(*vecs):
    n = np.shape(vecs[0])[-1]
    for v in vecs[1:]:
        if np.shape(v)[-1] != n:
            raise KernelInputError(f"length mismatch: {np.shape(vecs[0])} vs {np.shape(v)}")


def encircle(x, x_star, A, C):
    _same_length(x, x_star)
    D = np.abs(C * x_star - x)
    return x_star - A * D


def spiral(x, x_star, b, k):
    if not -1.0 <= k <= 1.0:
        raise KernelInputError(f"spiral parameter k={k} outside [-1, 1]")
    _same_length(x, x_star)
    D = np.abs(x_star - x)
    return math.exp(b * k) * math.cos(TWO_PI * k) * D + x_star


def random_search(x, x_rand, A, C):
    _same_length(x, x_rand)
    D = np.abs(C * x_rand - x)
    return x_rand - A * D


def gwo_hunt(x, alpha, beta, delta, A1, A2, A3, C1, C2, C3):
    _same_length(x, alpha, beta, delta)
    X1 = alpha - A1 * np.abs(C1 * alpha - x)
    X2 = beta - A2 * np.abs(C2 * beta - x)
    X3 = delta - A3 * np.abs(C3 * delta - x)
    return (X1 + X2 + X3) / 3.0


# ---------------------------------------------------------------- population kernels


@njit
def _woa_moves_jit(X, best, U, a, b, sign):
    n, d = X.shape
    out = np.empty_like(X)
    for i in range(n):
        A = 2.0 * a * U[i, 0] + sign * a
        C = 2.0 * U[i, 1]
        if U[i, 2] < 0.5:
            if abs(A) < 1.0:
                for j in range(d):
                    out[i, j] = best[j] - A * abs(C * best[j] - X[i, j])
            else:
                r = min(int(U[i, 4] * n), n - 1)
                for j in range(d):
                    out[i, j] = X[r, j] - A * abs(C * X[r, j] - X[i, j])
        else:
            k = 2.0 * U[i, 3] - 1.0
            f = math.exp(b * k) * math.cos(TWO_PI * k)
            for j in range(d):
                out[i, j] = f * abs(best[j] - X[i, j]) + best[j]
    return out


def _woa_moves_numpy(X, best, U, a, b, sign):
    n = X.shape[0]
    A = (2.0 * a * U[:, 0] + sign * a)[:, None]
    C = (2.0 * U[:, 1])[:, None]
    p = U[:, 2]
    k = 2.0 * U[:, 3] - 1.0
    r = np.minimum((U[:, 4] * n).astype(np.int64), n - 1)
    # libm exp/cos, as in the compiled loop; numpy's SIMD versions can differ by an ulp
    f = np.array([math.exp(b * kk) * math.cos(TWO_PI * kk) for kk in k.tolist()])[:, None]

    enc = best - A * np.abs(C * best - X)
    Xr = X[r]
    rnd = Xr - A * np.abs(C * Xr - X)
    spi = f * np.abs(best - X) + best
    explore = (p < 0.5)[:, None]
    small = (np.abs(A) < 1.0)
    return np.where(explore, np.where(small, enc, rnd), spi)


woa_moves = pick(_woa_moves_jit, _woa_moves_numpy)


@njit
def _hunt_row_jit(x, alpha, beta, delta, H, a, sign, out):
    d = x.shape[0]
    g = H.shape[1]
    for j in range(d):
        c = j if g > 1 else 0
        A1 = 2.0 * a * H[0, c] + sign * a
        A2 = 2.0 * a * H[1, c] + sign * a
        A3 = 2.0 * a * H[2, c] + sign * a
        C1 = 2.0 * H[3, c]
        C2 = 2.0 * H[4, c]
        C3 = 2.0 * H[5, c]
        X1 = alpha[j] - A1 * abs(C1 * alpha[j] - x[j])
        X2 = beta[j] - A2 * abs(C2 * beta[j] - x[j])
        X3 = delta[j] - A3 * abs(C3 * delta[j] - x[j])
        out[j] = (X1 + X2 + X3) / 3.0


@njit
def _gwo_moves_jit(X, leaders, H, a, sign):
    n, d = X.shape
    out = np.empty_like(X)
    for i in range(n):
        _hunt_row_jit(X[i], leaders[0], leaders[1], leaders[2], H[i], a, sign, out[i])
    return out


def _gwo_moves_numpy(X, leaders, H, a, sign):
    # H: (n, 6, g) broadcasts against (n, d) coordinates when g is 1 or d
    A = 2.0 * a * H[:, 0:3, :] + sign * a
    C = 2.0 * H[:, 3:6, :]
    L = leaders[None, :, :]
    parts = L - A * np.abs(C * L - X[:, None, :])
    return (parts[:, 0, :] + parts[:, 1, :] + parts[:, 2, :]) / 3.0


gwo_moves = pick(_gwo_moves_jit, _gwo_moves_numpy)

# WOAGWO outcome codes per agent
GREEDY = 0  # candidate must beat the reference fitness to be adopted
MOVE = 1  # unconditional move (hunt, or spiral fallback)
STAY = 2  # hunt gate closed, agent keeps its position


@njit
def _woagwo_agent_jit(X, i, leaders, u, h, a, b, sign, literal_gate, spiral_fallback):
    n, d = X.shape
    g = h.shape[1]
    out = np.empty(d)
    best = leaders[0]
    A = 2.0 * a * u[0] + sign * a
    C = 2.0 * u[1]
    if u[2] < 0.5:
        if abs(A) < 1.0:
            for j in range(d):
                out[j] = best[j] - A * abs(C * best[j] - X[i, j])
        else:
            r = min(int(u[4] * n), n - 1)
            for j in range(d):
                out[j] = X[r, j] - A * abs(C * X[r, j] - X[i, j])
        return out, GREEDY
    gate = True
    if not literal_gate:
        for w in range(3):
            for c in range(g):
                if abs(2.0 * a * h[w, c] + sign * a) >= 1.0:
                    gate = False
    if gate:
        _hunt_row_jit(X[i], leaders[0], leaders[1], leaders[2], h, a, sign, out)
        return out, MOVE
    if spiral_fallback:
        k = 2.0 * u[3] - 1.0
        f = math.exp(b * k) * math.cos(TWO_PI * k)
        for j in range(d):
            out[j] = f * abs(best[j] - X[i, j]) + best[j]
        return out, MOVE
    for j in range(d):
        out[j] = X[i, j]
    return out, STAY


def _woagwo_agent_numpy(X, i, leaders, u, h, a, b, sign, literal_gate, spiral_fallback):
    n = X.shape[0]
    x = X[i]
    best = leaders[0]
    A = 2.0 * a * u[0] + sign * a
    C = 2.0 * u[1]
    if u[2] < 0.5:
        if abs(A) < 1.0:
            return best - A * np.abs(C * best - x), GREEDY
        xr = X[min(int(u[4] * n), n - 1)]
        return xr - A * np.abs(C * xr - x), GREEDY
    As = 2.0 * a * h[0:3] + sign * a
    if literal_gate or np.all(np.abs(As) < 1.0):
        Cs = 2.0 * h[3:6]
        parts = leaders - As * np.abs(Cs * leaders - x)
        return (parts[0] + parts[1] + parts[2]) / 3.0, MOVE
    if spiral_fallback:
        k = 2.0 * u[3] - 1.0
        f = math.exp(b * k) * math.cos(TWO_PI * k)
        return f * np.abs(best - x) + best, MOVE
    return x.copy(), STAY


woagwo_agent = pick(_woagwo_agent_jit, _woagwo_agent_numpy)
