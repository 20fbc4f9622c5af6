"""WOA, GWO and the WOAGWO hybrid.

All three use synchronous updates: every move in an iteration is computed
from the population and leaders as they stood when the iteration began.
Each iteration draws a fixed number of uniforms per agent regardless of
which branch an agent takes, so a run is replayable from its seed alone.
"""
from __future__ import annotations

from dataclasses import replace

import numpy as np

from ..prng import RandomStream
from ..problems.space import Problem, clamp
from .kernels import MOVE, STAY, decay_a, gwo_moves, woa_moves, woagwo_agent
from .params import OptimizerParams, normalize_algorithm
from .swarm import RunTrace, SwarmState, update_leaders

# split index of the noise stream used by noisy objectives
NOISE_STREAM_INDEX = 0x7F7


def init_state(problem: Problem, params: OptimizerParams, stream: RandomStream) -> SwarmState:
    """Uniform random population inside the box, evaluated, with leaders seeded."""
    lo, hi = problem.space.lower, problem.space.upper
    noise = stream.split(NOISE_STREAM_INDEX) if problem.noisy else None
    X = lo + (hi - lo) * stream.random((params.pop_size, problem.dim))
    X = clamp(problem.space, X)
    fit = problem.evaluate_batch(X, noise)
    lp, lf = update_leaders(None, None, X, fit, params.leaders)
    return SwarmState(
        positions=X, fitness=fit, leader_pos=lp, leader_fit=lf, stream=stream, noise=noise, evals=len(X)
    )


def _hunt_draws(stream, n, dim, params):
    g = dim if params.granularity == "per_dimension" else 1
    return stream.random((n, 6, g))


def step_woa(state: SwarmState, problem: Problem, params: OptimizerParams) -> SwarmState:
    s = state.copy()
    n = len(s.positions)
    a = decay_a(s.iter, params.max_iter)
    U = s.stream.random((n, 5))
    X = woa_moves(s.positions, s.leader_pos[0], U, a, params.spiral_b, params.a_sign)
    X = clamp(problem.space, X)
    fit = problem.evaluate_batch(X, s.noise)
    s.positions, s.fitness = X, fit
    s.leader_pos, s.leader_fit = update_leaders(s.leader_pos, s.leader_fit, X, fit, params.leaders)
    s.iter += 1
    s.evals += n
    return s


def step_gwo(state: SwarmState, problem: Problem, params: OptimizerParams) -> SwarmState:
    s = state.copy()
    n, d = s.positions.shape
    a = decay_a(s.iter, params.max_iter)
    H = _hunt_draws(s.stream, n, d, params)
    X = gwo_moves(s.positions, s.leader_pos, H, a, params.a_sign)
    X = clamp(problem.space, X)
    fit = problem.evaluate_batch(X, s.noise)
    s.positions, s.fitness = X, fit
    s.leader_pos, s.leader_fit = update_leaders(s.leader_pos, s.leader_fit, X, fit, params.leaders)
    s.iter += 1
    s.evals += n
    return s


def step_woagwo(state: SwarmState, problem: Problem, params: OptimizerParams) -> SwarmState:
    """One WOAGWO iteration.

    Agents are visited in index order. Moves read the population as it was
    at the start of the iteration, but an evaluated greedy candidate that
    beats a leader promotes it at once (``leader_update="immediate"``), so
    later agents encircle and hunt around the improved leaders.
    """
    s = state.copy()
    n, d = s.positions.shape
    a = decay_a(s.iter, params.max_iter)
    U = s.stream.random((n, 5))
    H = _hunt_draws(s.stream, n, d, params)
    literal_gate = params.hunt_condition == "literal"
    spiral_fallback = params.exploitation_fallback == "spiral"
    immediate = params.leader_update == "immediate"
    own_reference = params.greedy_reference == "own_previous"

    X0 = s.positions
    X = X0.copy()
    lp, lf = s.leader_pos, s.leader_fit
    end_pos, end_fit = [], []
    n_greedy = 0
    for i in range(n):
        cand, kind = woagwo_agent(
            X0, i, lp, U[i], H[i], a, params.spiral_b, params.a_sign, literal_gate, spiral_fallback
        )
        if kind == STAY:
            continue
        cand = clamp(problem.space, cand)
        if kind == MOVE:
            X[i] = cand
            continue
        fc = problem.evaluate_batch(cand[None, :], s.noise)
        n_greedy += 1
        reference = s.fitness[i] if own_reference else lf[0]
        if fc[0] < reference:
            X[i] = cand
        if immediate:
            if fc[0] < lf[-1]:
                lp, lf = update_leaders(lp, lf, cand[None, :], fc, params.leaders)
        else:
            end_pos.append(cand)
            end_fit.append(fc[0])

    fit = problem.evaluate_batch(X, s.noise)
    if end_pos:
        X_seen = np.concatenate([np.asarray(end_pos), X])
        f_seen = np.concatenate([np.asarray(end_fit), fit])
    else:
        X_seen, f_seen = X, fit
    s.positions, s.fitness = X, fit
    s.leader_pos, s.leader_fit = update_leaders(lp, lf, X_seen, f_seen, params.leaders)
    s.iter += 1
    s.evals += n + n_greedy
    s.greedy_evals += n_greedy
    return s


STEPS = {"WOA": step_woa, "GWO": step_gwo, "WOAGWO": step_woagwo}


def run(algorithm, problem: Problem, params: OptimizerParams, stream: RandomStream) -> RunTrace:
    """Initialize, iterate ``params.max_iter`` times, and return the trace."""
    algorithm = normalize_algorithm(algorithm)
    if params.algorithm != algorithm:
        params = replace(params, algorithm=algorithm)
    step = STEPS[algorithm]
    seed = stream.seed
    state = init_state(problem, params, stream.copy())
    curve = np.empty(params.max_iter)
    for t in range(params.max_iter):
        state = step(state, problem, params)
        curve[t] = state.leader_fit[0]
    return RunTrace(
        best_curve=curve,
        best_position=state.leader_pos[0].copy(),
        best_fitness=float(state.leader_fit[0]),
        evals=state.evals,
        seed=seed,
        greedy_evals=state.greedy_evals,
    )
