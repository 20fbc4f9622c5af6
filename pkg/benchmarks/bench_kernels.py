"""Compare the numba and pure-numpy backends.

The backend is chosen once at import from ``WOAGWO_DISABLE_JIT``, so each
backend is timed in its own subprocess. Usage::

    python benchmarks/bench_kernels.py [--repeat 5] [--iters 500]
"""
import argparse
import json
import os
import subprocess
import sys
import time


def _best_of(fn, repeat):
    fn()  # warm-up (triggers compilation on the numba path)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def measure(repeat: int, iters: int) -> dict:
    import numpy as np

    from woagwo._jit import backend, pick
    from woagwo.optimizers import OptimizerParams, kernels, run
    from woagwo.prng import new_stream
    from woagwo.problems import classic23

    rng = np.random.default_rng(0)
    X = rng.uniform(-100, 100, (30, 30))
    best = rng.uniform(-100, 100, 30)
    U = rng.random((30, 5))
    leaders = rng.uniform(-100, 100, (3, 30))
    H = rng.random((30, 6, 30))
    woa = pick(kernels._woa_moves_jit, kernels._woa_moves_numpy)
    gwo = pick(kernels._gwo_moves_jit, kernels._gwo_moves_numpy)

    out = {"backend": backend()}
    out["woa_moves_x1000"] = _best_of(lambda: [woa(X, best, U, 1.0, 1.0, -1.0) for _ in range(1000)], repeat)
    out["gwo_moves_x1000"] = _best_of(lambda: [gwo(X, leaders, H, 1.0, -1.0) for _ in range(1000)], repeat)
    for algo in ("WOA", "GWO", "WOAGWO"):
        params = OptimizerParams(algorithm=algo, max_iter=iters)
        out[f"{algo}_f1_run"] = _best_of(lambda: run(algo, classic23(1, 30), params, new_stream(1)), repeat)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--iters", type=int, default=500)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.child:
        print(json.dumps(measure(args.repeat, args.iters)))
        return
    rows = {}
    for flag in ("0", "1"):
        env = dict(os.environ, WOAGWO_DISABLE_JIT=flag)
        cmd = [sys.executable, __file__, "--child", "--repeat", str(args.repeat), "--iters", str(args.iters)]
        res = json.loads(subprocess.run(cmd, env=env, check=True, capture_output=True, text=True).stdout)
        rows[res.pop("backend")] = res
    names = list(next(iter(rows.values())))
    backends = list(rows)
    print(f"{'case':<18}" + "".join(f"{b + ' [s]':>14}" for b in backends) + f"{'speedup':>10}")
    for name in names:
        cells = "".join(f"{rows[b][name]:>14.4f}" for b in backends)
        speed = rows["numpy"][name] / rows["numba"][name] if {"numba", "numpy"} <= set(rows) else float("nan")
        print(f"{name:<18}{cells}{speed:>9.2f}x")


if __name__ == "__main__":
    main()
