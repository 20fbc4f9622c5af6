"""Command-line entry point: ``woagwo <subcommand> [flags]``.

Settings come from the defaults, then an optional ``--config`` JSON file,
then the individual flags, each overriding the previous layer.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from ..problems import catalog_csv_text
from .config import ExperimentConfig
from .experiment import run_experiment
from .reports import (
    boxdata_csv,
    raw_runs_csv,
    read_raw_runs,
    summary_csv,
    summary_markdown,
    vessel_csv,
    vessel_markdown,
    wilcoxon_csv,
)

GREEDY_REF = {"own": "own_previous", "global": "global_best"}


def _int_list(text: str):
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be a 64-bit unsigned integer, got {text}")
    return value


def _add_experiment_flags(p: argparse.ArgumentParser):
    p.add_argument("--config", help="JSON experiment config; flags override its entries")
    p.add_argument("--algo", action="append", type=str.upper, choices=["WOA", "GWO", "WOAGWO"],
                   help="algorithm to run (repeatable; default all three)")
    p.add_argument("--suite", choices=["classic23", "vessel"])
    p.add_argument("--functions", type=_int_list, help="classic function ids, e.g. 1,9,16")
    p.add_argument("--dim", type=int, help="dimension of the scalable functions f1-f13")
    p.add_argument("--pop", type=int, dest="pop_size")
    p.add_argument("--iters", type=int, dest="max_iter")
    p.add_argument("--runs", type=int)
    p.add_argument("--seed", type=_u64, dest="master_seed")
    p.add_argument("--hunt-condition", choices=["conjunctive", "literal"])
    p.add_argument("--fallback", choices=["stay", "spiral"], dest="exploitation_fallback")
    p.add_argument("--greedy-ref", choices=sorted(GREEDY_REF))
    p.add_argument("--granularity", choices=["per_dimension", "per_agent"], dest="gwo_coeff_granularity")
    p.add_argument("--a-form", choices=["range", "literal"])
    p.add_argument("--leader-update", choices=["immediate", "end_of_iteration"])
    p.add_argument("--leader-rule", choices=["reference", "best3"])
    p.add_argument("--penalty", help="static:<coef> or death (vessel only)")
    p.add_argument("--constraints", choices=["corrected", "literal"])
    p.add_argument("--alpha", type=float, help="significance level for the rank-sum test")
    p.add_argument("--out", help="output directory")
    p.add_argument("--workers", type=int, default=1, help="worker processes (results do not depend on it)")
    p.add_argument("--raw", help="reuse a raw_runs.csv instead of running the experiment")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="woagwo", description="WOA, GWO and WOAGWO benchmark experiments")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (
        ("run", "run an experiment and write every report"),
        ("compare", "avg/std table per function and algorithm (summary.csv, summary.md)"),
        ("wilcoxon", "pairwise rank-sum p-values (wilcoxon.csv)"),
        ("boxdata", "five-number summaries for box plots (boxdata.csv)"),
        ("vessel", "pressure-vessel comparison (vessel.csv, vessel.md)"),
    ):
        _add_experiment_flags(sub.add_parser(name, help=text, description=text))
    sub.add_parser("list-functions", help="print the benchmark catalog as CSV")
    return parser


def config_from_args(args) -> ExperimentConfig:
    base = ExperimentConfig.load(args.config) if args.config else ExperimentConfig()
    overrides = {
        "algorithms": tuple(args.algo) if args.algo else None,
        "suite": "vessel" if args.command == "vessel" else args.suite,
        "functions": args.functions,
        "greedy_reference": GREEDY_REF.get(args.greedy_ref) if args.greedy_ref else None,
    }
    for key in (
        "dim", "pop_size", "max_iter", "runs", "master_seed", "hunt_condition", "exploitation_fallback",
        "gwo_coeff_granularity", "a_form", "leader_update", "leader_rule", "penalty", "constraints", "alpha", "out",
    ):
        overrides[key] = getattr(args, key)
    merged = base.to_dict()
    merged.update({k: v for k, v in overrides.items() if v is not None})
    if merged["suite"] == "vessel" and args.functions is None:
        # a function list inherited from the config file does not apply here
        merged["functions"] = None
    return ExperimentConfig.from_dict(merged)


def _write(out_dir: str, name: str, text: str):
    with open(os.path.join(out_dir, name), "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _report(args, config):
    if args.raw:
        with open(args.raw, encoding="utf-8") as fh:
            return read_raw_runs(fh.read(), config.alpha)
    if args.workers < 1:
        raise ValueError(f"--workers must be >= 1, got {args.workers}")
    return run_experiment(config, workers=args.workers)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "list-functions":
        sys.stdout.write(catalog_csv_text())
        return 0
    try:
        config = config_from_args(args)
        report = _report(args, config)
        os.makedirs(config.out, exist_ok=True)
        if not args.raw:
            _write(config.out, "config.json", config.to_json())
            _write(config.out, "raw_runs.csv", raw_runs_csv(report))
        cmd = args.command
        if cmd in ("run", "compare"):
            _write(config.out, "summary.csv", summary_csv(report))
            _write(config.out, "summary.md", summary_markdown(report))
        if cmd == "wilcoxon" or (cmd == "run" and len(report.algorithms) > 1):
            _write(config.out, "wilcoxon.csv", wilcoxon_csv(report))
        if cmd in ("run", "boxdata"):
            _write(config.out, "boxdata.csv", boxdata_csv(report))
        if cmd == "vessel" or (cmd == "run" and "vessel" in report.function_ids):
            _write(config.out, "vessel.csv", vessel_csv(report))
            _write(config.out, "vessel.md", vessel_markdown(report))
        shown = {
            "run": summary_markdown,
            "compare": summary_markdown,
            "wilcoxon": wilcoxon_csv,
            "boxdata": boxdata_csv,
            "vessel": vessel_markdown,
        }[cmd]
        sys.stdout.write(shown(report))
    except (ValueError, KeyError, OSError, RuntimeError, json.JSONDecodeError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"woagwo {args.command}: error: {msg}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
