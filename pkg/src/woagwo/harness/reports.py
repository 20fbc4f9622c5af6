"""CSV and Markdown emitters.

Floats are written as ``d.dddddde<exp>``: six digits after the point and
an exponent with no sign padding, e.g. ``0.000000e0`` or ``-1.256949e4``.
The raw-run file instead stores ``repr`` values so that every aggregate
can be recomputed from it bit for bit.
"""
from __future__ import annotations

import csv
import io
import math

import numpy as np

from ..problems import constraints, cost
from ..stats import describe
from .experiment import ExperimentReport, RunRecord, aggregate

P_FLOOR = 1e-15

RAW_COLUMNS = [
    "algorithm", "function_id", "run", "stream_index", "best_fitness", "evals", "greedy_evals", "best_position"
]
SUMMARY_COLUMNS = ["function_id", "algorithm", "mean", "std", "min", "q1", "median", "q3", "max"]
WILCOXON_COLUMNS = ["function_id", "algo_a", "algo_b", "u", "z", "p", "significant"]
BOX_COLUMNS = ["function_id", "algorithm", "min", "q1", "median", "q3", "max"]
VESSEL_COLUMNS = [
    "algorithm", "runs", "mean", "std", "feasible_rate", "best_feasible",
    "x1", "x2", "x3", "x4", "raw_cost", "g1", "g2", "g3", "g4",
]


class MissingPairError(ValueError):
    pass


def fmt(value: float) -> str:
    """Locale-independent scientific notation, e.g. ``1.234560e-5``."""
    v = float(value)
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    mantissa, exp = f"{v:.6e}".split("e")
    return f"{mantissa}e{int(exp)}"


def fmt_p(p: float) -> str:
    return "<1e-15" if p < P_FLOOR else fmt(p)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------- raw records


def raw_runs_csv(report: ExperimentReport) -> str:
    rows = [
        [
            r.algorithm, r.function_id, r.run, r.stream_index, repr(r.best_fitness), r.evals, r.greedy_evals,
            ";".join(repr(v) for v in r.best_position),
        ]
        for r in report.records
    ]
    return _csv_text(RAW_COLUMNS, rows)


def read_raw_runs(text: str, alpha: float = 0.05) -> ExperimentReport:
    """Rebuild a report from ``raw_runs.csv`` text; order of first appearance is kept."""
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != RAW_COLUMNS:
        raise ValueError(f"not a raw_runs.csv file: expected columns {RAW_COLUMNS}, got {reader.fieldnames}")
    records, algos, fids = [], [], []
    for row in reader:
        rec = RunRecord(
            algorithm=row["algorithm"],
            function_id=row["function_id"],
            run=int(row["run"]),
            stream_index=int(row["stream_index"]),
            best_fitness=float(row["best_fitness"]),
            evals=int(row["evals"]),
            greedy_evals=int(row["greedy_evals"]),
            best_position=tuple(float(v) for v in row["best_position"].split(";")) if row["best_position"] else (),
        )
        records.append(rec)
        if rec.algorithm not in algos:
            algos.append(rec.algorithm)
        if rec.function_id not in fids:
            fids.append(rec.function_id)
    if not records:
        raise ValueError("raw_runs.csv holds no records")
    return aggregate(tuple(algos), tuple(fids), records, alpha)


# ---------------------------------------------------------------- mean and std comparison


def summary_csv(report: ExperimentReport) -> str:
    rows = []
    for fid in report.function_ids:
        for algo in report.algorithms:
            s = report.stats.get((algo, fid))
            if s is None:
                continue
            rows.append([fid, algo] + [fmt(v) for v in (s.mean, s.std, s.min, s.q1, s.median, s.q3, s.max)])
    return _csv_text(SUMMARY_COLUMNS, rows)


def summary_markdown(report: ExperimentReport) -> str:
    """One row per function with an (avg, std) column pair per algorithm."""
    head = ["Function"]
    for algo in report.algorithms:
        head += [f"{algo} avg", f"{algo} std"]
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    for fid in report.function_ids:
        cells = [fid]
        for algo in report.algorithms:
            s = report.stats.get((algo, fid))
            cells += [fmt(s.mean), fmt(s.std)] if s else ["", ""]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- pairwise rank-sum tests


def wilcoxon_csv(report: ExperimentReport) -> str:
    if len(report.algorithms) < 2:
        raise MissingPairError("a rank-sum table needs at least two algorithms")
    rows = []
    for fid in report.function_ids:
        for a, b in report.pairs():
            t = report.tests.get((fid, a, b))
            if t is None:
                raise MissingPairError(f"no samples to compare {a} and {b} on {fid}")
            rows.append(
                [fid, a, b, fmt(t.u_statistic), fmt(t.z), fmt_p(t.p_two_sided), "true" if t.significant else "false"]
            )
    return _csv_text(WILCOXON_COLUMNS, rows)


# ---------------------------------------------------------------- box-plot data


def boxdata_csv(report: ExperimentReport) -> str:
    rows = []
    for fid in report.function_ids:
        for algo in report.algorithms:
            s = report.stats.get((algo, fid))
            if s is None:
                continue
            rows.append([fid, algo] + [fmt(v) for v in (s.min, s.q1, s.median, s.q3, s.max)])
    return _csv_text(BOX_COLUMNS, rows)


# ---------------------------------------------------------------- pressure vessel


def vessel_rows(report: ExperimentReport) -> list:
    """Per algorithm: penalized-cost avg/std, feasibility rate and best feasible design.

    Feasibility is always judged with the corrected constraint set.
    """
    out = []
    for algo in report.algorithms:
        recs = [r for r in report.records if r.algorithm == algo and r.function_id == "vessel"]
        if not recs:
            continue
        s = describe([r.best_fitness for r in recs])
        feasible = []
        for r in recs:
            x = np.array(r.best_position)
            rep = constraints(x)
            if rep.feasible:
                feasible.append((float(cost(x)), r.run, x, rep))
        row = {
            "algorithm": algo,
            "runs": len(recs),
            "mean": s.mean,
            "std": s.std,
            "feasible_rate": len(feasible) / len(recs),
            "best_feasible": bool(feasible),
            "x": None,
            "raw_cost": None,
            "g": None,
        }
        if feasible:
            c, _, x, rep = min(feasible, key=lambda t: (t[0], t[1]))
            row.update(x=tuple(float(v) for v in x), raw_cost=c, g=rep.g)
        out.append(row)
    return out


def vessel_csv(report: ExperimentReport) -> str:
    rows = []
    for v in vessel_rows(report):
        design = [fmt(t) for t in v["x"]] + [fmt(v["raw_cost"])] + [fmt(t) for t in v["g"]] if v["x"] else [""] * 9
        rows.append(
            [v["algorithm"], v["runs"], fmt(v["mean"]), fmt(v["std"]), fmt(v["feasible_rate"]),
             "true" if v["best_feasible"] else "false"] + design
        )
    return _csv_text(VESSEL_COLUMNS, rows)


def vessel_markdown(report: ExperimentReport) -> str:
    rows = vessel_rows(report)
    head = ["", *[v["algorithm"] for v in rows]]
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]

    def line(label, cells):
        lines.append("| " + " | ".join([label, *cells]) + " |")

    for i, name in enumerate(("Ts (x1)", "Th (x2)", "R (x3)", "L (x4)")):
        line(name, [fmt(v["x"][i]) if v["x"] else "-" for v in rows])
    line("best feasible cost", [fmt(v["raw_cost"]) if v["x"] else "-" for v in rows])
    line("avg (penalized)", [fmt(v["mean"]) for v in rows])
    line("std (penalized)", [fmt(v["std"]) for v in rows])
    line("feasible runs", [fmt(v["feasible_rate"]) for v in rows])
    return "\n".join(lines) + "\n"
