from .config import ExperimentConfig, InvalidConfigError, run_stream, stream_index
from .experiment import ExperimentReport, RunFailedError, RunRecord, aggregate, execute_run, run_experiment
from .reports import (
    MissingPairError,
    boxdata_csv,
    fmt,
    raw_runs_csv,
    read_raw_runs,
    summary_csv,
    summary_markdown,
    vessel_csv,
    vessel_markdown,
    vessel_rows,
    wilcoxon_csv,
)

__all__ = [
    "ExperimentConfig",
    "ExperimentReport",
    "InvalidConfigError",
    "MissingPairError",
    "RunFailedError",
    "RunRecord",
    "aggregate",
    "boxdata_csv",
    "execute_run",
    "fmt",
    "raw_runs_csv",
    "read_raw_runs",
    "run_experiment",
    "run_stream",
    "stream_index",
    "summary_csv",
    "summary_markdown",
    "vessel_csv",
    "vessel_markdown",
    "vessel_rows",
    "wilcoxon_csv",
]
