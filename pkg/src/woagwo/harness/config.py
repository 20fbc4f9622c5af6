"""Experiment configuration and deterministic per-run stream addressing.

A configuration is stored as a flat JSON object whose keys are the field
names of :class:`ExperimentConfig`. Missing keys take the defaults below
(population 30, 500 iterations, 30 runs).
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, fields, replace
from typing import Optional

from ..optimizers.params import ALGORITHMS, InvalidParamsError, OptimizerParams, normalize_algorithm
from ..prng import MASK64, RandomStream, new_stream
from ..problems import CATALOG, FUNCTIONS, PenaltyPolicy, Problem, classic23, pressure_vessel
from ..problems.vessel import CONSTRAINT_FORMS

SUITES = ("classic23", "vessel")
VESSEL_ID = "vessel"


class InvalidConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ExperimentConfig:
    algorithms: tuple = ALGORITHMS
    suite: str = "classic23"
    functions: Optional[tuple] = None  # classic ids; None means all 23
    dim: int = 30
    runs: int = 30
    pop_size: int = 30
    max_iter: int = 500
    master_seed: int = 20_200_101
    spiral_b: float = 1.0
    hunt_condition: str = "conjunctive"
    exploitation_fallback: str = "stay"
    greedy_reference: str = "own_previous"
    gwo_coeff_granularity: Optional[str] = None
    a_form: str = "range"
    leader_update: str = "immediate"
    leader_rule: Optional[str] = None
    penalty: str = "static:1e6"
    constraints: str = "corrected"
    alpha: float = 0.05
    out: str = "results"

    def __post_init__(self):
        try:
            algos = tuple(normalize_algorithm(a) for a in self.algorithms)
        except InvalidParamsError as exc:
            raise InvalidConfigError(str(exc)) from None
        if not algos:
            raise InvalidConfigError("at least one algorithm is required")
        if len(set(algos)) != len(algos):
            raise InvalidConfigError(f"duplicate algorithm in {list(algos)}")
        object.__setattr__(self, "algorithms", algos)
        if self.suite not in SUITES:
            raise InvalidConfigError(f"suite must be one of {SUITES}, got {self.suite!r}")
        if self.functions is not None:
            if self.suite == "vessel":
                raise InvalidConfigError("a function list only applies to the classic23 suite")
            ids = tuple(int(f) for f in self.functions)
            bad = [f for f in ids if f not in FUNCTIONS]
            if bad or not ids:
                raise InvalidConfigError(f"unknown function ids {bad or 'none given'}; valid ids are 1..23")
            if len(set(ids)) != len(ids):
                raise InvalidConfigError(f"duplicate function id in {list(ids)}")
            object.__setattr__(self, "functions", ids)
        for name in ("dim", "runs", "pop_size", "max_iter"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value or value < 1:
                raise InvalidConfigError(f"{name} must be a positive integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        if not 0 <= int(self.master_seed) <= MASK64:
            raise InvalidConfigError(f"master_seed must be a 64-bit unsigned integer, got {self.master_seed}")
        if self.constraints not in CONSTRAINT_FORMS:
            raise InvalidConfigError(f"constraints must be one of {CONSTRAINT_FORMS}, got {self.constraints!r}")
        if not 0.0 < self.alpha < 1.0:
            raise InvalidConfigError(f"alpha must lie in (0, 1), got {self.alpha}")
        try:
            PenaltyPolicy.parse(self.penalty)
            self.params(algos[0])
        except ValueError as exc:
            raise InvalidConfigError(str(exc)) from None

    # ------------------------------------------------------------------ derived
    def params(self, algorithm: str) -> OptimizerParams:
        return OptimizerParams(
            algorithm=algorithm,
            pop_size=self.pop_size,
            max_iter=self.max_iter,
            spiral_b=self.spiral_b,
            hunt_condition=self.hunt_condition,
            exploitation_fallback=self.exploitation_fallback,
            greedy_reference=self.greedy_reference,
            gwo_coeff_granularity=self.gwo_coeff_granularity,
            a_form=self.a_form,
            leader_update=self.leader_update,
            leader_rule=self.leader_rule,
        )

    def function_ids(self) -> tuple:
        """Report labels in run order: ``f1``, ``f9``, ... or ``vessel``."""
        if self.suite == "vessel":
            return (VESSEL_ID,)
        ids = self.functions if self.functions is not None else tuple(sorted(FUNCTIONS))
        return tuple(f"f{i}" for i in ids)

    def problem(self, function_id: str) -> Problem:
        if function_id == VESSEL_ID:
            return pressure_vessel(PenaltyPolicy.parse(self.penalty), self.constraints)
        fid = int(function_id.lstrip("f"))
        fixed = CATALOG[fid].dim
        return classic23(fid, fixed if fixed is not None else self.dim)

    # ------------------------------------------------------------------ serialization
    def to_dict(self) -> dict:
        d = asdict(self)
        d["algorithms"] = list(self.algorithms)
        d["functions"] = None if self.functions is None else list(self.functions)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise InvalidConfigError(f"unknown config keys: {', '.join(unknown)}")
        data = dict(data)
        if "algorithms" in data:
            data["algorithms"] = tuple(data["algorithms"])
        if data.get("functions") is not None:
            data["functions"] = tuple(data["functions"])
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "ExperimentConfig":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidConfigError(f"config is not valid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise InvalidConfigError("config must be a JSON object")
        return cls.from_dict(data)

    @classmethod
    def load(cls, path) -> "ExperimentConfig":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(fh.read())

    def with_overrides(self, **changes) -> "ExperimentConfig":
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def stream_index(algorithm: str, function_id: str, run: int) -> int:
    """64-bit address of one run, stable across Python versions and platforms."""
    key = f"{algorithm}|{function_id}|{run}".encode("ascii")
    return int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), "little")


def run_stream(master_seed: int, algorithm: str, function_id: str, run: int) -> RandomStream:
    return new_stream(master_seed).split(stream_index(algorithm, function_id, run))
