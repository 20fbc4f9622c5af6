from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

ALGORITHMS = ("WOA", "GWO", "WOAGWO")
HUNT_CONDITIONS = ("conjunctive", "literal")
FALLBACKS = ("stay", "spiral")
GREEDY_REFERENCES = ("own_previous", "global_best")
GRANULARITIES = ("per_dimension", "per_agent")
A_FORMS = ("range", "literal")
LEADER_UPDATES = ("immediate", "end_of_iteration")
LEADER_RULES = ("reference", "best3")


class InvalidParamsError(ValueError):
    pass


def normalize_algorithm(name: str) -> str:
    up = str(name).strip().upper()
    if up not in ALGORITHMS:
        raise InvalidParamsError(f"unknown algorithm {name!r}; expected one of {', '.join(ALGORITHMS)}")
    return up


@dataclass(frozen=True)
class OptimizerParams:
    """Run settings. Defaults are population 30 and 500 iterations.

    ``gwo_coeff_granularity=None`` means per-dimension draws for GWO and one
    scalar per agent for the hunt inside WOAGWO. ``a_form="literal"`` swaps
    A = 2ar - a for the variant A = 2ar + a (ablation only).
    ``leader_update`` only affects WOAGWO: "immediate" lets an evaluated
    greedy candidate promote the leaders mid-iteration, "end_of_iteration"
    defers every leader change to the end of the sweep.
    ``leader_rule=None`` means the bookkeeping of the reference GWO code for
    GWO (a new alpha does not demote the old one) and "best3" (the three
    best distinct points ever evaluated) for WOA and WOAGWO.
    """

    algorithm: str = "WOAGWO"
    pop_size: int = 30
    max_iter: int = 500
    spiral_b: float = 1.0
    hunt_condition: str = "conjunctive"
    exploitation_fallback: str = "stay"
    greedy_reference: str = "own_previous"
    gwo_coeff_granularity: Optional[str] = None
    a_form: str = "range"
    leader_update: str = "immediate"
    leader_rule: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "algorithm", normalize_algorithm(self.algorithm))
        if int(self.pop_size) < 2:
            raise InvalidParamsError(f"pop_size must be >= 2, got {self.pop_size}")
        if int(self.max_iter) < 1:
            raise InvalidParamsError(f"max_iter must be >= 1, got {self.max_iter}")
        for value, allowed, label in (
            (self.hunt_condition, HUNT_CONDITIONS, "hunt_condition"),
            (self.exploitation_fallback, FALLBACKS, "exploitation_fallback"),
            (self.greedy_reference, GREEDY_REFERENCES, "greedy_reference"),
            (self.a_form, A_FORMS, "a_form"),
            (self.leader_update, LEADER_UPDATES, "leader_update"),
        ):
            if value not in allowed:
                raise InvalidParamsError(f"{label} must be one of {allowed}, got {value!r}")
        if self.leader_rule not in (None,) + LEADER_RULES:
            raise InvalidParamsError(f"leader_rule must be one of {LEADER_RULES}, got {self.leader_rule!r}")
        if self.gwo_coeff_granularity not in (None,) + GRANULARITIES:
            raise InvalidParamsError(f"gwo_coeff_granularity must be one of {GRANULARITIES}")

    @property
    def granularity(self) -> str:
        if self.gwo_coeff_granularity is not None:
            return self.gwo_coeff_granularity
        return "per_dimension" if self.algorithm == "GWO" else "per_agent"

    @property
    def leaders(self) -> str:
        if self.leader_rule is not None:
            return self.leader_rule
        return "reference" if self.algorithm == "GWO" else "best3"

    @property
    def a_sign(self) -> float:
        return -1.0 if self.a_form == "range" else 1.0

    def to_dict(self) -> dict:
        return asdict(self)
