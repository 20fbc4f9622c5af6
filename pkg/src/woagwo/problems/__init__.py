from .classic import CATALOG, FUNCTIONS, UnknownFunctionError, catalog_csv_text, classic23
from .space import DimensionError, MissingNoiseError, Problem, SearchSpace, clamp, evaluate
from .vessel import (
    DEATH_SENTINEL,
    VESSEL_SPACE,
    ConstraintReport,
    PenaltyPolicy,
    constraints,
    cost,
    pressure_vessel,
)

__all__ = [
    "CATALOG",
    "DEATH_SENTINEL",
    "FUNCTIONS",
    "VESSEL_SPACE",
    "ConstraintReport",
    "DimensionError",
    "MissingNoiseError",
    "PenaltyPolicy",
    "Problem",
    "SearchSpace",
    "UnknownFunctionError",
    "catalog_csv_text",
    "clamp",
    "classic23",
    "constraints",
    "cost",
    "evaluate",
    "pressure_vessel",
]
