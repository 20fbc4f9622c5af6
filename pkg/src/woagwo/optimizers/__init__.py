from .algorithms import NOISE_STREAM_INDEX, STEPS, init_state, run, step_gwo, step_woa, step_woagwo
from .kernels import coefficients, decay_a, encircle, gwo_hunt, random_search, spiral
from .params import ALGORITHMS, LEADER_RULES, InvalidParamsError, OptimizerParams
from .swarm import RunTrace, SwarmState, merge_leaders, reference_leaders, update_leaders

__all__ = [
    "ALGORITHMS",
    "LEADER_RULES",
    "NOISE_STREAM_INDEX",
    "STEPS",
    "InvalidParamsError",
    "OptimizerParams",
    "RunTrace",
    "SwarmState",
    "coefficients",
    "decay_a",
    "encircle",
    "gwo_hunt",
    "init_state",
    "merge_leaders",
    "random_search",
    "reference_leaders",
    "run",
    "spiral",
    "step_gwo",
    "step_woa",
    "step_woagwo",
    "update_leaders",
]
