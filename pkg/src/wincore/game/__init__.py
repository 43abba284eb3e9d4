from .attractor import (
    attractor,
    attractor_mask,
    attractor_with_strategy,
    is_closed,
    positive_attractor,
)
from .model import (
    InvalidGameError,
    NonTotalError,
    ParityGame,
    Restriction,
    StateSet,
    opponent,
    restrict,
)
from .pgsolver import PGSolverSyntaxError, parse_pgsolver, read_game, serialize_pgsolver, write_game
from .sequences import (
    LassoClass,
    classify_colors,
    classify_lasso,
    colors_dominating,
    colors_max_consecutive,
    is_j_dominating,
    max_consecutive_dominating,
    reward_less,
    reward_rank,
    reward_sorted,
)

__all__ = [
    "InvalidGameError",
    "LassoClass",
    "NonTotalError",
    "PGSolverSyntaxError",
    "ParityGame",
    "Restriction",
    "StateSet",
    "attractor",
    "attractor_mask",
    "attractor_with_strategy",
    "classify_colors",
    "classify_lasso",
    "colors_dominating",
    "colors_max_consecutive",
    "is_closed",
    "is_j_dominating",
    "max_consecutive_dominating",
    "opponent",
    "parse_pgsolver",
    "positive_attractor",
    "read_game",
    "restrict",
    "reward_less",
    "reward_rank",
    "reward_sorted",
    "serialize_pgsolver",
    "write_game",
]
