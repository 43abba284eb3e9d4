from .approx import b_step_naive, compute_B, product_attractor
from .exact import solve_via_core, winning_core_exact
from .partial import TraceEntry, partial_solve
from .product import DEFAULT_PRODUCT_LIMIT, ProductGame, ProductTooLarge, lift_path, product_game
from .thresholds import ThresholdMap, b_step_thresholds, edge_threshold, target_seed, threshold_attractor

__all__ = [
    "DEFAULT_PRODUCT_LIMIT",
    "ProductGame",
    "ProductTooLarge",
    "ThresholdMap",
    "TraceEntry",
    "b_step_naive",
    "b_step_thresholds",
    "compute_B",
    "edge_threshold",
    "lift_path",
    "partial_solve",
    "product_attractor",
    "product_game",
    "solve_via_core",
    "target_seed",
    "threshold_attractor",
    "winning_core_exact",
]
