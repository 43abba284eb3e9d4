from .families import (
    FAMILIES,
    gen_clique,
    gen_jurdzinski,
    gen_ladder,
    gen_mc_ladder,
    gen_random,
    gen_recursive_ladder,
)
from .rng import SplitMix64

__all__ = [
    "FAMILIES",
    "SplitMix64",
    "gen_clique",
    "gen_jurdzinski",
    "gen_ladder",
    "gen_mc_ladder",
    "gen_random",
    "gen_recursive_ladder",
]
