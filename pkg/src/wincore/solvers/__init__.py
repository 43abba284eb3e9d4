from .brute_force import BruteForceBoundExceeded, brute_force_regions, brute_force_winning_core, profile_count
from .regions import MemorylessStrategy, Regions, parse_regions
from .verify import verify_memoryless_winning
from .zielonka import zielonka_solve

__all__ = [
    "BruteForceBoundExceeded",
    "MemorylessStrategy",
    "Regions",
    "brute_force_regions",
    "brute_force_winning_core",
    "parse_regions",
    "profile_count",
    "verify_memoryless_winning",
    "zielonka_solve",
]
