"""Parity game solving with winning cores."""

from .core import compute_B, partial_solve, solve_via_core, winning_core_exact
from .game import ParityGame, StateSet, attractor, parse_pgsolver, restrict, serialize_pgsolver
from .solvers import Regions, brute_force_regions, zielonka_solve

__version__ = "0.1.0"

__all__ = [
    "ParityGame",
    "Regions",
    "StateSet",
    "attractor",
    "brute_force_regions",
    "compute_B",
    "parse_pgsolver",
    "partial_solve",
    "restrict",
    "serialize_pgsolver",
    "solve_via_core",
    "winning_core_exact",
    "zielonka_solve",
]
