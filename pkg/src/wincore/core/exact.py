"""Exact winning cores through the product game, and the solver built on them."""

from __future__ import annotations

from .. import deadline as _deadline
from ..game.attractor import attractor_mask
from ..game.model import ParityGame, StateSet, restrict
from ..solvers.regions import Regions
from ..solvers.zielonka import zielonka_solve
from .product import DEFAULT_PRODUCT_LIMIT, ProductGame


def winning_core_exact(
    game: ParityGame, j: int, limit: int = DEFAULT_PRODUCT_LIMIT, deadline: float | None = None
) -> StateSet:
    """States ``s`` with ``(s, 0)`` won by ``j`` in the product game for ``j``."""
    prod = ProductGame(game, j, limit)
    win = zielonka_solve(prod.game, deadline).win(j)
    width = prod.width
    return StateSet(game.n, (s for s in range(game.n) if s * width in win))


def solve_via_core(game: ParityGame, limit: int = DEFAULT_PRODUCT_LIMIT, deadline: float | None = None) -> Regions:
    """Exact regions: remove the attractor of player 0's core until it is empty; the rest is player 1's."""
    n = game.n
    win0 = bytearray(n)
    win1 = bytearray(n)
    current = game
    ids = list(range(n))
    while True:
        _deadline.check(deadline)
        core = winning_core_exact(current, 0, limit, deadline)
        if not core:
            for s in ids:
                win1[s] = 1
            break
        attr = attractor_mask(current, 0, core._mask)
        keep = []
        for s in range(current.n):
            if attr[s]:
                win0[ids[s]] = 1
            else:
                keep.append(s)
        if not keep:
            break
        sub = restrict(current, keep)
        ids = [ids[s] for s in sub.to_parent]
        current = sub.game
    return Regions.complete(StateSet.from_mask(win0), StateSet.from_mask(win1))
