"""The decreasing B-sequence that under-approximates the winning core."""

from __future__ import annotations

from typing import Literal

from .. import deadline as _deadline
from ..game.attractor import attractor_mask
from ..game.model import ParityGame, StateSet
from .product import DEFAULT_PRODUCT_LIMIT, ProductGame
from .thresholds import b_step_thresholds

Mode = Literal["naive", "thresholds"]


def product_attractor(game: ParityGame, j: int, current: StateSet, limit: int = DEFAULT_PRODUCT_LIMIT) -> tuple[ProductGame, bytearray]:
    """Explicit attractor of ``current × [1,d]_j`` in the product game for ``j``."""
    prod = ProductGame(game, j, limit)
    width = prod.width
    target = bytearray(prod.game.n)
    for s in current:
        base = s * width
        for v in range(1, width):
            if v % 2 == j:
                target[base + v] = 1
    return prod, attractor_mask(prod.game, j, target)


def b_step_naive(game: ParityGame, j: int, current: StateSet, limit: int = DEFAULT_PRODUCT_LIMIT) -> StateSet:
    """Next B-iterate via the explicit product attractor."""
    prod, attr = product_attractor(game, j, current, limit)
    width = prod.width
    mask = current._mask
    return StateSet(game.n, (s for s in range(game.n) if attr[s * width] and mask[s]))


def compute_B(
    game: ParityGame,
    j: int,
    mode: Mode = "thresholds",
    trace: list[StateSet] | None = None,
    deadline: float | None = None,
) -> StateSet:
    """Limit of the B-sequence for player ``j``, starting from all states.

    Iterates appended to ``trace`` (when given) start with the full state set
    and end with the repeated fixpoint omitted, so the last entry is the limit.
    """
    if mode == "thresholds":
        def step(g, j, cur):
            return b_step_thresholds(g, j, cur, deadline)
    elif mode == "naive":
        step = b_step_naive
    else:
        raise ValueError(f"unknown mode {mode!r}")
    current = game.states()
    if trace is not None:
        trace.append(current)
    while True:
        _deadline.check(deadline)
        nxt = step(game, j, current)
        if nxt == current:
            return current
        current = nxt
        if trace is not None:
            trace.append(current)
