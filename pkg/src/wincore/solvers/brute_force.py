"""Ground truth by enumerating every pair of positional strategies.

Each profile turns the game into a functional graph, so every start state
leads to a unique lasso; its winner is the parity of the largest color on the
cycle.  Profiles are evaluated in numpy blocks.
"""

from __future__ import annotations

import math

import numpy as np

from ..game.model import ParityGame, StateSet
from .regions import Regions

DEFAULT_BOUND = 10**6
_BLOCK_ROWS = 1 << 15


class BruteForceBoundExceeded(ValueError):
    pass


def profile_count(game: ParityGame) -> int:
    return math.prod(len(ts) for ts in game.succ)


def _profiles(game: ParityGame, player: int) -> np.ndarray:
    """All positional strategies of ``player`` as rows of a full ``next`` array.

    Entries of states owned by the other player are 0 and get overwritten.
    """
    n = game.n
    mine = [s for s in range(n) if game.owner[s] == player]
    count = math.prod(len(game.succ[s]) for s in mine)
    out = np.zeros((count, n), dtype=np.int64)
    if mine:
        grids = np.meshgrid(*[np.asarray(game.succ[s]) for s in mine], indexing="ij")
        for s, g in zip(mine, grids):
            out[:, s] = g.reshape(-1)
    return out


def _cycle_max(nxt: np.ndarray, color: np.ndarray) -> np.ndarray:
    """Largest color on the cycle reached from each start, for each profile row."""
    rows, n = nxt.shape
    pos = np.broadcast_to(np.arange(n), (rows, n)).copy()
    for _ in range(n):
        pos = np.take_along_axis(nxt, pos, axis=1)
    best = color[pos]
    for _ in range(n - 1):
        pos = np.take_along_axis(nxt, pos, axis=1)
        np.maximum(best, color[pos], out=best)
    return best


def brute_force_regions(game: ParityGame, bound: int = DEFAULT_BOUND) -> Regions:
    """Winning regions by exhaustive search over positional profiles.

    ``s`` is won by ``j`` iff some strategy of ``j`` beats every strategy of
    the opponent from ``s``.  Both regions are computed independently; a
    state claimed by both raises ``RuntimeError``.
    """
    total = profile_count(game)
    if total > bound:
        raise BruteForceBoundExceeded(f"{total} strategy profiles exceed the bound {bound}")
    n = game.n
    color = np.asarray(game.color)
    is0 = np.asarray(game.owner) == 0
    sig0 = _profiles(game, 0)
    sig1 = _profiles(game, 1)
    n1 = len(sig1)
    win0 = np.zeros(n, dtype=bool)
    # lose0_all[p1, s]: opponent profile p1 beats every profile of player 0 from s
    beats_all0 = np.ones((n1, n), dtype=bool)
    step = max(1, _BLOCK_ROWS // max(n1, 1))
    for lo in range(0, len(sig0), step):
        block = sig0[lo : lo + step]
        nxt = np.where(is0, block[:, None, :], sig1[None, :, :]).reshape(-1, n)
        even = (_cycle_max(nxt, color) % 2 == 0).reshape(len(block), n1, n)
        win0 |= even.all(axis=1).any(axis=0)
        beats_all0 &= (~even).all(axis=0)
    win1 = beats_all0.any(axis=0)
    if np.any(win0 & win1):
        raise RuntimeError("determinacy violated: a state is won by both players")
    w0 = StateSet(n, np.flatnonzero(win0).tolist())
    w1 = StateSet(n, np.flatnonzero(win1).tolist())
    return Regions(w0, w1, (w0 | w1).complement())


def _reachable(game: ParityGame, starts: list[int]) -> list[int]:
    seen = bytearray(game.n)
    stack = list(starts)
    for s in starts:
        seen[s] = 1
    while stack:
        s = stack.pop()
        for t in game.succ[s]:
            if not seen[t]:
                seen[t] = 1
                stack.append(t)
    return [s for s in range(game.n) if seen[s]]


def brute_force_winning_core(game: ParityGame, j: int, bound: int = DEFAULT_BOUND) -> StateSet:
    """Winning core of ``j`` by brute force on the product game.

    Only the part of the product reachable from the ``(s, 0)`` states is
    enumerated; it is closed under successors, so winners there are unchanged.
    """
    from ..core.product import ProductGame
    from ..game.model import restrict

    prod = ProductGame(game, j)
    width = prod.width
    sub = restrict(prod.game, _reachable(prod.game, [s * width for s in range(game.n)]))
    win = brute_force_regions(sub.game, bound).win(j)
    return StateSet(game.n, (s for s in range(game.n) if sub.from_parent[s * width] in win))
