"""Product-game attractors represented by one threshold per base state.

The attractor of ``B × [1,d]_j`` in the product game is upward closed in the
reward order of player ``j``: if ``(s, v)`` is in it, so is every ``(s, u)``
with ``u`` better than ``v``.  It is therefore described by the worst value
``k(s)`` that still belongs to it, or ``None`` (bottom) when no value does.

Internally values are stored as reward ranks (see ``reward_rank``), with
bottom encoded as ``d + 1`` so that it is above every real rank.
"""

from __future__ import annotations

import logging
from collections import deque

from .. import deadline as _deadline
from ..game.model import ParityGame, StateSet
from ..game.sequences import reward_rank

log = logging.getLogger(__name__)


def _edge_rank(j: int, c: int, tk: int, d: int) -> int:
    bot = d + 1
    if tk >= bot:
        return bot
    best = bot
    if reward_rank(j, c) >= tk:
        # every v <= c works; the worst of those is the largest v <= c of the opponent's parity
        best = -(c if c % 2 != j else c - 1)
    if abs(tk) > c:
        best = min(best, tk)
    else:
        up = c + 1 if (c + 1) % 2 == j else c + 2
        if up <= d:
            best = min(best, up)
    return best


def edge_threshold(j: int, succ_color: int, succ_threshold: int | None, d: int) -> int | None:
    """Worst value ``v`` (in player ``j``'s reward order) with ``max(v, succ_color)`` at least ``succ_threshold``.

    ``None`` stands for bottom, both as input and output.  The set of all
    valid ``v`` in ``0..d`` is exactly the set of values at least as good as
    the returned one.
    """
    if not 1 <= succ_color <= d:
        raise ValueError(f"color {succ_color} outside 1..{d}")
    tk = d + 1 if succ_threshold is None else reward_rank(j, succ_threshold)
    r = _edge_rank(j, succ_color, tk, d)
    return None if r > d else abs(r)


class ThresholdMap:
    """Per-state threshold of an upward-closed product set for player ``player``."""

    def __init__(self, player: int, d: int, ranks: list[int]):
        self.player = player
        self.d = d
        self.ranks = ranks

    def __len__(self) -> int:
        return len(self.ranks)

    def value(self, s: int) -> int | None:
        r = self.ranks[s]
        return None if r > self.d else abs(r)

    def values(self) -> list[int | None]:
        return [self.value(s) for s in range(len(self.ranks))]

    def contains(self, s: int, v: int) -> bool:
        return reward_rank(self.player, v) >= self.ranks[s]

    def slice(self, v: int) -> StateSet:
        """Base states ``s`` with ``(s, v)`` in the represented set."""
        rv = reward_rank(self.player, v)
        return StateSet(len(self.ranks), (s for s, r in enumerate(self.ranks) if r <= rv))


def target_seed(j: int, d: int) -> int | None:
    """Worst value of ``[1,d]_j``; its up-set is exactly ``[1,d]_j``."""
    if j == 0:
        return 2 if d >= 2 else None
    return 1


def threshold_attractor(
    game: ParityGame, j: int, target: StateSet, deadline: float | None = None
) -> ThresholdMap:
    """Thresholds of the product attractor of ``target × [1,d]_j`` for player ``j``.

    Backward FIFO worklist over base states.  A ``j``-state takes the best
    requirement among its successors, which can be updated incrementally; an
    opponent state rescans all successors and takes the worst.  Every entry
    only improves, at most ``d + 2`` times.
    """
    n = game.n
    d = game.d
    bot = d + 1
    seed = target_seed(j, d)
    if seed is None:
        log.debug("[1,%d]_%d is empty; the attractor is empty", d, j)
        return ThresholdMap(j, d, [bot] * n)
    seed_rank = reward_rank(j, seed)
    tmask = target._mask
    k = [seed_rank if tmask[s] else bot for s in range(n)]

    color = game.color
    # per-state constants of the edge rule, indexed by successor
    c_rank = [reward_rank(j, c) for c in color]
    low = [-(c if c % 2 != j else c - 1) for c in color]
    up = []
    for c in color:
        u = c + 1 if (c + 1) % 2 == j else c + 2
        up.append(u if u <= d else bot)

    owner = game.owner
    succ = game.succ
    pred = game.pred
    queued = bytearray(tmask)
    queue = deque(s for s in range(n) if tmask[s])
    pop = queue.popleft
    push = queue.append
    ticks = 0
    while queue:
        ticks += 1
        if ticks & 0xFFFF == 0:
            _deadline.check(deadline)
        t = pop()
        queued[t] = 0
        tk = k[t]
        # requirement on a predecessor's value to enter t's fiber
        if tk >= bot:
            continue
        et = low[t] if c_rank[t] >= tk else bot
        if -tk > color[t] or tk > color[t]:
            if tk < et:
                et = tk
        elif up[t] < et:
            et = up[t]
        for s in pred[t]:
            ks = k[s]
            if et >= ks:
                continue
            if owner[s] == j:
                k[s] = et
            else:
                worst = -bot
                for u in succ[s]:
                    uk = k[u]
                    if uk >= bot:
                        worst = bot
                        break
                    eu = low[u] if c_rank[u] >= uk else bot
                    if -uk > color[u] or uk > color[u]:
                        if uk < eu:
                            eu = uk
                    elif up[u] < eu:
                        eu = up[u]
                    if eu > worst:
                        worst = eu
                        if worst >= ks:
                            break
                if worst >= ks:
                    continue
                k[s] = worst
            if not queued[s]:
                queued[s] = 1
                push(s)
    return ThresholdMap(j, d, k)


def b_step_thresholds(
    game: ParityGame, j: int, current: StateSet, deadline: float | None = None
) -> StateSet:
    """Next B-iterate without building the product game."""
    tmap = threshold_attractor(game, j, current, deadline)
    ranks = tmap.ranks
    mask = current._mask
    return StateSet(game.n, (s for s in range(game.n) if ranks[s] <= 0 and mask[s]))
