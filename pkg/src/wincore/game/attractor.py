"""Attractors, positive attractors and closedness checks."""

from __future__ import annotations

from collections import deque

from .model import ParityGame, StateSet


def attractor_mask(
    game: ParityGame,
    j: int,
    target: bytearray | bytes,
    alive: bytearray | bytes | None = None,
    strategy: list[int] | None = None,
) -> bytearray:
    """Counter-based backward attractor on byte masks.

    Only states with ``alive[s]`` set take part; ``target`` must lie inside
    ``alive``.  When ``strategy`` is given, attracted player-``j`` states
    outside the target get ``strategy[s]`` set to a successor one layer
    closer to the target.
    """
    n = game.n
    owner = game.owner
    pred = game.pred
    attr = bytearray(target)
    if alive is None:
        count = [len(ts) for ts in game.succ]
    else:
        succ = game.succ
        count = [0] * n
        for s in range(n):
            if alive[s]:
                c = 0
                for t in succ[s]:
                    c += alive[t]
                count[s] = c
    queue = deque(s for s in range(n) if attr[s])
    pop = queue.popleft
    push = queue.append
    while queue:
        t = pop()
        for s in pred[t]:
            if attr[s] or (alive is not None and not alive[s]):
                continue
            if owner[s] == j:
                attr[s] = 1
                if strategy is not None:
                    strategy[s] = t
                push(s)
            else:
                count[s] -= 1
                if count[s] == 0:
                    attr[s] = 1
                    push(s)
    return attr


def attractor(game: ParityGame, j: int, target: StateSet) -> StateSet:
    """States from which player ``j`` can force a visit to ``target``."""
    return StateSet.from_mask(attractor_mask(game, j, target._mask))


def attractor_with_strategy(game: ParityGame, j: int, target: StateSet) -> tuple[StateSet, dict[int, int]]:
    """Attractor plus a memoryless attractor strategy for the attracted ``j``-states."""
    strategy = [-1] * game.n
    mask = attractor_mask(game, j, target._mask, strategy=strategy)
    choice = {s: t for s, t in enumerate(strategy) if t >= 0}
    return StateSet.from_mask(mask), choice


def positive_attractor(game: ParityGame, j: int, target: StateSet) -> StateSet:
    """States from which player ``j`` can force a visit to ``target`` in at least one step."""
    tmask = target._mask
    one_step = bytearray(game.n)
    for s in range(game.n):
        ts = game.succ[s]
        if game.owner[s] == j:
            one_step[s] = any(tmask[t] for t in ts)
        else:
            one_step[s] = all(tmask[t] for t in ts)
    return StateSet.from_mask(attractor_mask(game, j, one_step))


def is_closed(game: ParityGame, j: int, states: StateSet) -> bool:
    """True iff player ``j`` can keep the play inside ``states`` forever."""
    mask = states._mask
    for s in states:
        if game.owner[s] == j:
            if not any(mask[t] for t in game.succ[s]):
                return False
        elif not all(mask[t] for t in game.succ[s]):
            return False
    return True
