"""Zielonka's recursive algorithm, run on an explicit stack of generator frames."""

from __future__ import annotations

from typing import Generator

from .. import deadline as _deadline
from ..game.attractor import attractor_mask
from ..game.model import ParityGame, StateSet
from .regions import MemorylessStrategy, Regions

_Masks = tuple[bytearray, bytearray]


def zielonka_solve(game: ParityGame, deadline: float | None = None) -> Regions:
    """Solve ``game`` completely, with positional winning strategies for both players."""
    n = game.n
    owner = game.owner
    color = game.color
    succ = game.succ
    strat = [-1] * n

    def frame(alive: bytearray) -> Generator[bytearray, _Masks, _Masks]:
        _deadline.check(deadline)
        ids = [s for s in range(n) if alive[s]]
        if not ids:
            return bytearray(n), bytearray(n)
        top = max(color[s] for s in ids)
        p = top % 2
        q = 1 - p
        top_states = bytearray(n)
        for s in ids:
            if color[s] == top:
                top_states[s] = 1
        attr_p = attractor_mask(game, p, top_states, alive, strat)
        rest = bytearray(a & (b ^ 1) for a, b in zip(alive, attr_p))
        sub = yield rest
        if not any(sub[q]):
            for s in ids:
                if top_states[s] and owner[s] == p:
                    strat[s] = next(t for t in succ[s] if alive[t])
            won = (bytearray(alive), bytearray(n))
            return won if p == 0 else won[::-1]
        attr_q = attractor_mask(game, q, sub[q], alive, strat)
        rest = bytearray(a & (b ^ 1) for a, b in zip(alive, attr_q))
        sub2 = yield rest
        wq = bytearray(a | b for a, b in zip(sub2[q], attr_q))
        return (sub2[p], wq) if p == 0 else (wq, sub2[p])

    stack = [frame(bytearray(b"\x01" * n))]
    value = None
    while stack:
        try:
            child = stack[-1].send(value)
        except StopIteration as stop:
            stack.pop()
            value = stop.value
            continue
        stack.append(frame(child))
        value = None
    w0, w1 = value
    s0 = {s: strat[s] for s in range(n) if w0[s] and owner[s] == 0}
    s1 = {s: strat[s] for s in range(n) if w1[s] and owner[s] == 1}
    return Regions.complete(
        StateSet.from_mask(w0),
        StateSet.from_mask(w1),
        MemorylessStrategy(0, s0),
        MemorylessStrategy(1, s1),
    )
