"""Partial solver: repeatedly remove attractors of approximated winning cores."""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import deadline as _deadline
from ..game.attractor import attractor_mask
from ..game.model import ParityGame, StateSet, restrict
from ..solvers.regions import Regions
from .approx import Mode, compute_B


@dataclass
class TraceEntry:
    """B-iterates of one core computation, in original state ids."""

    round: int
    player: int
    iterates: list[StateSet] = field(default_factory=list)


def partial_solve(
    game: ParityGame,
    mode: Mode = "thresholds",
    trace: list[TraceEntry] | None = None,
    deadline: float | None = None,
) -> Regions:
    """Sound under-approximation of both winning regions.

    Player 0's core approximation is tried first; when it is empty, player
    1's.  Its attractor is won and removed, and the rest of the game is
    handled the same way until both approximations are empty.
    """
    n = game.n
    win = [bytearray(n), bytearray(n)]
    current = game
    ids = list(range(n))
    rnd = 0
    while current.n:
        for j in (0, 1):
            iterates: list[StateSet] | None = [] if trace is not None else None
            core = compute_B(current, j, mode, iterates, deadline)
            if trace is not None:
                trace.append(TraceEntry(rnd, j, [StateSet(n, (ids[s] for s in it)) for it in iterates]))
            if core:
                break
        else:
            break
        _deadline.check(deadline)
        attr = attractor_mask(current, j, core._mask)
        target = win[j]
        keep = []
        for s in range(current.n):
            if attr[s]:
                target[ids[s]] = 1
            else:
                keep.append(s)
        if not keep:
            break
        sub = restrict(current, keep)
        ids = [ids[s] for s in sub.to_parent]
        current = sub.game
        rnd += 1
    w0 = StateSet.from_mask(win[0])
    w1 = StateSet.from_mask(win[1])
    return Regions(w0, w1, (w0 | w1).complement())
