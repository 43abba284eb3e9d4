"""The product game that records the largest color seen since the start."""

from __future__ import annotations

from typing import Sequence

from ..game.model import ParityGame

DEFAULT_PRODUCT_LIMIT = 5 * 10**7


class ProductTooLarge(ValueError):
    pass


class ProductGame:
    """Explicit product of a base game with the running maximum ``v`` in ``0..d``.

    State ``(s, v)`` has index ``s * (d + 1) + v``.  Moving from ``(s, v)``
    along ``s -> t`` reaches ``(t, max(v, c(t)))``.  The color of ``(s, v)``
    is ``c(s)`` when ``v`` has parity ``player`` and ``v`` otherwise, so
    ``(s, 0)`` has color 0 in the product for player 1.
    """

    def __init__(self, base: ParityGame, player: int, limit: int = DEFAULT_PRODUCT_LIMIT):
        d = base.d
        width = d + 1
        size = base.n * width
        if size > limit:
            raise ProductTooLarge(f"product would have {size} states, limit is {limit}")
        self.base = base
        self.player = player
        self.width = width
        owner = []
        color = []
        succ = []
        bcolor = base.color
        for s in range(base.n):
            o = base.owner[s]
            c = bcolor[s]
            ts = base.succ[s]
            for v in range(width):
                owner.append(o)
                color.append(c if v % 2 == player else v)
                succ.append([t * width + (v if v > bcolor[t] else bcolor[t]) for t in ts])
        self.game = ParityGame(owner, color, succ, min_color=0)

    def index(self, s: int, v: int) -> int:
        return s * self.width + v

    def st(self, i: int) -> int:
        return i // self.width

    def val(self, i: int) -> int:
        return i % self.width

    def pair(self, i: int) -> tuple[int, int]:
        return divmod(i, self.width)

    def __repr__(self) -> str:
        return f"ProductGame(player={self.player}, n={self.game.n}, base={self.base!r})"


def product_game(game: ParityGame, j: int, limit: int = DEFAULT_PRODUCT_LIMIT) -> ProductGame:
    return ProductGame(game, j, limit)


def lift_path(game: ParityGame, path: Sequence[int], v0: int) -> list[tuple[int, int]]:
    """Pair each state of ``path`` with the running maximum of the colors after the first, seeded by ``v0``."""
    if not 0 <= v0 <= game.d:
        raise ValueError(f"seed value {v0} outside 0..{game.d}")
    if not path:
        raise ValueError("empty path")
    for a, b in zip(path, path[1:]):
        if not game.has_edge(a, b):
            raise ValueError(f"({a}, {b}) is not a transition")
    out = [(path[0], v0)]
    w = v0
    for s in path[1:]:
        w = max(w, game.color[s])
        out.append((s, w))
    return out
