"""Color-sequence notions: the reward order, dominating sequences and lasso classes."""

from __future__ import annotations

import enum
from typing import Sequence

from .model import ParityGame


def reward_less(j: int, v: int, u: int) -> bool:
    """``v`` is strictly worse than ``u`` for player ``j``.

    Large colors of ``j``'s parity are best, large colors of the opponent's
    parity are worst.  Defined for 0 as well.
    """
    return (v < u and u % 2 == j) or (u < v and v % 2 == 1 - j)


def reward_rank(j: int, v: int) -> int:
    """Integer key with ``reward_rank(j, v) < reward_rank(j, u)`` iff ``reward_less(j, v, u)``.

    The rank of ``v`` is ``v`` when ``v`` has parity ``j`` and ``-v``
    otherwise, so ``abs(rank)`` recovers the color.
    """
    return v if v % 2 == j else -v


def reward_sorted(j: int, values: Sequence[int]) -> list[int]:
    return sorted(values, key=lambda v: reward_rank(j, v))


def _check_path(game: ParityGame, path: Sequence[int]) -> list[int]:
    for s in path:
        if not 0 <= s < game.n:
            raise ValueError(f"state {s} not in game")
    for a, b in zip(path, path[1:]):
        if not game.has_edge(a, b):
            raise ValueError(f"({a}, {b}) is not a transition")
    return [game.color[s] for s in path]


def colors_dominating(colors: Sequence[int], j: int) -> bool:
    if len(colors) < 2:
        raise ValueError("a dominating sequence needs at least one transition")
    return max(colors[1:]) % 2 == j


def is_j_dominating(game: ParityGame, path: Sequence[int], j: int) -> bool:
    """The largest color after the first state has parity ``j``."""
    return colors_dominating(_check_path(game, path), j)


def colors_max_consecutive(colors: Sequence[int], j: int) -> int:
    """Largest ``k`` such that ``colors`` begins with ``k`` consecutive ``j``-dominating segments.

    Segments share their boundary element.  ``best[i]`` is the longest chain
    of split points from 0 ending exactly at ``i``; greedy splitting is not
    enough because an early cut can block later ones.
    """
    length = len(colors)
    best = [-1] * length
    if length:
        best[0] = 0
    for i in range(1, length):
        seg_max = -1
        # walk p downwards so seg_max is max(colors[p+1..i])
        for p in range(i - 1, -1, -1):
            c = colors[p + 1]
            if c > seg_max:
                seg_max = c
            if best[p] >= 0 and seg_max % 2 == j and best[p] + 1 > best[i]:
                best[i] = best[p] + 1
    return max(best, default=0)


def max_consecutive_dominating(game: ParityGame, path: Sequence[int], j: int) -> int:
    return colors_max_consecutive(_check_path(game, path), j)


class LassoClass(enum.Enum):
    """The four classes a color sequence falls in: Λ_0, Ω_0∖Λ_0, Λ_1, Ω_1∖Λ_1."""

    LAMBDA_0 = "Lambda_0"
    OMEGA_0_ONLY = "Omega_0 - Lambda_0"
    LAMBDA_1 = "Lambda_1"
    OMEGA_1_ONLY = "Omega_1 - Lambda_1"

    @property
    def winner(self) -> int:
        return 0 if self in (LassoClass.LAMBDA_0, LassoClass.OMEGA_0_ONLY) else 1

    @property
    def dominating(self) -> bool:
        return self in (LassoClass.LAMBDA_0, LassoClass.LAMBDA_1)


def classify_colors(prefix: Sequence[int], cycle: Sequence[int]) -> LassoClass:
    """Classify ``prefix · cycle^ω`` by its parity winner and its non-initial maximum."""
    if not cycle:
        raise ValueError("empty cycle")
    winner = max(cycle) % 2
    tail = list(prefix[1:]) + list(cycle)
    head_max = max(tail)
    if winner == 0:
        return LassoClass.LAMBDA_0 if head_max % 2 == 0 else LassoClass.OMEGA_0_ONLY
    return LassoClass.LAMBDA_1 if head_max % 2 == 1 else LassoClass.OMEGA_1_ONLY


def classify_lasso(game: ParityGame, prefix: Sequence[int], cycle: Sequence[int]) -> LassoClass:
    """Classify the play ``prefix · cycle^ω`` of ``game``."""
    if not cycle:
        raise ValueError("empty cycle")
    whole = list(prefix) + list(cycle)
    _check_path(game, whole)
    if not game.has_edge(cycle[-1], cycle[0]):
        raise ValueError(f"cycle does not close: no transition {cycle[-1]} -> {cycle[0]}")
    return classify_colors([game.color[s] for s in prefix], [game.color[s] for s in cycle])
