"""Checking that a positional strategy wins on a region."""

from __future__ import annotations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ..game.model import ParityGame, StateSet
from .regions import MemorylessStrategy


def verify_memoryless_winning(
    game: ParityGame, j: int, region: StateSet, strategy: MemorylessStrategy | dict[int, int]
) -> bool:
    """True iff ``strategy`` keeps every play from ``region`` inside it and wins for ``j``.

    Closure: ``j``'s choices stay in the region and the opponent has no exit.
    Winning: no cycle of the strategy-restricted graph has a largest color of
    the opponent's parity.  For each opponent-parity color ``c`` we look for a
    nontrivial strongly connected component through a ``c``-state in the
    subgraph of states colored at most ``c``.
    """
    choice = strategy.choice if isinstance(strategy, MemorylessStrategy) else strategy
    mask = region._mask
    states = region.ids()
    src: list[int] = []
    dst: list[int] = []
    for s in states:
        if game.owner[s] == j:
            if s not in choice:
                raise ValueError(f"strategy undefined on region state {s}")
            t = choice[s]
            if not game.has_edge(s, t):
                raise ValueError(f"strategy picks {t} at {s}, which is not a successor")
            if not mask[t]:
                return False
            src.append(s)
            dst.append(t)
        else:
            for t in game.succ[s]:
                if not mask[t]:
                    return False
                src.append(s)
                dst.append(t)
    if not states:
        return True
    color = np.asarray(game.color)
    src_a = np.asarray(src, dtype=np.int64)
    dst_a = np.asarray(dst, dtype=np.int64)
    in_region = np.zeros(game.n, dtype=bool)
    in_region[states] = True
    bad_colors = sorted({game.color[s] for s in states if game.color[s] % 2 != j}, reverse=True)
    for c in bad_colors:
        low = in_region & (color <= c)
        keep = low[src_a] & low[dst_a]
        s_k, t_k = src_a[keep], dst_a[keep]
        if np.any((s_k == t_k) & (color[s_k] == c)):
            return False
        graph = csr_matrix((np.ones(len(s_k), dtype=np.int8), (s_k, t_k)), shape=(game.n, game.n))
        _, labels = connected_components(graph, directed=True, connection="strong")
        sizes = np.bincount(labels)
        hit = np.flatnonzero(low & (color == c))
        if np.any(sizes[labels[hit]] >= 2):
            return False
    return True
