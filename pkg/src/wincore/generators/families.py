"""Seeded random games and the deterministic benchmark families.

The exact node and edge tables of every family are written out in
``docs/families.md``.
"""

from __future__ import annotations

from ..game.model import ParityGame
from .rng import SplitMix64


def gen_random(n: int, d: int, l: int, u: int, seed: int) -> ParityGame:
    """Random game with ``n`` states, colors uniform in ``[1, d]`` and out-degree uniform in ``[l, u]``.

    For each state in id order the generator draws owner, color, out-degree
    and then the successors, without replacement and never the state itself,
    by a partial Fisher-Yates shuffle of the other ``n - 1`` ids.
    """
    if n < 2 or d < 1 or not 1 <= l <= u <= n - 1:
        raise ValueError(f"need n >= 2, d >= 1 and 1 <= l <= u <= n - 1, got n={n} d={d} l={l} u={u}")
    rng = SplitMix64(seed)
    owner = []
    color = []
    succ = []
    for s in range(n):
        owner.append(rng.below(2))
        color.append(1 + rng.below(d))
        deg = rng.between(l, u)
        # slot i of the virtual candidate array holds id i, or i + 1 past s
        swapped: dict[int, int] = {}
        chosen = []
        size = n - 1
        for i in range(deg):
            r = i + rng.below(size - i)
            pick = swapped.get(r, r)
            swapped[r] = swapped.get(i, i)
            chosen.append(pick if pick < s else pick + 1)
        succ.append(chosen)
    return ParityGame(owner, color, succ)


def gen_clique(n: int) -> ParityGame:
    """Complete graph without self-loops; state ``i`` has color ``i + 1`` and owner ``i mod 2``."""
    if n < 2:
        raise ValueError("clique needs n >= 2")
    return ParityGame(
        [i % 2 for i in range(n)],
        [i + 1 for i in range(n)],
        [[t for t in range(n) if t != i] for i in range(n)],
    )


def gen_ladder(k: int) -> ParityGame:
    """``k`` rungs of two states each, every state pointing at both states of the next rung (cyclically).

    State ``2i`` belongs to player 0 with color 2, state ``2i + 1`` to
    player 1 with color 1.
    """
    if k < 1:
        raise ValueError("ladder needs k >= 1")
    owner = []
    color = []
    succ = []
    for i in range(k):
        nxt = 2 * ((i + 1) % k)
        for o, c in ((0, 2), (1, 1)):
            owner.append(o)
            color.append(c)
            succ.append([nxt, nxt + 1])
    return ParityGame(owner, color, succ)


def gen_mc_ladder(k: int) -> ParityGame:
    """Model-checker style ladder: ``k`` rungs of three states feeding a final hub, ``3k + 1`` states.

    Rung ``i`` is ``x = 3i`` (player 0, color 1), ``y = 3i + 1`` (player 1,
    color 2) and ``z = 3i + 2`` (player 1, color 3).  ``x`` may enter ``y``
    or ``z``; ``y`` may advance to the next rung or fall to ``z``; ``z``
    advances or loops back to ``x``.  The hub ``3k`` (player 0, color 2)
    loops on itself or restarts at rung 0.
    """
    if k < 1:
        raise ValueError("mc ladder needs k >= 1")
    hub = 3 * k
    owner = []
    color = []
    succ = []
    for i in range(k):
        x, y, z = 3 * i, 3 * i + 1, 3 * i + 2
        nxt = 3 * (i + 1) if i + 1 < k else hub
        owner += [0, 1, 1]
        color += [1, 2, 3]
        succ += [[y, z], [nxt, z], [nxt, x]]
    owner.append(0)
    color.append(2)
    succ.append([hub, 0])
    return ParityGame(owner, color, succ)


def gen_recursive_ladder(k: int) -> ParityGame:
    """``k`` chained blocks of five states whose colors grow with the block index.

    Block ``i`` occupies ids ``5i .. 5i + 4``; see ``docs/families.md`` for the
    table.  The last block's exits wrap around to block 0.
    """
    if k < 1:
        raise ValueError("recursive ladder needs k >= 1")
    owner = []
    color = []
    succ = []
    for i in range(k):
        base = 5 * i
        nxt = 5 * ((i + 1) % k)
        e = 2 * i + 2
        # a: player 1 gate, b: player 0 choice, c/d: even/odd traps, f: exit
        owner += [1, 0, 0, 1, 0]
        color += [e + 1, e, 1, e + 1, 2]
        succ += [
            [base + 1, base + 3],
            [base, base + 2, base + 4],
            [base + 1, base + 2],
            [base + 3, base + 4, nxt],
            [nxt, base + 2],
        ]
    return ParityGame(owner, color, succ)


def gen_jurdzinski(layers: int, blocks: int) -> ParityGame:
    """Layered grid with ``layers`` even/odd layer pairs of ``blocks`` blocks each.

    Layer ``i`` has, per block ``t``, an even state ``g(i, t)`` (player 0,
    color ``2i + 2``) and an odd state ``h(i, t)`` (player 1, color
    ``2i + 1``).  ``h`` can return to ``g`` of its block, move to the next
    block, or climb to the layer above; the top layer climbs to a player 1
    sink of color ``2 * layers + 1`` that player 0 can leave back to layer 0.
    """
    if layers < 1 or blocks < 1:
        raise ValueError("jurdzinski needs layers >= 1 and blocks >= 1")
    per = 2 * blocks

    def g(i: int, t: int) -> int:
        return i * per + 2 * t

    def h(i: int, t: int) -> int:
        return i * per + 2 * t + 1

    sink = layers * per
    owner = []
    color = []
    succ = []
    for i in range(layers):
        for t in range(blocks):
            up = g(i + 1, t) if i + 1 < layers else sink
            owner += [0, 1]
            color += [2 * i + 2, 2 * i + 1]
            succ += [
                [h(i, t)] + ([g(i - 1, t)] if i > 0 else []),
                [g(i, t), h(i, (t + 1) % blocks), up],
            ]
    owner.append(0)
    color.append(2 * layers + 1)
    succ.append([sink, g(0, 0)])
    return ParityGame(owner, color, succ)


FAMILIES = {
    "random": gen_random,
    "clique": gen_clique,
    "ladder": gen_ladder,
    "mc_ladder": gen_mc_ladder,
    "recursive_ladder": gen_recursive_ladder,
    "jurdzinski": gen_jurdzinski,
}
