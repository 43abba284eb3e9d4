"""Parity game data model: the indexed game graph and fixed-capacity state sets."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np


class InvalidGameError(ValueError):
    """Raised when a game violates a structural invariant."""


class NonTotalError(InvalidGameError):
    """A state has no successor (the transition relation is not total)."""

    def __init__(self, state: int, message: str | None = None):
        self.state = state
        super().__init__(message or f"state {state} has no successor")


def opponent(j: int) -> int:
    return 1 - j


class StateSet:
    """Set of state ids in ``range(capacity)`` backed by a byte mask.

    Instances are treated as immutable; the set algebra returns new sets.
    """

    __slots__ = ("_mask", "_count")

    def __init__(self, capacity: int, ids: Iterable[int] = ()):
        mask = bytearray(capacity)
        for i in ids:
            if not 0 <= i < capacity:
                raise ValueError(f"state id {i} out of range for capacity {capacity}")
            mask[i] = 1
        self._mask = mask
        self._count = sum(mask) if capacity < 4096 else int(np.count_nonzero(np.frombuffer(mask, np.uint8)))

    @classmethod
    def from_mask(cls, mask: bytearray | bytes) -> StateSet:
        """Wrap a 0/1 byte mask. The mask is copied."""
        obj = cls.__new__(cls)
        obj._mask = bytearray(mask)
        obj._count = int(np.count_nonzero(np.frombuffer(obj._mask, np.uint8))) if mask else 0
        return obj

    @classmethod
    def full(cls, capacity: int) -> StateSet:
        return cls.from_mask(b"\x01" * capacity)

    @classmethod
    def empty(cls, capacity: int) -> StateSet:
        return cls.from_mask(bytes(capacity))

    @property
    def capacity(self) -> int:
        return len(self._mask)

    @property
    def mask(self) -> bytes:
        return bytes(self._mask)

    def __contains__(self, i: int) -> bool:
        return 0 <= i < len(self._mask) and self._mask[i] == 1

    def __len__(self) -> int:
        return self._count

    def __bool__(self) -> bool:
        return self._count > 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.ids())

    def ids(self) -> list[int]:
        return np.flatnonzero(np.frombuffer(self._mask, np.uint8)).tolist() if self._mask else []

    def _arr(self) -> np.ndarray:
        return np.frombuffer(self._mask, np.uint8)

    def _check(self, other: StateSet) -> None:
        if not isinstance(other, StateSet):
            raise TypeError(f"expected StateSet, got {type(other).__name__}")
        if other.capacity != self.capacity:
            raise ValueError(f"capacity mismatch: {self.capacity} vs {other.capacity}")

    def __or__(self, other: StateSet) -> StateSet:
        self._check(other)
        return StateSet.from_mask((self._arr() | other._arr()).tobytes())

    def __and__(self, other: StateSet) -> StateSet:
        self._check(other)
        return StateSet.from_mask((self._arr() & other._arr()).tobytes())

    def __sub__(self, other: StateSet) -> StateSet:
        self._check(other)
        return StateSet.from_mask((self._arr() & (other._arr() ^ 1)).tobytes())

    def complement(self) -> StateSet:
        return StateSet.from_mask((self._arr() ^ 1).tobytes())

    def __le__(self, other: StateSet) -> bool:
        self._check(other)
        return not bool(np.any(self._arr() & (other._arr() ^ 1)))

    def __ge__(self, other: StateSet) -> bool:
        return other <= self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StateSet):
            return NotImplemented
        return self._mask == other._mask

    def __hash__(self) -> int:
        return hash(bytes(self._mask))

    def __repr__(self) -> str:
        return f"StateSet({self.capacity}, {self.ids()})"


class ParityGame:
    """A finite two-player parity game.

    States are ``0..n-1``.  ``owner[s]`` is the player moving at ``s``,
    ``color[s]`` its priority and ``succ[s]`` its successors in ascending order
    without duplicates.  Predecessor lists are derived.  Instances must not be
    mutated after construction.

    ``min_color`` is 1 for ordinary games; product games use 0 for states
    whose recorded maximum is still the empty-history sentinel.
    """

    __slots__ = ("owner", "color", "succ", "pred", "names", "d", "m", "color_shift")

    def __init__(
        self,
        owner: Sequence[int],
        color: Sequence[int],
        succ: Sequence[Iterable[int]],
        names: Sequence[str | None] | None = None,
        *,
        min_color: int = 1,
        color_shift: int = 0,
    ):
        n = len(owner)
        if len(color) != n or len(succ) != n:
            raise InvalidGameError("owner, color and successor arrays differ in length")
        self.owner = list(owner)
        self.color = list(color)
        self.succ = [sorted(set(ts)) for ts in succ]
        self.names = list(names) if names is not None else None
        if self.names is not None and len(self.names) != n:
            raise InvalidGameError("names array has the wrong length")
        self.color_shift = color_shift
        pred: list[list[int]] = [[] for _ in range(n)]
        m = 0
        for s, ts in enumerate(self.succ):
            if not ts:
                raise NonTotalError(s)
            for t in ts:
                if not 0 <= t < n:
                    raise InvalidGameError(f"state {s} has successor {t} outside 0..{n - 1}")
                pred[t].append(s)
            m += len(ts)
        self.pred = pred
        self.m = m
        for s in range(n):
            if self.owner[s] not in (0, 1):
                raise InvalidGameError(f"state {s} has owner {self.owner[s]}")
            if self.color[s] < min_color:
                raise InvalidGameError(f"state {s} has color {self.color[s]} < {min_color}")
        self.d = max(self.color) if n else 0

    @property
    def n(self) -> int:
        return len(self.owner)

    def __len__(self) -> int:
        return len(self.owner)

    def states(self) -> StateSet:
        return StateSet.full(self.n)

    def state_set(self, ids: Iterable[int] = ()) -> StateSet:
        return StateSet(self.n, ids)

    def owned_by(self, j: int) -> StateSet:
        return StateSet(self.n, (s for s in range(self.n) if self.owner[s] == j))

    def with_color(self, c: int) -> StateSet:
        return StateSet(self.n, (s for s in range(self.n) if self.color[s] == c))

    def has_edge(self, s: int, t: int) -> bool:
        ts = self.succ[s]
        lo, hi = 0, len(ts)
        while lo < hi:
            mid = (lo + hi) // 2
            if ts[mid] < t:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(ts) and ts[lo] == t

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ParityGame):
            return NotImplemented
        return (
            self.owner == other.owner
            and self.color == other.color
            and self.succ == other.succ
            and (self.names or None) == (other.names or None)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"ParityGame(n={self.n}, m={self.m}, d={self.d})"


class Restriction:
    """A game restricted to a subset of states, with the id maps both ways."""

    __slots__ = ("game", "to_parent", "from_parent")

    def __init__(self, game: ParityGame, to_parent: list[int], from_parent: list[int]):
        self.game = game
        self.to_parent = to_parent
        # -1 marks parent states that were removed
        self.from_parent = from_parent

    def lift(self, subset: StateSet | Iterable[int], capacity: int) -> StateSet:
        """Map a set of restricted-game ids back to parent ids."""
        tp = self.to_parent
        return StateSet(capacity, (tp[s] for s in subset))


def restrict(game: ParityGame, keep: StateSet | Iterable[int]) -> Restriction:
    """Return ``game`` restricted to ``keep``, compacted to ids ``0..len(keep)-1``.

    New ids follow ascending parent ids.  Raises :class:`NonTotalError` naming
    the parent id of a kept state that loses all of its successors.
    """
    if isinstance(keep, StateSet):
        mask = keep._mask
        kept = keep.ids()
    else:
        kept = sorted(set(keep))
        mask = bytearray(game.n)
        for s in kept:
            mask[s] = 1
    if not kept:
        raise InvalidGameError("cannot restrict a game to the empty set")
    from_parent = [-1] * game.n
    for i, s in enumerate(kept):
        from_parent[s] = i
    succ = game.succ
    new_succ = []
    for s in kept:
        ts = [from_parent[t] for t in succ[s] if mask[t]]
        if not ts:
            raise NonTotalError(s, f"state {s} loses all successors in the restriction")
        new_succ.append(ts)
    owner = game.owner
    color = game.color
    names = [game.names[s] for s in kept] if game.names is not None else None
    sub = ParityGame(
        [owner[s] for s in kept],
        [color[s] for s in kept],
        new_succ,
        names,
        min_color=min(color) if color else 1,
    )
    return Restriction(sub, kept, from_parent)
