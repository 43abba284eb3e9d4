"""Solver results and their text form."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..game.model import StateSet


@dataclass(frozen=True)
class MemorylessStrategy:
    """Positional strategy of ``owner``: state -> chosen successor."""

    owner: int
    choice: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, s: int) -> int:
        return self.choice[s]

    def __contains__(self, s: int) -> bool:
        return s in self.choice


@dataclass(frozen=True)
class Regions:
    win0: StateSet
    win1: StateSet
    unknown: StateSet
    strategy0: MemorylessStrategy | None = None
    strategy1: MemorylessStrategy | None = None

    def __post_init__(self):
        n = self.win0.capacity
        if len(self.win0) + len(self.win1) + len(self.unknown) != n or (self.win0 | self.win1 | self.unknown) != StateSet.full(n):
            raise ValueError("regions must partition the state space")

    @classmethod
    def complete(cls, win0: StateSet, win1: StateSet, strategy0=None, strategy1=None) -> Regions:
        return cls(win0, win1, StateSet.empty(win0.capacity), strategy0, strategy1)

    @property
    def n(self) -> int:
        return self.win0.capacity

    @property
    def is_complete(self) -> bool:
        return not self.unknown

    def win(self, j: int) -> StateSet:
        return self.win0 if j == 0 else self.win1

    def strategy(self, j: int) -> MemorylessStrategy | None:
        return self.strategy0 if j == 0 else self.strategy1

    def same_partition(self, other: Regions) -> bool:
        return self.win0 == other.win0 and self.win1 == other.win1 and self.unknown == other.unknown

    def to_text(self, *, with_unknown: bool | None = None) -> str:
        """``W0: ids`` / ``W1: ids`` lines, plus ``U: ids`` for partial results."""
        if with_unknown is None:
            with_unknown = bool(self.unknown)
        lines = [_line("W0", self.win0), _line("W1", self.win1)]
        if with_unknown:
            lines.append(_line("U", self.unknown))
        return "\n".join(lines) + "\n"


def _line(label: str, states: StateSet) -> str:
    return f"{label}: " + " ".join(map(str, states.ids()))


def parse_regions(text: str, n: int) -> tuple[Regions, bool]:
    """Parse the text form; returns the regions and whether a ``U:`` line was present.

    States missing from all lines count as unknown.  Comment lines (``#``)
    and ``B^i = ...`` trace lines are skipped, so ``solve --trace`` output can
    be fed back in.
    """
    sets: dict[str, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("B^"):
            continue
        label, sep, rest = line.partition(":")
        label = label.strip()
        if not sep or label not in ("W0", "W1", "U"):
            raise ValueError(f"line {lineno}: expected 'W0:', 'W1:' or 'U:'")
        if label in sets:
            raise ValueError(f"line {lineno}: duplicate {label} line")
        try:
            ids = [int(tok) for tok in rest.split()]
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        bad = [i for i in ids if not 0 <= i < n]
        if bad:
            raise ValueError(f"line {lineno}: state {bad[0]} out of range")
        sets[label] = ids
    if "W0" not in sets or "W1" not in sets:
        raise ValueError("regions need both a W0 and a W1 line")
    win0 = StateSet(n, sets["W0"])
    win1 = StateSet(n, sets["W1"])
    if win0 & win1:
        raise ValueError(f"states in both W0 and W1: {(win0 & win1).ids()}")
    unknown = (win0 | win1).complement()
    if "U" in sets and StateSet(n, sets["U"]) != unknown:
        raise ValueError("U line does not match the states outside W0 and W1")
    return Regions(win0, win1, unknown), "U" in sets
