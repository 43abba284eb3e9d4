"""Reading and writing games in the PGSolver text format.

Grammar::

    game   := [ "parity" INT ";" ] { line }
    line   := INT INT INT INT { "," INT } [ STRING ] ";"

The four leading integers are id, priority, owner and the first successor.
Whitespace (including newlines) may appear between any two tokens.
"""

from __future__ import annotations

import re
from typing import Iterator

from .model import InvalidGameError, NonTotalError, ParityGame


class PGSolverSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<word>[A-Za-z_]\w*)
  | (?P<string>"[^"]*")
  | (?P<punct>[,;])
  """,
    re.VERBOSE,
)


def _tokens(text: str) -> Iterator[tuple[str, str, int, int]]:
    pos = 0
    line = 1
    line_start = 0
    while pos < len(text):
        mo = _TOKEN.match(text, pos)
        col = pos - line_start + 1
        if mo is None:
            raise PGSolverSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = mo.lastgroup
        value = mo.group()
        if kind != "ws":
            yield kind, value, line, col
        nl = value.count("\n")
        if nl:
            line += nl
            line_start = mo.start() + value.rfind("\n") + 1
        pos = mo.end()


def parse_pgsolver(text: str, *, add_self_loops: bool = False) -> ParityGame:
    """Parse PGSolver text into a validated :class:`ParityGame`.

    Priorities of 0 are allowed in the format but not in the model, so when
    any state has priority 0 every priority is raised by 2; the shift is kept
    in ``game.color_shift``.  Duplicate successors are merged.  States listed
    without successors raise :class:`NonTotalError` unless ``add_self_loops``
    is set, in which case they get a self-loop.
    """
    toks = list(_tokens(text))
    pos = 0
    header: int | None = None
    end_line, end_col = _end_position(text)

    def peek():
        return toks[pos] if pos < len(toks) else None

    def expect(kind: str, what: str, value: str | None = None):
        nonlocal pos
        tok = peek()
        if tok is None:
            raise PGSolverSyntaxError(f"unexpected end of input, expected {what}", end_line, end_col)
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise PGSolverSyntaxError(f"expected {what}, found {tok[1]!r}", tok[2], tok[3])
        pos += 1
        return tok

    tok = peek()
    if tok is not None and tok[0] == "word":
        if tok[1] != "parity":
            raise PGSolverSyntaxError(f"unknown keyword {tok[1]!r}", tok[2], tok[3])
        pos += 1
        header = int(expect("int", "maximal state id")[1])
        expect("punct", "';'", ";")

    rows: dict[int, tuple[int, int, list[int], str | None]] = {}
    where: dict[int, tuple[int, int]] = {}
    while peek() is not None:
        id_tok = expect("int", "state id")
        sid = int(id_tok[1])
        if sid in rows:
            raise PGSolverSyntaxError(f"duplicate state id {sid}", id_tok[2], id_tok[3])
        prio = int(expect("int", "priority")[1])
        own_tok = expect("int", "owner")
        owner = int(own_tok[1])
        if owner not in (0, 1):
            raise PGSolverSyntaxError(f"owner must be 0 or 1, found {owner}", own_tok[2], own_tok[3])
        succ: list[int] = []
        name = None
        tok = peek()
        if tok is not None and tok[0] == "int":
            succ.append(int(tok[1]))
            pos += 1
            while (tok := peek()) is not None and tok[1] == ",":
                pos += 1
                succ.append(int(expect("int", "successor id")[1]))
        if (tok := peek()) is not None and tok[0] == "string":
            name = tok[1][1:-1]
            pos += 1
        expect("punct", "';'", ";")
        rows[sid] = (prio, owner, succ, name)
        where[sid] = (id_tok[2], id_tok[3])

    n = len(rows)
    if n == 0:
        raise PGSolverSyntaxError("game has no states", end_line, end_col)
    ids = sorted(rows)
    if ids[-1] != n - 1:
        missing = next(i for i in range(n) if i not in rows)
        raise PGSolverSyntaxError(f"state ids are not consecutive: {missing} is missing", end_line, end_col)
    if header is not None and header != n - 1:
        raise PGSolverSyntaxError(f"header declares maximal id {header} but the last id is {n - 1}", 1, 1)

    owner_l, color_l, succ_l, names = [], [], [], []
    for sid in range(n):
        prio, owner, succ, name = rows[sid]
        for t in succ:
            if t >= n:
                line, col = where[sid]
                raise InvalidGameError(f"line {line}: state {sid} has dangling successor {t}")
        if not succ:
            if not add_self_loops:
                line, _ = where[sid]
                raise NonTotalError(sid, f"line {line}: state {sid} has an empty successor list")
            succ = [sid]
        owner_l.append(owner)
        color_l.append(prio)
        succ_l.append(succ)
        names.append(name)
    shift = 2 if min(color_l) == 0 else 0
    if shift:
        color_l = [c + shift for c in color_l]
    has_names = any(nm is not None for nm in names)
    return ParityGame(owner_l, color_l, succ_l, names if has_names else None, color_shift=shift)


def _end_position(text: str) -> tuple[int, int]:
    line = text.count("\n") + 1
    return line, len(text) - (text.rfind("\n") + 1) + 1


def serialize_pgsolver(game: ParityGame) -> str:
    """Canonical PGSolver text: header, states ascending, successors ascending."""
    out = [f"parity {game.n - 1};\n"]
    names = game.names
    for s in range(game.n):
        line = f"{s} {game.color[s]} {game.owner[s]} {','.join(map(str, game.succ[s]))}"
        if names is not None and names[s] is not None:
            line += f' "{names[s]}"'
        out.append(line + ";\n")
    return "".join(out)


def read_game(path: str, *, add_self_loops: bool = False) -> ParityGame:
    with open(path, encoding="utf-8") as fh:
        return parse_pgsolver(fh.read(), add_self_loops=add_self_loops)


def write_game(game: ParityGame, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_pgsolver(game))
