import pytest

from wincore.game import (
    InvalidGameError,
    NonTotalError,
    PGSolverSyntaxError,
    ParityGame,
    parse_pgsolver,
    serialize_pgsolver,
)
from wincore.generators import gen_random

from gamegen import fixture, tiny_games


def test_parse_small():
    g = parse_pgsolver("parity 1;\n0 2 1 0,1;\n1 1 0 0;")
    assert g.n == 2
    assert (g.owner, g.color, g.succ) == ([1, 0], [2, 1], [[0, 1], [0]])


def test_zero_priority_shift():
    g = parse_pgsolver("0 0 0 0;")
    assert g.color == [2] and g.color_shift == 2
    g = parse_pgsolver("parity 1; 0 0 0 1; 1 3 1 0;")
    assert g.color == [2, 5]


def test_names_and_header_optional():
    g = parse_pgsolver('0 2 0 1 "a b";\n1 1 1 0;')
    assert g.names == ["a b", None]
    assert parse_pgsolver(serialize_pgsolver(g)) == g


def test_serialize_canonical():
    g = ParityGame([0], [2], [[0]])
    assert serialize_pgsolver(g) == "parity 0;\n0 2 0 0;\n"
    text = serialize_pgsolver(fixture("core_not_dominion.gm"))
    lines = text.splitlines()[1:]
    assert len(lines) == 4
    assert all(line.split()[2] == "1" for line in lines)


def test_whitespace_variants():
    a = parse_pgsolver("parity 1;\n0 2 1 0,1;\n1 1 0 0;\n")
    b = parse_pgsolver("parity 1 ;\t0\n2 1 0 , 1 ;\r\n 1 1 0\n0;")
    c = parse_pgsolver("parity 1;0 2 1 1,0;1 1 0 0;")
    assert a == b == c


@pytest.mark.parametrize(
    "text,exc",
    [
        ("parity 1;\n0 2 1 0,1\n1 1 0 0;", PGSolverSyntaxError),
        ("parity 1;\n0 2 1 0,7;\n1 1 0 0;", InvalidGameError),
        ("parity 1;\n0 2 1 ;\n1 1 0 0;", NonTotalError),
        ("parity 1;\n0 2 1 1;\n0 1 0 0;", PGSolverSyntaxError),
        ("parity 1;\n0 2 3 1;\n1 1 0 0;", PGSolverSyntaxError),
        ("parity 2;\n0 2 1 2;\n2 1 0 0;", PGSolverSyntaxError),
        ("parity 5;\n0 2 1 0;", PGSolverSyntaxError),
        ("0 2 1 0; junk", PGSolverSyntaxError),
    ],
)
def test_malformed(text, exc):
    with pytest.raises(exc):
        parse_pgsolver(text)


def test_dangling_is_not_a_syntax_error():
    with pytest.raises(InvalidGameError) as info:
        parse_pgsolver("0 1 0 4;")
    assert not isinstance(info.value, PGSolverSyntaxError)


def test_syntax_error_position():
    with pytest.raises(PGSolverSyntaxError) as info:
        parse_pgsolver("parity 1;\n0 2 1 0,1\n1 1 0 0;")
    assert info.value.line == 3


def test_add_self_loops():
    g = parse_pgsolver("0 2 1 ;\n", add_self_loops=True)
    assert g.succ == [[0]]


def test_round_trip_random():
    for seed in range(100):
        g = gen_random(30, 7, 1, 4, seed)
        text = serialize_pgsolver(g)
        assert parse_pgsolver(text) == g
        assert serialize_pgsolver(parse_pgsolver(text)) == text
    for g in tiny_games(100, seed=3):
        assert parse_pgsolver(serialize_pgsolver(g)) == g
