"""Acceptance suite: twelve criteria, each reporting one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` (the lines appear in
the terminal summary) or ``python tests/test_acceptance.py``.
"""

import os
import random
import time

import pytest

from wincore.cli import main as cli_main
from wincore.core import (
    b_step_naive,
    b_step_thresholds,
    compute_B,
    edge_threshold,
    partial_solve,
    product_attractor,
    threshold_attractor,
    winning_core_exact,
)
from wincore.game import (
    attractor,
    parse_pgsolver,
    positive_attractor,
    restrict,
    reward_less,
    serialize_pgsolver,
)
from wincore.generators import (
    gen_clique,
    gen_jurdzinski,
    gen_ladder,
    gen_mc_ladder,
    gen_random,
    gen_recursive_ladder,
)
from wincore.solvers import brute_force_regions, zielonka_solve

from gamegen import FIXTURES, fixture, tiny_game

RESULTS = {}


def report(num, ok, detail):
    line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[num] = line
    print(line)
    assert ok, line


# 1


def test_c01_oracle_equivalence():
    start = time.monotonic()
    bad = 0
    for i in range(1000):
        g = tiny_game(10_000 + i, n_max=7, d_max=4, deg_max=3)
        if not zielonka_solve(g).same_partition(brute_force_regions(g)):
            bad += 1
    took = time.monotonic() - start
    report(1, bad == 0 and took < 60, f"zielonka vs brute force on 1000 games: {bad} mismatches, {took:.1f}s")


# 2, 3


def test_c02_core_not_dominion():
    g = fixture("core_not_dominion.gm")
    trace = []
    compute_B(g, 0, trace=trace)
    seq = [t.ids() for t in trace]
    core = winning_core_exact(g, 0).ids()
    r = partial_solve(g)
    ok = seq == [[0, 1, 2, 3], [0, 1, 3], [0, 3], [3], []] and core == [0, 3] and r.unknown == g.states()
    report(2, ok, f"trace {seq}, core {core}, unknown {r.unknown.ids()}")


def test_c03_core_exact():
    g = fixture("core_exact.gm")
    b = compute_B(g, 0).ids()
    a = winning_core_exact(g, 0).ids()
    r = partial_solve(g)
    ok = b == a == [0, 1, 3] and r.is_complete and r.win0 == g.states()
    report(3, ok, f"B_0 {b}, A_0 {a}, partial win0 {r.win0.ids()}")


# 4, 5


@pytest.fixture(scope="module")
def chain_data():
    start = time.monotonic()
    chain_bad = empty_bad = 0
    for i in range(2000):
        g = tiny_game(20_000 + i, n_max=40, d_max=6, deg_max=3)
        z = zielonka_solve(g)
        for j in (0, 1):
            b = compute_B(g, j)
            a = winning_core_exact(g, j)
            w = z.win(j)
            if not (b <= a <= w):
                chain_bad += 1
            if (not a) != (not w):
                empty_bad += 1
    return chain_bad, empty_bad, time.monotonic() - start


def test_c04_containment(chain_data):
    bad, _, took = chain_data
    report(4, bad == 0 and took < 300, f"B <= A <= W on 2000 games x 2 players: {bad} violations, {took:.1f}s")


def test_c05_emptiness(chain_data):
    _, bad, _ = chain_data
    report(5, bad == 0, f"A_j empty iff W_j empty on 2000 games x 2 players: {bad} violations")


# 6


def test_c06_naive_vs_thresholds():
    start = time.monotonic()
    bad = 0
    steps = 0
    for i in range(500):
        g = tiny_game(30_000 + i, n_max=50, d_max=8, deg_max=3)
        for j in (0, 1):
            cur = g.states()
            while True:
                prod, attr = product_attractor(g, j, cur)
                tmap = threshold_attractor(g, j, cur)
                for v in range(g.d + 1):
                    want = [s for s in range(g.n) if attr[prod.index(s, v)]]
                    if tmap.slice(v).ids() != want:
                        bad += 1
                nxt = b_step_thresholds(g, j, cur)
                if nxt != b_step_naive(g, j, cur):
                    bad += 1
                steps += 1
                if nxt == cur:
                    break
                cur = nxt
    took = time.monotonic() - start
    report(6, bad == 0 and took < 300, f"{steps} iterates, all value slices: {bad} violations, {took:.1f}s")


# 7


def test_c07_edge_threshold():
    bad = cases = 0
    for d in range(1, 13):
        vals = range(d + 1)
        for j in (0, 1):
            for c in range(1, d + 1):
                for tk in list(vals) + [None]:
                    cases += 1
                    got = edge_threshold(j, c, tk, d)
                    sols = set() if tk is None else {v for v in vals if not reward_less(j, max(v, c), tk)}
                    up = set() if got is None else {v for v in vals if not reward_less(j, v, got)}
                    if sols != up:
                        bad += 1
    report(7, bad == 0, f"{cases} (j, d, color, threshold) cases: {bad} wrong")


# 8


def test_c08_buchi():
    start = time.monotonic()
    rng = random.Random(8)
    incomplete = wrong = 0
    for seed in range(1000):
        n = rng.randint(2, 500)
        g = gen_random(n, 2, 1, min(5, n - 1), seed)
        r = partial_solve(g)
        z = zielonka_solve(g)
        incomplete += not r.is_complete
        wrong += r.win0 != z.win0 or r.win1 != z.win1
    took = time.monotonic() - start
    report(8, incomplete == 0 and wrong == 0 and took < 120,
           f"1000 Buchi games: {incomplete} incomplete, {wrong} differ from Zielonka, {took:.1f}s")


# 9


def test_c09_random_completeness():
    start = time.monotonic()
    parts = []
    ok = True
    for d in (5, 50):
        miss = sum(1 for seed in range(2000) if partial_solve(gen_random(500, d, 1, 5, seed)).unknown)
        parts.append(f"d={d} (1,5): {miss}/2000")
        ok &= miss <= 20
    for d in (5, 50):
        miss = sum(1 for seed in range(1000) if partial_solve(gen_random(500, d, 5, 10, seed)).unknown)
        parts.append(f"d={d} (5,10): {miss}/1000")
        ok &= miss == 0
    took = time.monotonic() - start
    report(9, ok and took < 1800, "not completely solved: " + ", ".join(parts) + f", {took:.0f}s")


# 10


def test_c10_recursive_propositions():
    need = 500
    checked = [0, 0]
    bad = 0
    i = 0
    while min(checked) < need and i < 20_000:
        g = tiny_game(40_000 + i, n_max=7, d_max=4, deg_max=3)
        i += 1
        k = g.d % 2
        a_other = winning_core_exact(g, 1 - k)
        rest = positive_attractor(g, k, g.with_color(g.d)).complement()
        if rest and checked[0] < need:
            sub = restrict(g, rest)
            bad += sub.lift(winning_core_exact(sub.game, 1 - k), g.n) != a_other
            checked[0] += 1
        rest = attractor(g, 1 - k, a_other).complement()
        if rest and checked[1] < need:
            sub = restrict(g, rest)
            bad += sub.lift(winning_core_exact(sub.game, k), g.n) != winning_core_exact(g, k)
            checked[1] += 1
    ok = bad == 0 and min(checked) >= need
    report(10, ok, f"A_(1-k)(G) = A_(1-k)(G') on {checked[0]} games, A_k(G) = A_k(G'') on {checked[1]}: {bad} violations")


# 11


def test_c11_scale(monkeypatch):
    g = gen_ladder(5 * 10**5)
    start = time.monotonic()
    r = partial_solve(g)
    t_ladder = time.monotonic() - start

    # the threshold path must never build the explicit product
    import wincore.core.product as product

    def refuse(*a, **kw):
        raise AssertionError("explicit product built")

    monkeypatch.setattr(product.ProductGame, "__init__", refuse)
    big = gen_random(10**4, 10**4, 1, 5, 11)
    times = []
    for j in (0, 1):
        start = time.monotonic()
        compute_B(big, j, mode="thresholds")
        times.append(time.monotonic() - start)
    ok = r.is_complete and g.n == 10**6 and t_ladder <= 60 and max(times) <= 10
    report(11, ok, f"ladder 10^6 states in {t_ladder:.1f}s (complete={r.is_complete}); "
                   f"n=d=10^4 compute_B {times[0]:.1f}s / {times[1]:.1f}s")


# 12


MALFORMED_CODES = {
    "missing_semicolon.gm": 2,
    "dangling_id.gm": 3,
    "empty_successors.gm": 3,
    "duplicate_id.gm": 2,
    "bad_owner.gm": 2,
    "id_gap.gm": 2,
    "zero_priority.gm": 0,
    "whitespace.gm": 0,
}


def test_c12_parser(capsys):
    games = [gen_clique(9), gen_ladder(7), gen_mc_ladder(6), gen_recursive_ladder(5), gen_jurdzinski(4, 3)]
    games += [gen_random(60, 9, 1, 6, s) for s in range(100)]
    rt_bad = 0
    for g in games:
        text = serialize_pgsolver(g)
        back = parse_pgsolver(text)
        rt_bad += back != g or serialize_pgsolver(back) != text
    code_bad = []
    for name, want in MALFORMED_CODES.items():
        got = cli_main(["solve", os.path.join(FIXTURES, "malformed", name)])
        if got != want:
            code_bad.append(f"{name}: {got} != {want}")
    capsys.readouterr()
    zero = parse_pgsolver(open(os.path.join(FIXTURES, "malformed", "zero_priority.gm")).read())
    ok = rt_bad == 0 and not code_bad and zero.color == [2, 3] and zero.color_shift == 2
    report(12, ok, f"{len(games)} round trips ({rt_bad} bad), 8 malformed inputs ({len(code_bad)} wrong exit codes)")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
