"""Benchmark harness: run solvers over game families and record CSV rows.

Every (instance, algorithm, repetition) cell gives one :class:`BenchRecord`.
Game generation is not timed.  Timeouts are cooperative: solvers poll a
monotonic deadline, so a cell that runs out of time stops at the next check
and is recorded with status ``timeout``.
"""

from __future__ import annotations

import csv
import logging
import os
import statistics
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from typing import Callable, Iterable, Sequence

from .core import partial_solve, solve_via_core
from .deadline import SolverTimeout
from .game.model import ParityGame
from .generators import FAMILIES
from .solvers import Regions, zielonka_solve

log = logging.getLogger(__name__)

CSV_HEADER = ("family", "params", "n", "m", "d", "algo", "seed", "time_ms", "solved", "unknown", "w0", "w1", "status")

ALGORITHMS: dict[str, Callable[..., Regions]] = {
    "wc-partial": lambda g, deadline: partial_solve(g, deadline=deadline),
    "wc-exact": lambda g, deadline: solve_via_core(g, deadline=deadline),
    "zielonka": lambda g, deadline: zielonka_solve(g, deadline),
}


@dataclass(frozen=True)
class BenchRecord:
    family: str
    params: str
    n: int
    m: int
    d: int
    algo: str
    seed: int | None
    time_ms: float
    solved: int
    unknown: int
    w0: int
    w1: int
    status: str

    def __post_init__(self):
        if self.solved + self.unknown != self.n:
            raise ValueError(f"solved + unknown must equal n ({self.solved} + {self.unknown} != {self.n})")
        if self.time_ms < 0:
            raise ValueError("negative time")
        if self.status not in ("ok", "timeout", "error"):
            raise ValueError(f"bad status {self.status!r}")

    def row(self) -> list[str]:
        out = []
        for key, value in asdict(self).items():
            if value is None:
                out.append("")
            elif key == "time_ms":
                out.append(repr(float(value)))
            else:
                out.append(str(value))
        return out

    @classmethod
    def from_row(cls, row: dict[str, str]) -> "BenchRecord":
        kw: dict = {}
        for f in fields(cls):
            raw = row[f.name]
            if f.name in ("family", "params", "algo", "status"):
                kw[f.name] = raw
            elif f.name == "time_ms":
                kw[f.name] = float(raw)
            elif f.name == "seed":
                kw[f.name] = int(raw) if raw != "" else None
            else:
                kw[f.name] = int(raw)
        return cls(**kw)


@dataclass(frozen=True)
class Instance:
    """One game to benchmark: a family name, its parameters and (random only) a seed."""

    family: str
    params: tuple[tuple[str, int], ...]
    seed: int | None = None

    def params_text(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.params)

    def build(self) -> ParityGame:
        try:
            gen = FAMILIES[self.family]
        except KeyError:
            raise ValueError(f"unknown family {self.family!r}") from None
        kw = dict(self.params)
        if self.family == "random":
            kw["seed"] = 0 if self.seed is None else self.seed
        return gen(**kw)


def make_instances(family: str, grid: dict[str, Sequence[int]], seeds: Iterable[int] | None = None) -> list[Instance]:
    """Cartesian product of the parameter grid; random instances are repeated per seed."""
    keys = list(grid)
    combos: list[tuple[tuple[str, int], ...]] = [()]
    for key in keys:
        combos = [c + ((key, int(v)),) for c in combos for v in grid[key]]
    if family == "random":
        seeds = list(seeds) if seeds is not None else [0]
        return [Instance(family, c, s) for c in combos for s in seeds]
    return [Instance(family, c) for c in combos]


def _run_cell(inst: Instance, algos: Sequence[str], timeout: float | None, repetitions: int) -> list[BenchRecord]:
    game = inst.build()
    n, m, d = game.n, game.m, game.d
    out = []
    for algo in algos:
        solve = ALGORITHMS[algo]
        for _ in range(repetitions):
            start = time.monotonic()
            deadline = start + timeout if timeout is not None else None
            try:
                regions = solve(game, deadline)
                status = "ok"
            except SolverTimeout:
                regions, status = None, "timeout"
            except Exception as exc:  # recorded, the sweep goes on
                log.warning("%s %s on %s: %s", algo, inst.params_text(), inst.family, exc)
                regions, status = None, "error"
            elapsed = (time.monotonic() - start) * 1000.0
            if regions is None:
                w0 = w1 = 0
            else:
                w0, w1 = len(regions.win0), len(regions.win1)
            out.append(
                BenchRecord(inst.family, inst.params_text(), n, m, d, algo, inst.seed,
                            elapsed, w0 + w1, n - w0 - w1, w0, w1, status)
            )
    return out


def write_csv(records: Iterable[BenchRecord], path: str) -> None:
    """Write records atomically: a temporary file in the same directory is renamed over ``path``."""
    folder = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".bench-", suffix=".csv", dir=folder)
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(CSV_HEADER)
            for r in records:
                w.writerow(r.row())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_csv(path: str) -> list[BenchRecord]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != CSV_HEADER:
            raise ValueError(f"unexpected CSV header {reader.fieldnames}")
        return [BenchRecord.from_row(row) for row in reader]


def run_bench(
    instances: Sequence[Instance],
    algos: Sequence[str],
    timeout: float | None = None,
    repetitions: int = 1,
    csv_path: str | None = None,
    workers: int = 1,
) -> list[BenchRecord]:
    """Run every algorithm on every instance ``repetitions`` times.

    With ``workers > 1`` instances are spread over a process pool; records
    still come back in instance order and the CSV is written once, by the
    caller's process.
    """
    bad = [a for a in algos if a not in ALGORITHMS]
    if bad:
        raise ValueError(f"unknown algorithms {bad}; choose from {sorted(ALGORITHMS)}")
    if repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    if csv_path is not None:
        # fail before doing any work if the target folder is not writable
        folder = os.path.dirname(os.path.abspath(csv_path))
        if not os.path.isdir(folder) or not os.access(folder, os.W_OK):
            raise OSError(f"cannot write to {folder}")
    records: list[BenchRecord] = []
    if workers > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_cell, inst, tuple(algos), timeout, repetitions) for inst in instances]
            for fut in futures:
                records.extend(fut.result())
    else:
        for inst in instances:
            records.extend(_run_cell(inst, algos, timeout, repetitions))
    if csv_path is not None:
        write_csv(records, csv_path)
    return records


def median_times(records: Iterable[BenchRecord]) -> dict[tuple[str, str, str], float]:
    """Median ``time_ms`` per (family, params, algo) over successful runs."""
    groups: dict[tuple[str, str, str], list[float]] = {}
    for r in records:
        if r.status == "ok":
            groups.setdefault((r.family, r.params, r.algo), []).append(r.time_ms)
    return {key: statistics.median(ts) for key, ts in groups.items()}


def incomplete_rate(records: Iterable[BenchRecord], algo: str = "wc-partial") -> tuple[int, int]:
    """(games not completely solved, games run) among ok records of ``algo``."""
    done = [r for r in records if r.algo == algo and r.status == "ok"]
    return sum(1 for r in done if r.unknown), len(done)
