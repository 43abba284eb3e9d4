"""Cooperative time limits checked at solver iteration boundaries."""

from __future__ import annotations

import time


class SolverTimeout(Exception):
    pass


def check(deadline: float | None) -> None:
    """Raise :class:`SolverTimeout` once ``time.monotonic()`` passes ``deadline``."""
    if deadline is not None and time.monotonic() > deadline:
        raise SolverTimeout("deadline exceeded")
