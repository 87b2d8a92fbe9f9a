"""Exhaustive counts of strongly extensive and Cantor digraphs on [n].

Digraphs are enumerated in counter order: arrow (u, v) is present when
bit (u-1)*n + (v-1) of the counter is set, for counters 0 to 2^(n*n)-1.
All counts are over labeled digraphs.  Work splits into contiguous
counter ranges, one per job, whose partial counts are summed; the
result does not depend on the number of jobs.
"""
from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass
from typing import Iterator

from .analysis import DigraphAnalysis, is_strongly_extensive
from .digraphs import Digraph

DEFAULT_MAX_N = 4
HARD_MAX_N = 5


class GuardExceeded(ValueError):
    pass


@dataclass(frozen=True)
class CensusRow:
    n: int
    total: int
    strongly_extensive: int
    cantor: int
    elapsed_ms: float


def _check_n(n: int, max_n: int) -> None:
    limit = min(max_n, HARD_MAX_N)
    if not (1 <= n <= limit):
        raise GuardExceeded(f"n={n} is outside [1, {limit}] (raise max_n up to {HARD_MAX_N})")


def digraph_from_counter(n: int, counter: int) -> Digraph:
    arrows = frozenset(
        (u, v)
        for u in range(1, n + 1)
        for v in range(1, n + 1)
        if counter >> ((u - 1) * n + (v - 1)) & 1
    )
    return Digraph(n, arrows)


def enumerate_digraphs(n: int, *, max_n: int = DEFAULT_MAX_N) -> Iterator[Digraph]:
    """All 2^(n*n) labeled digraphs on [n], in counter order."""
    _check_n(n, max_n)
    for counter in range(2 ** (n * n)):
        yield digraph_from_counter(n, counter)


def _count_range(task: tuple[int, int, int]) -> tuple[int, int]:
    n, start, stop = task
    strongly_extensive = 0
    cantor = 0
    for counter in range(start, stop):
        digraph = digraph_from_counter(n, counter)
        if is_strongly_extensive(digraph):
            strongly_extensive += 1
        if DigraphAnalysis(digraph).is_cantor():
            cantor += 1
    return strongly_extensive, cantor


def census(n: int, jobs: int = 1, *, max_n: int = DEFAULT_MAX_N) -> CensusRow:
    """Count strongly extensive and Cantor digraphs on [n]."""
    _check_n(n, max_n)
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    total = 2 ** (n * n)
    bounds = [total * i // jobs for i in range(jobs + 1)]
    tasks = [(n, bounds[i], bounds[i + 1]) for i in range(jobs)]
    start = time.perf_counter()
    if jobs == 1:
        parts = [_count_range(tasks[0])]
    else:
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(_count_range, tasks)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    strongly_extensive = sum(p[0] for p in parts)
    cantor = sum(p[1] for p in parts)
    assert strongly_extensive <= cantor <= total
    return CensusRow(n, total, strongly_extensive, cantor, elapsed_ms)


def non_cantor_digraphs(n: int, *, max_n: int = DEFAULT_MAX_N) -> Iterator[tuple[int, Digraph]]:
    """The non-Cantor digraphs on [n] with their counters, in counter order."""
    _check_n(n, max_n)
    for counter in range(2 ** (n * n)):
        digraph = digraph_from_counter(n, counter)
        if not DigraphAnalysis(digraph).is_cantor():
            yield counter, digraph


def format_row(row: CensusRow) -> str:
    return "\t".join(
        str(x)
        for x in (row.n, row.total, row.strongly_extensive, row.cantor, round(row.elapsed_ms))
    )
