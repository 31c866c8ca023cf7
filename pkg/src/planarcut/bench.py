"""Timing harness for the cut pipeline with embeddings computed ahead of time."""

from __future__ import annotations

import gc
import statistics
import time
from collections.abc import Iterable
from dataclasses import dataclass

from .generators import GeneratorSpec, generate
from .mindisccut import min_disc_cut


@dataclass(frozen=True)
class BenchRow:
    n: int
    ms: float
    ratio: float | None


def bench(
    sizes: Iterable[int],
    family: str = "carved",
    faces: int = 2,
    reps: int = 5,
    seed: int = 0,
    instances: int = 3,
    order: str = "bfs",
    spread: bool = True,
) -> list[BenchRow]:
    """Median wall time of :func:`min_disc_cut` per size, with doubling ratios.

    For each size, ``instances`` graphs (seeds ``seed``, ``seed + 1``, ...)
    are built with their rotations before any timing starts, so only the
    post-embedding pipeline is measured. Each is timed ``reps`` times; the
    size's time is the median over instances of the per-instance medians.
    ``ratio`` is this size's time over the previous size's, ``None`` first.

    By default carved faces are spread out (see :func:`carve_large_faces`) so
    the path search crosses the whole graph, and vertices are numbered
    breadth-first; both keep the work per instance comparable across sizes.
    """
    if reps < 1 or instances < 1:
        raise ValueError("reps and instances must be positive")
    rows: list[BenchRow] = []
    prev = None
    for n in sizes:
        per_instance = []
        for i in range(instances):
            G, rot = generate(GeneratorSpec(family, n=n, faces=faces, seed=seed + i, order=order, spread=spread))
            times = []
            for _ in range(reps):
                gc.collect()
                t0 = time.perf_counter()
                min_disc_cut(G, rot, verify=False)
                times.append(time.perf_counter() - t0)
            per_instance.append(statistics.median(times))
            del G, rot
        ms = 1000 * statistics.median(per_instance)
        rows.append(BenchRow(n, ms, None if prev is None else ms / prev))
        prev = ms
    return rows


def format_csv(rows: list[BenchRow]) -> str:
    """CSV with header ``n,ms,ratio``; the ratio column is dropped for a single size."""
    if len(rows) == 1:
        return f"n,ms\n{rows[0].n},{rows[0].ms:.3f}\n"
    lines = ["n,ms,ratio"]
    for r in rows:
        lines.append(f"{r.n},{r.ms:.3f}," + ("" if r.ratio is None else f"{r.ratio:.3f}"))
    return "\n".join(lines) + "\n"
