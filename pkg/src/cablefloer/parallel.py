"""Order-preserving fan-out controlled by ``CABLEFLOER_THREADS``."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

ENV_VAR = "CABLEFLOER_THREADS"


def worker_count(threads: int | None = None) -> int:
    if threads is None:
        raw = os.environ.get(ENV_VAR, "1")
        try:
            threads = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be an integer >= 1, got {raw!r}") from None
    if threads < 1:
        raise ValueError(f"{ENV_VAR} must be >= 1, got {threads}")
    return threads


def ordered_map(fn: Callable[[T], R], items: Iterable[T], threads: int | None = None) -> list[R]:
    """``[fn(x) for x in items]``, possibly on a process pool; result order never changes."""
    items = list(items)
    workers = worker_count(threads)
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))
