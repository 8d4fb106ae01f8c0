"""
Worker pool helpers.

Tasks are mapped with ThreadPoolExecutor.map, which returns results in
submission order, and merged exactly, so the outcome never depends on the
worker count.
"""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, Sequence, TypeVar

LOGGER = logging.getLogger(__name__)

THREADS_ENV = "TAUTCHERN_THREADS"

T = TypeVar('T')
R = TypeVar('R')


def resolve_workers(requested: Optional[int] = None) -> int:
    """
    Worker count: explicit request, then TAUTCHERN_THREADS, then cpu count.
    """
    if requested is not None:
        value = requested
    else:
        raw = os.environ.get(THREADS_ENV)
        if raw:
            try:
                value = int(raw)
            except ValueError as exc:
                raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from exc
        else:
            value = os.cpu_count() or 1
    if value < 1:
        raise ValueError(f"worker count must be positive, got {value}")
    return value


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    """Apply func to every item, in parallel when workers > 1, keeping order."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))


def chunked(items: Sequence[T], parts: int) -> List[Sequence[T]]:
    """Split items into at most parts contiguous slices."""
    parts = max(1, min(parts, len(items)))
    size, extra = divmod(len(items), parts)
    slices, start = [], 0
    for index in range(parts):
        stop = start + size + (1 if index < extra else 0)
        slices.append(items[start:stop])
        start = stop
    return [s for s in slices if len(s)]
