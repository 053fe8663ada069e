"""Thread pool helpers for row-blocked kernels."""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import TYPE_CHECKING, TypeVar

from ..const import BLOCK_SIZE, THREADS_ENV

if TYPE_CHECKING:
    from collections.abc import Callable

_LOGGER = logging.getLogger(__name__)

T = TypeVar("T")


def get_thread_count() -> int:
    """Return the worker count, capped by GP_THREADS when set.

    Returns
    -------
        int

    """
    available = os.cpu_count() or 1
    value = os.environ.get(THREADS_ENV)
    if not value:
        return available
    try:
        requested = int(value)
    except ValueError:
        _LOGGER.warning("Ignoring %s=%r, not an integer", THREADS_ENV, value)
        return available
    return max(1, min(requested, available))


def row_blocks(n: int, block_size: int = BLOCK_SIZE) -> list[range]:
    """Split range(n) into contiguous blocks."""
    return [range(start, min(start + block_size, n)) for start in range(0, n, block_size)]


def map_row_blocks(
    func: Callable[[range], T],
    n: int,
    *,
    block_size: int = BLOCK_SIZE,
    n_threads: int | None = None,
) -> list[T]:
    """Apply func to each row block of range(n), results in block order.

    Args:
    ----
        func: callable taking a range of row indices
        n: number of rows
        block_size: rows per block
        n_threads: worker count, defaults to get_thread_count()

    Returns:
    -------
        list of per-block results

    """
    blocks = row_blocks(n, block_size)
    workers = min(n_threads or get_thread_count(), len(blocks))
    if workers <= 1:
        return [func(block) for block in blocks]
    _LOGGER.debug("Running %d row blocks on %d threads", len(blocks), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, blocks))
