"""Worker policy for sweep parallelism.

BETTI_CONE_THREADS picks the worker count: unset or 1 means serial, 0 means
one worker per CPU, anything else is taken literally. Results always come
back in input order, so the worker count never changes any output.
"""

import os
from concurrent.futures import ProcessPoolExecutor

ENV_VAR = "BETTI_CONE_THREADS"


def worker_count() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        return 1
    if n == 0:
        return os.cpu_count() or 1
    return max(1, n)


def map_ordered(fn, items):
    """fn over items, in order; fn must be picklable when workers > 1."""
    items = list(items)
    n = worker_count()
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (4 * n))
    with ProcessPoolExecutor(max_workers=min(n, len(items))) as pool:
        return list(pool.map(fn, items, chunksize=chunk))
