"""Fan-out of independent jobs over a process pool."""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Sequence

logger = logging.getLogger(__name__)


async def gather_in_pool(
    func: Callable[..., Any],
    jobs: Sequence[tuple],
    workers: int = 1,
) -> list[Any]:
    """
    Run `func(*job)` for every job and return results in job order.

    With `workers > 1` the jobs are dispatched to a ProcessPoolExecutor and
    awaited together; otherwise they run inline one after another.

    Args:
        func: Picklable top-level function
        jobs: Argument tuples, one per call
        workers: Number of worker processes

    Returns:
        List of results aligned with `jobs`

    Raises:
        The first exception raised by any job (all failures are logged)
    """
    if workers <= 1 or len(jobs) <= 1:
        return [func(*job) for job in jobs]

    loop = asyncio.get_running_loop()
    logger.info(f"Dispatching {len(jobs)} jobs to {workers} workers")

    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [loop.run_in_executor(pool, func, *job) for job in jobs]
        results = await asyncio.gather(*futures, return_exceptions=True)

    failures = [
        (index, result) for index, result in enumerate(results)
        if isinstance(result, BaseException)
    ]
    for index, exc in failures:
        logger.error(f"Job {index} failed: {exc!r}")
    if failures:
        raise failures[0][1]

    return list(results)


def run_in_pool(
    func: Callable[..., Any],
    jobs: Sequence[tuple],
    workers: int = 1,
) -> list[Any]:
    """Synchronous wrapper around gather_in_pool."""
    if workers <= 1 or len(jobs) <= 1:
        return [func(*job) for job in jobs]
    return asyncio.run(gather_in_pool(func, jobs, workers))
