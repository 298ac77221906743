"""
Worker pool service.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

logger = logging.getLogger(__name__)

JobT = TypeVar("JobT")
ResultT = TypeVar("ResultT")


class WorkerPool:
    """
    Ordered fan-out of independent jobs.

    Results come back in job order whatever the pool size; one worker runs
    in-process. ``fn`` and the jobs must be picklable for ``workers > 1``.
    """

    def __init__(self, workers: int = 1) -> None:
        if workers < 1:
            raise ValueError(f"workers must be >= 1, got {workers}")
        self.workers = workers

    def map(self, fn: Callable[[JobT], ResultT], jobs: Sequence[JobT]) -> list[ResultT]:
        workers = min(self.workers, len(jobs))
        if workers <= 1:
            return [fn(job) for job in jobs]
        logger.debug("Dispatching %d jobs to %d processes", len(jobs), workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, jobs))
