"""Concurrent sweep execution.

Runs independent sweep points on a thread pool and hands them back in acceleration order.
"""

from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor, as_completed

from unruh_bench.logging import get_logger
from unruh_bench.models.results import PointStatus, SweepPoint

logger = get_logger(__name__)

PointEvaluator = Callable[[float], SweepPoint]
"""Evaluates the sweep point at one proper acceleration (m/s^2)"""

ProgressCallback = Callable[[SweepPoint, int, int], None]
"""Called as (point, completed, total) after each point finishes"""


class SweepRunner:
    """Evaluates sweep points, optionally concurrently.

    The SweepRunner:
    1. Submits one task per acceleration to a thread pool of `workers` threads
    2. Reports each finished point through the progress callback, in completion order
    3. Returns the points sorted by acceleration, whatever order they finished in

    Every point is computed by a sequential, deterministic pipeline, so results do not depend
    on the number of workers.
    """

    def __init__(self, workers: int = 1):
        """Initialize sweep runner.

        Args:
            workers: Number of points evaluated concurrently
        """
        if workers < 1:
            raise ValueError(f"workers must be at least 1, got {workers}")
        self.workers = workers

    def run(
        self,
        accelerations: Sequence[float],
        evaluate: PointEvaluator,
        progress_callback: ProgressCallback | None = None,
    ) -> list[SweepPoint]:
        """Evaluate every acceleration.

        Args:
            accelerations: Proper accelerations (m/s^2)
            evaluate: Point evaluator; expected to record failures in the point, not raise
            progress_callback: Optional callback called after each point
                             Signature: callback(point, completed, total)

        Returns:
            SweepPoints ordered by acceleration
        """
        total = len(accelerations)
        points: list[SweepPoint] = []

        if self.workers == 1:
            for a in accelerations:
                points.append(self._finish(evaluate(a), len(points) + 1, total, progress_callback))
        else:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                futures = {pool.submit(evaluate, a): a for a in accelerations}
                for future in as_completed(futures):
                    points.append(self._finish(future.result(), len(points) + 1, total, progress_callback))

        return sorted(points, key=lambda p: p.a_proper_m_per_s2)

    def _finish(
        self,
        point: SweepPoint,
        completed: int,
        total: int,
        progress_callback: ProgressCallback | None,
    ) -> SweepPoint:
        self._log_point(point)
        if progress_callback:
            progress_callback(point, completed, total)
        return point

    def _log_point(self, point: SweepPoint) -> None:
        """Log a single sweep point."""
        if point.status is PointStatus.FAILED:
            logger.warning(f"  a={point.a_proper_m_per_s2:.4e}: failed ({point.error_message})")
        else:
            logger.debug(
                f"  a={point.a_proper_m_per_s2:.4e}: N={point.negativity:.6e} "
                f"Omega_det={point.omega_det:.4g} ({point.status.value})"
            )
