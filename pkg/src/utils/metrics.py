"""Solve metrics for the current process.

Lightweight and dependency-free: a singleton-style SolveMetrics accumulates
one record per eigensolve (backend, dimension, wall time) and exposes a
summary that the command line front end logs at DEBUG level.

Usage:
    from src.utils.metrics import solve_metrics
    solve_metrics.record_solve(backend="tridiagonal", dimension=6, elapsed_ms=0.4)
    summary = solve_metrics.session_summary()
"""
from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field
from typing import Dict, Optional

from .config import settings

_lock = threading.Lock()


@dataclass
class SolveRecord:
    backend: str
    dimension: int
    elapsed_ms: float
    batch: int = 1
    timestamp: float = field(default_factory=time.time)


class SolveMetrics:
    """Aggregates eigensolver usage for the current process.

    Safe to share across the worker threads of a grid sweep.
    """

    def __init__(self) -> None:
        self._records: list[SolveRecord] = []

    def record_solve(self, backend: str, dimension: int, elapsed_ms: float, batch: int = 1) -> None:
        with _lock:
            self._records.append(SolveRecord(backend, dimension, elapsed_ms, batch))

    def session_summary(self) -> Dict:
        with _lock:
            calls = len(self._records)
            matrices = sum(r.batch for r in self._records)
            total_ms = sum(r.elapsed_ms for r in self._records)
            largest = max((r.dimension for r in self._records), default=0)
        return {
            "solver_calls": calls,
            "matrices_solved": matrices,
            "largest_dimension": largest,
            "total_ms": round(total_ms, 3),
            "avg_ms_per_matrix": round(total_ms / matrices, 4) if matrices else 0.0,
            "backend": settings.eigensolver_backend,
        }

    def last_solve(self) -> Optional[Dict]:
        with _lock:
            if not self._records:
                return None
            record = self._records[-1]
        return {
            "backend": record.backend,
            "dimension": record.dimension,
            "elapsed_ms": record.elapsed_ms,
            "batch": record.batch,
        }

    def reset(self) -> None:
        with _lock:
            self._records.clear()


# Global singleton
solve_metrics = SolveMetrics()

__all__ = ["solve_metrics", "SolveMetrics", "SolveRecord"]
