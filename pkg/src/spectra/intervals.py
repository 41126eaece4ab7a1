"""Closed-interval set arithmetic used for band unions, refinements and gaps.

A union is a sorted list of disjoint closed intervals ``(lo, hi)``; points
are intervals with ``lo == hi``. Gaps are open intervals and are returned as
``(lo, hi)`` pairs with the understanding that the endpoints are excluded.
"""
from __future__ import annotations

from typing import Iterable, Sequence

Interval = tuple[float, float]


def merge_intervals(intervals: Iterable[Sequence[float]], tol: float) -> list[Interval]:
    """Sort and merge intervals that overlap or lie within ``tol`` of each other."""
    ordered = sorted((float(lo), float(hi)) for lo, hi in intervals)
    merged: list[list[float]] = []
    for lo, hi in ordered:
        if hi < lo:
            raise ValueError(f"interval ({lo}, {hi}) is reversed")
        if merged and lo <= merged[-1][1] + tol:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return [(lo, hi) for lo, hi in merged]


def intersect_unions(first: Sequence[Interval], second: Sequence[Interval], tol: float) -> list[Interval]:
    """Intersection of two merged unions.

    Intervals that only touch (within ``tol``) meet in a single point, which
    is kept as a degenerate interval.
    """
    result: list[Interval] = []
    i = j = 0
    while i < len(first) and j < len(second):
        lo = max(first[i][0], second[j][0])
        hi = min(first[i][1], second[j][1])
        if lo <= hi:
            result.append((lo, hi))
        elif lo - hi <= tol:
            mid = 0.5 * (lo + hi)
            result.append((mid, mid))
        if first[i][1] < second[j][1]:
            i += 1
        else:
            j += 1
    return merge_intervals(result, tol)


def reflect(intervals: Sequence[Interval], center: float) -> list[Interval]:
    """Image under λ ↦ 2·center − λ, sorted."""
    return sorted((2.0 * center - hi, 2.0 * center - lo) for lo, hi in intervals)


def complement(intervals: Sequence[Interval], ambient: Interval, min_length: float) -> list[Interval]:
    """Maximal open subintervals of ``ambient`` missing the union.

    Pieces not longer than ``min_length`` are dropped.
    """
    lo_amb, hi_amb = ambient
    gaps: list[Interval] = []
    cursor = lo_amb
    for lo, hi in merge_intervals(intervals, 0.0):
        if hi < lo_amb or lo > hi_amb:
            continue
        if lo - cursor > min_length:
            gaps.append((cursor, lo))
        cursor = max(cursor, hi)
    if hi_amb - cursor > min_length:
        gaps.append((cursor, hi_amb))
    return gaps


def split_isolated(intervals: Sequence[Interval], tol: float) -> tuple[list[Interval], list[float]]:
    """Separate proper intervals from points (length at most ``tol``)."""
    proper = [(lo, hi) for lo, hi in intervals if hi - lo > tol]
    points = [0.5 * (lo + hi) for lo, hi in intervals if hi - lo <= tol]
    return proper, points


def total_length(intervals: Sequence[Interval]) -> float:
    return sum(hi - lo for lo, hi in intervals)


def contains(intervals: Sequence[Interval], x: float, tol: float) -> bool:
    return any(lo - tol <= x <= hi + tol for lo, hi in intervals)


__all__ = [
    "Interval",
    "merge_intervals",
    "intersect_unions",
    "reflect",
    "complement",
    "split_isolated",
    "total_length",
    "contains",
]
