"""Compensated (Neumaier) summation.

Used wherever the contracts demand order-stable, near-exact accumulation:
quadrature panel totals and network resistance sums.
"""

from __future__ import annotations

from typing import Iterable

__all__ = ["neumaier_sum"]


def neumaier_sum(values: Iterable[float]) -> float:
    """Sum floats with a running compensation term.

    The improved Kahan variant: the correction also captures the case where
    the incoming term is larger than the running total, so the result is
    faithful to within one final rounding regardless of ordering or
    magnitude spread.
    """
    total = 0.0
    compensation = 0.0
    for value in values:
        v = float(value)
        t = total + v
        if abs(total) >= abs(v):
            compensation += (total - t) + v
        else:
            compensation += (v - t) + total
        total = t
    return total + compensation
