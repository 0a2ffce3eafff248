"""
Bayesian Sum

Recursive combination of scores on the [0, 10] scale:

    a_0 = v_0
    a_n = 10 * [1 - (1 - a_(n-1)/10) * (1 - v_n/10)]

Correction factors are applied before the sum, so every term enters with
unit weight.
"""

from typing import Iterable

MAX_SCORE = 10.0


def _combine(accumulated: float, value: float) -> float:
    # Expanded form of the recursion step; exact identity for value == 0
    # and exact absorption at accumulated == 10.
    return min(accumulated + value * (1 - accumulated / MAX_SCORE), MAX_SCORE)


def bayesian_trace(values: Iterable[float]) -> list[float]:
    """Partial sums a_0, a_1, ..., a_n in input order."""
    trace: list[float] = []
    for value in values:
        if not 0.0 <= value <= MAX_SCORE:
            raise ValueError(f"score {value} outside [0, {MAX_SCORE}]")
        trace.append(value if not trace else _combine(trace[-1], value))
    return trace


def bayesian_sum(values: Iterable[float]) -> float:
    """
    Bayesian sum of scores in [0, 10]; 0 for an empty input.

    Equal to 10 * (1 - prod(1 - v/10)) and therefore independent of order.
    """
    trace = bayesian_trace(values)
    return trace[-1] if trace else 0.0
