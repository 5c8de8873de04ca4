"""Headline quantities for the product of a complete layer and a path.

Every connected set spans a contiguous block of layers, and blocks of
equal length are interchangeable, so the graph-level count and order sum
are triangular-weighted sums of the per-horizon layer quantities.  The
average order and density come out as exact reduced fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .layers import profile_table
from .orders import layer_order_sum_convolution, order_table


def _check_cell(m: int, n: int) -> None:
    if m < 1:
        raise ValueError("layer size m must be at least 1")
    if n < 1:
        raise ValueError("path length n must be at least 1")


def count_connected_sets(m: int, n: int) -> int:
    """Number of connected vertex sets of the m-by-n product graph."""
    _check_cell(m, n)
    table = profile_table(m, n)
    return sum((n + 1 - k) * table.total(k) for k in range(1, n + 1))


def total_order(m: int, n: int) -> int:
    """Sum of the orders of all connected vertex sets."""
    _check_cell(m, n)
    table = order_table(m, n)
    return sum((n - k + 1) * table.layer_order_sum(k) for k in range(1, n + 1))


def average_order(m: int, n: int) -> Fraction:
    """Average order of a connected vertex set, exact."""
    return Fraction(total_order(m, n), count_connected_sets(m, n))


def density(m: int, n: int) -> Fraction:
    """Average order divided by the vertex count m*n, exact."""
    return average_order(m, n) / (m * n)


def total_order_convolution(m: int, n: int) -> int:
    """Verification path for the total order: the same triangular sum, but
    with each layer order sum rebuilt from counts alone (no order table)."""
    _check_cell(m, n)
    table = profile_table(m, n)
    return sum((n - k + 1) * layer_order_sum_convolution(m, k, table)
               for k in range(1, n + 1))


def average_order_convolution(m: int, n: int) -> Fraction:
    """Average order via the convolution path; must equal average_order."""
    return Fraction(total_order_convolution(m, n), count_connected_sets(m, n))


@dataclass(frozen=True, slots=True)
class ProductResult:
    """All four headline quantities for one (m, n) cell."""

    m: int
    n: int
    count: int
    total: int
    average: Fraction
    density: Fraction

    def __post_init__(self):
        if self.average != Fraction(self.total, self.count):
            raise ValueError("average must equal total/count exactly")
        if self.density != self.average / (self.m * self.n):
            raise ValueError("density must equal average/(m*n) exactly")
        if not 1 <= self.average <= self.m * self.n:
            raise ValueError("average outside [1, m*n]")
        if not 0 < self.density <= 1:
            raise ValueError("density outside (0, 1]")


def evaluate(m: int, n: int) -> ProductResult:
    """Count, total order, average, and density for one cell."""
    count = count_connected_sets(m, n)
    total = total_order(m, n)
    average = Fraction(total, count)
    return ProductResult(m=m, n=n, count=count, total=total,
                         average=average, density=average / (m * n))
