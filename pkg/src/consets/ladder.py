"""Closed forms for the two-layer case: the ladder graph.

With layers of size two, the per-horizon totals are the half-companion
Pell numbers 1, 1, 3, 7, 17, 41, ... and the single-vertex-footprint
counts are the Pell numbers 0, 1, 2, 5, 12, ...; both satisfy
x(k) = 2 x(k-1) + x(k-2).  Everything downstream (counts, averages,
densities, and the published ladder formula they must match) reduces to
those two sequences.  The sqrt(2) closed forms are realized exactly
through QuadInt, never through floating point.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .exactmath import SILVER_UNIT
from .reporting import Check


class PellPair:
    """Cached Pell and half-companion Pell sequences, grown append-only.

    ``pell(k)`` is 0, 1, 2, 5, 12, ... and ``half_companion(k)`` is
    1, 1, 3, 7, 17, ...; the half-companion index is offset so that the
    k-layer total equals half_companion(k+1), which also pins the index-0
    value (run the recurrence backwards: 7 - 2*3 = 1).
    """

    def __init__(self):
        self._pell = [0, 1]
        self._half = [1, 1]
        self._lock = threading.Lock()

    def _extend(self, values: list[int], k: int) -> None:
        with self._lock:
            while len(values) <= k:
                values.append(2 * values[-1] + values[-2])

    def pell(self, k: int) -> int:
        if k < 0:
            raise ValueError("index must be non-negative")
        if k >= len(self._pell):
            self._extend(self._pell, k)
        return self._pell[k]

    def half_companion(self, k: int) -> int:
        if k < 0:
            raise ValueError("index must be non-negative")
        if k >= len(self._half):
            self._extend(self._half, k)
        return self._half[k]


_SHARED = PellPair()


def pell(k: int) -> int:
    """k-th Pell number; equals the single-vertex-footprint count at horizon k."""
    return _SHARED.pell(k)


def half_companion(k: int) -> int:
    """k-th half-companion Pell number (1, 1, 3, 7, 17, ...)."""
    return _SHARED.half_companion(k)


def layer_total(k: int) -> int:
    """Two-layer-case total at horizon k, i.e. half_companion(k+1).

    Index 0 is the backwards extension (value 1), which the recurrence,
    the prefix-sum identities, and the published ladder formula all need.
    """
    if k < 0:
        raise ValueError("horizon must be non-negative")
    return _SHARED.half_companion(k + 1)


def layer_total_closed_form(k: int) -> int:
    """Horizon-k total from the sqrt(2) closed form.

    The total is half the sum of the two conjugate (1 +- sqrt(2))^(k+1);
    the sum is twice the rational part, so the division by two is exact.
    The parity is asserted anyway so a broken power would surface loudly.
    """
    if k < 1:
        raise ValueError("horizon must be at least 1")
    power = SILVER_UNIT ** (k + 1)
    paired = power + power.conjugate()
    if paired.b != 0 or paired.a % 2 != 0:
        raise ArithmeticError("conjugate pairing lost exactness")
    return paired.a // 2


def pell_closed_form(k: int) -> int:
    """k-th Pell number as the sqrt(2) part of (1 + sqrt(2))^k."""
    if k < 0:
        raise ValueError("index must be non-negative")
    return (SILVER_UNIT ** k).b


def ladder_count(n: int) -> int:
    """Number of connected sets of the n-rung ladder:
    (layer_total(n+2) - 4n - 7) / 2, with the divisibility asserted."""
    if n < 1:
        raise ValueError("rung count must be at least 1")
    numerator = layer_total(n + 2) - 4 * n - 7
    if numerator % 2 != 0:
        raise ArithmeticError(f"count numerator odd at n={n}")
    return numerator // 2


def _average_numerator(n: int) -> int:
    return ((21 * n - 32) * layer_total(n)
            + (19 - 12 * n) * pell(n)
            + 10 * n + 32)


def ladder_total_order(n: int) -> int:
    """Sum of the orders of all connected sets of the n-rung ladder."""
    if n < 1:
        raise ValueError("rung count must be at least 1")
    numerator = _average_numerator(n)
    if numerator % 4 != 0:
        raise ArithmeticError(f"order-sum numerator not divisible by 4 at n={n}")
    return numerator // 4


def ladder_average(n: int) -> Fraction:
    """Average order of a connected set of the n-rung ladder, exact.

    The denominator is read as 2*(layer_total(n+2) - 4n - 7), i.e. four
    times the count, which is what the numerator (four times the order
    sum) requires.
    """
    if n < 1:
        raise ValueError("rung count must be at least 1")
    return Fraction(_average_numerator(n),
                    2 * (layer_total(n + 2) - 4 * n - 7))


def vince_average(n: int) -> Fraction:
    """Average order via the independently published ladder formula,
    stated over the Pell and half-companion Pell sequences directly."""
    if n < 1:
        raise ValueError("rung count must be at least 1")
    beta = half_companion
    numerator = (32 - 45 * pell(n) - 32 * beta(n)
                 + n * (10 + 21 * beta(n) + 30 * pell(n)))
    return Fraction(numerator, 2 * (beta(n + 3) - 4 * n - 7))


def ladder_density(n: int) -> Fraction:
    """Average order divided by the 2n vertices, exact."""
    return ladder_average(n) / (2 * n)


def ladder_sum_identities(n: int) -> tuple[Check, ...]:
    """Check the five prefix-sum closed forms against direct summation.

    Each comparison is cross-multiplied so a failing identity reports the
    two integers instead of raising on a non-exact halving.  The closed
    form for the plain Pell-tail sum uses layer_total(n+2); the version
    with index n+3 fails direct summation already at n=1 (5 vs 17).
    """
    if n < 1:
        raise ValueError("rung count must be at least 1")
    where = f"n={n}"
    totals = [layer_total(k) for k in range(1, n + 4)]

    def total(k: int) -> int:
        return totals[k - 1]

    sum_totals = sum(total(k) for k in range(1, n + 1))
    sum_k_totals = sum(k * total(k) for k in range(1, n + 1))
    sum_pell_tail = sum(pell(k + 2) for k in range(1, n + 1))
    sum_k_pell_tail = sum(k * pell(k + 2) for k in range(1, n + 1))
    sum_k2_totals = sum(k * k * total(k) for k in range(1, n + 1))

    checks = (
        Check("prefix sum of totals", where,
              2 * sum_totals == total(n + 1) + total(n) - 4,
              f"2*{sum_totals} vs {total(n + 1) + total(n) - 4}"),
        Check("weighted prefix sum of totals", where,
              2 * sum_k_totals == n * total(n + 2) - (n + 1) * total(n + 1) + 3,
              f"2*{sum_k_totals} vs {n * total(n + 2) - (n + 1) * total(n + 1) + 3}"),
        Check("prefix sum of shifted pell", where,
              2 * sum_pell_tail == total(n + 2) - 7,
              f"2*{sum_pell_tail} vs {total(n + 2) - 7}"),
        Check("weighted prefix sum of shifted pell", where,
              2 * sum_k_pell_tail == (2 * (n - 1) * pell(n + 2)
                                      + (3 * n - 1) * pell(n + 1)
                                      + n * pell(n) + 5),
              f"2*{sum_k_pell_tail} vs "
              f"{2 * (n - 1) * pell(n + 2) + (3 * n - 1) * pell(n + 1) + n * pell(n) + 5}"),
        Check("square-weighted prefix sum of totals", where,
              2 * sum_k2_totals == ((2 * n * n + 2 * n + 1) * pell(n + 2)
                                    + (1 - 2 * n) * pell(n + 3) - 7),
              f"2*{sum_k2_totals} vs "
              f"{(2 * n * n + 2 * n + 1) * pell(n + 2) + (1 - 2 * n) * pell(n + 3) - 7}"),
    )
    return checks
