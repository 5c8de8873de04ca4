"""Scalar linear recurrence for the per-horizon totals.

The recurrence matrix satisfies its own characteristic polynomial, so the
weighted totals obey an order-m linear recurrence whose coefficients are
the (negated) polynomial coefficients.  That turns the O(k m^2) matrix
path into an O(k m) stream.  The validator checks two claimed closed
forms for the coefficients: the trace identity (against Fibonacci
numbers) holds for every m, while the unit-constant-term claim is true
only for m = 0, 3 (mod 4) and is reported honestly where it fails.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactmath import IntPolynomial, char_poly
from .layers import profile_table, recurrence_matrix
from .reporting import Check


def fibonacci(n: int) -> int:
    """F(0)=0, F(1)=1, F(n)=F(n-1)+F(n-2), by integer iteration."""
    if n < 0:
        raise ValueError("index must be non-negative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass(frozen=True, slots=True)
class CoefficientReport:
    """Outcome of checking the characteristic coefficients of one layer size."""

    m: int
    polynomial: IntPolynomial
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(check.ok for check in self.checks)

    def failures(self) -> list[Check]:
        return [check for check in self.checks if not check.ok]


def validate_coefficients(m: int) -> CoefficientReport:
    """Check the claimed closed forms for the top and constant coefficients.

    With p(x) = x^m + c_m x^(m-1) + ... + c_1 for the layer matrix, the
    claims are c_m = F(m+1) - 2^m for every m >= 2, and c_1 = 1 for
    m >= 3 (c_1 = -1 at m = 2).  The top-coefficient claim always holds;
    the constant-term claim fails for m = 1, 2 (mod 4), where the
    determinant's sign flips (det = (-1)^(m(m-1)/2)), and the report
    carries those failures.  The matrix-side equivalents (trace, signed
    determinant) are computed independently of the polynomial.
    """
    if m < 2:
        raise ValueError("coefficient identities need layer size at least 2")
    matrix = recurrence_matrix(m)
    polynomial = char_poly(matrix)
    where = f"m={m}"
    top = polynomial[m - 1]
    constant = polynomial[0]
    expected_top = fibonacci(m + 1) - 2 ** m
    expected_constant = 1 if m >= 3 else -1
    checks = (
        Check("charpoly top coefficient", where, top == expected_top,
              f"got {top}, expected {expected_top}"),
        Check("charpoly constant term", where, constant == expected_constant,
              f"got {constant}, expected {expected_constant}"),
        Check("matrix trace identity", where, matrix.trace() == 2 ** m - fibonacci(m + 1),
              f"trace {matrix.trace()}, expected {2 ** m - fibonacci(m + 1)}"),
        Check("determinant sign identity", where,
              matrix.determinant() == (-1) ** m * constant,
              f"det {matrix.determinant()}, expected {(-1) ** m * constant}"),
    )
    return CoefficientReport(m=m, polynomial=polynomial, checks=checks)


@dataclass(frozen=True, slots=True)
class LinearRecurrence:
    """Order-m integer recurrence with seed values for horizons 1..m.

    value(k) = sum_j coefficients[j-1] * value(k-j) is guaranteed for
    k >= m+1; the seed itself always comes from the matrix path.
    """

    m: int
    coefficients: tuple[int, ...]
    seed: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.m or len(self.seed) != self.m:
            raise ValueError("coefficients and seed must both have length m")

    def stream(self, k_max: int) -> list[int]:
        """Totals for horizons 1..k_max."""
        if k_max < 1:
            raise ValueError("horizon must be at least 1")
        values = list(self.seed[:k_max])
        while len(values) < k_max:
            values.append(sum(c * v for c, v in
                              zip(self.coefficients, reversed(values[-self.m:]))))
        return values


def build_recurrence(m: int) -> LinearRecurrence:
    """Recurrence coefficients from the characteristic polynomial, seed
    from the first m columns of the shared count table."""
    if m < 1:
        raise ValueError("layer size must be at least 1")
    polynomial = char_poly(recurrence_matrix(m))
    coefficients = tuple(-polynomial[m - j] for j in range(1, m + 1))
    table = profile_table(m, m)
    seed = tuple(table.total(k) for k in range(1, m + 1))
    return LinearRecurrence(m=m, coefficients=coefficients, seed=seed)


def total_stream(m: int, k_max: int) -> list[int]:
    """Totals for horizons 1..k_max via the scalar recurrence."""
    return build_recurrence(m).stream(k_max)
