"""Exact arithmetic substrate: integer matrices, characteristic polynomials,
and integers of the form a + b*sqrt(2).

Integer scalars are plain ``int`` (arbitrary precision), rationals are
``fractions.Fraction`` (always reduced, positive denominator).  Nothing in
this package ever rounds: every count, sum, average, and density is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class IntMatrix:
    """Immutable dense square matrix over Python integers.

    Indices are 0-based.  Only the operations the counting engines need are
    provided; this is deliberately not a general linear-algebra toolkit.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(entry for entry in row) for row in rows)
        if not rows:
            raise ValueError("matrix must have positive order")
        for row in rows:
            if len(row) != len(rows):
                raise ValueError("matrix must be square")
            for entry in row:
                if not isinstance(entry, int):
                    raise TypeError(f"matrix entries must be int, got {type(entry).__name__}")
        self._rows = rows

    @classmethod
    def identity(cls, order: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(order)] for i in range(order)])

    @classmethod
    def zero(cls, order: int) -> IntMatrix:
        return cls([[0] * order for _ in range(order)])

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> IntMatrix:
        return cls([[entries[i] if i == j else 0 for j in range(len(entries))]
                    for i in range(len(entries))])

    @classmethod
    def unit(cls, order: int, row: int, col: int) -> IntMatrix:
        """Matrix with a single 1 at (row, col), zeros elsewhere."""
        return cls([[int(i == row and j == col) for j in range(order)]
                    for i in range(order)])

    @property
    def order(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def entry(self, i: int, j: int) -> int:
        return self._rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self._rows)

    def _check_order(self, other: IntMatrix) -> None:
        if self.order != other.order:
            raise ValueError(f"matrix orders differ: {self.order} vs {other.order}")

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        self._check_order(other)
        cols = tuple(zip(*other._rows))
        return IntMatrix([[sum(a * b for a, b in zip(row, col)) for col in cols]
                          for row in self._rows])

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_order(other)
        return IntMatrix([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self._rows, other._rows)])

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix([[c * entry for entry in row] for row in self._rows])

    def __pow__(self, e: int) -> IntMatrix:
        # Intended for small verification exponents; production paths iterate
        # vector recurrences instead of materializing powers.
        if e < 0:
            raise ValueError("exponent must be non-negative")
        result = IntMatrix.identity(self.order)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base if e > 1 else base
            e >>= 1
        return result

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product M @ v."""
        if len(vector) != self.order:
            raise ValueError(f"vector length {len(vector)} does not match order {self.order}")
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self._rows)

    def transpose(self) -> IntMatrix:
        return IntMatrix(zip(*self._rows))

    def trace(self) -> int:
        return sum(row[i] for i, row in enumerate(self._rows))

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        n = self.order
        a = [list(row) for row in self._rows]
        sign = 1
        prev = 1
        for r in range(n - 1):
            if a[r][r] == 0:
                for i in range(r + 1, n):
                    if a[i][r] != 0:
                        a[r], a[i] = a[i], a[r]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(r + 1, n):
                for j in range(r + 1, n):
                    a[i][j] = (a[i][j] * a[r][r] - a[i][r] * a[r][j]) // prev
                a[i][r] = 0
            prev = a[r][r]
        return sign * a[n - 1][n - 1]

    @property
    def is_symmetric(self) -> bool:
        return all(self._rows[i][j] == self._rows[j][i]
                   for i in range(self.order) for j in range(i + 1, self.order))

    @property
    def is_zero(self) -> bool:
        return all(entry == 0 for row in self._rows for entry in row)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(e) for e in row) for row in self._rows)
        return f"IntMatrix[{body}]"


class IntPolynomial:
    """Monic polynomial with integer coefficients, stored low degree first."""

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Sequence[int]):
        coefficients = tuple(coefficients)
        if not coefficients or coefficients[-1] != 1:
            raise ValueError("polynomial must be monic")
        for c in coefficients:
            if not isinstance(c, int):
                raise TypeError("coefficients must be int")
        self._coefficients = coefficients

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coefficients

    @property
    def degree(self) -> int:
        return len(self._coefficients) - 1

    def __getitem__(self, power: int) -> int:
        return self._coefficients[power]

    def evaluate(self, x: int) -> int:
        result = 0
        for c in reversed(self._coefficients):
            result = result * x + c
        return result

    def evaluate_matrix(self, matrix: IntMatrix) -> IntMatrix:
        """Substitute a square matrix for the variable (Horner form)."""
        if matrix.order != self.degree:
            raise ValueError("matrix order must equal polynomial degree")
        identity = IntMatrix.identity(matrix.order)
        result = identity  # leading coefficient is 1
        for c in reversed(self._coefficients[:-1]):
            result = result @ matrix + identity.scale(c)
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(self._coefficients)

    def __str__(self) -> str:
        terms = []
        for power in range(self.degree, -1, -1):
            c = self._coefficients[power]
            if c == 0:
                continue
            if power == self.degree:
                lead = ""
            else:
                lead = " - " if c < 0 else " + "
                c = abs(c)
            if power == 0:
                body = str(c)
            else:
                var = "λ" if power == 1 else f"λ^{power}"
                body = var if c == 1 else f"{c}{var}"
            terms.append(lead + body)
        return "".join(terms)

    def __repr__(self) -> str:
        return f"IntPolynomial({self._coefficients!r})"


def char_poly(matrix: IntMatrix) -> IntPolynomial:
    """Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier scheme.

    Intermediate matrices stay integral; the per-step trace division is done
    with exact rationals and checked for integrality, so a non-integer
    coefficient (impossible for an integer matrix) would raise instead of
    silently corrupting the result.
    """
    n = matrix.order
    identity = IntMatrix.identity(n)
    coefficients = [0] * (n + 1)
    coefficients[n] = 1
    aux = IntMatrix.zero(n)
    for k in range(1, n + 1):
        aux = matrix @ (aux + identity.scale(coefficients[n - k + 1]))
        c = Fraction(-aux.trace(), k)
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral characteristic coefficient at step {k}")
        coefficients[n - k] = int(c)
    return IntPolynomial(coefficients)


@dataclass(frozen=True, slots=True)
class QuadInt:
    """Ring element a + b*sqrt(2) with exact integer parts."""

    a: int
    b: int

    def __add__(self, other: QuadInt) -> QuadInt:
        return QuadInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: QuadInt) -> QuadInt:
        return QuadInt(self.a - other.a, self.b - other.b)

    def __mul__(self, other: QuadInt) -> QuadInt:
        return QuadInt(self.a * other.a + 2 * self.b * other.b,
                       self.a * other.b + self.b * other.a)

    def __pow__(self, e: int) -> QuadInt:
        if e < 0:
            raise ValueError("exponent must be non-negative")
        result = QuadInt(1, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def conjugate(self) -> QuadInt:
        return QuadInt(self.a, -self.b)

    def norm(self) -> int:
        """a^2 - 2*b^2; multiplicative over the ring."""
        return self.a * self.a - 2 * self.b * self.b

    def __repr__(self) -> str:
        return f"QuadInt({self.a}, {self.b})"


#: The unit 1 + sqrt(2); its powers carry the Pell-family sequences.
SILVER_UNIT = QuadInt(1, 1)
