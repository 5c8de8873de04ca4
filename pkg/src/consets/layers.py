"""Layer-by-layer counting of connected vertex sets in K_m x P_n.

The product graph is a path of n complete layers of size m.  A connected
set that touches layers 1..k is classified by its footprint in layer k
(its intersection with that layer), and by symmetry only the footprint
size matters.  The m counts per layer advance by one integer matrix, so
the whole count grid unrolls as a vector recurrence.

Indices follow the combinatorics: layers and horizons k are 1-based, as
are footprint sizes i in 1..m.  Matrix indices stay 0-based.
"""

from __future__ import annotations

import threading
from functools import lru_cache

from .exactmath import IntMatrix


@lru_cache(maxsize=None)
def pascal_row(m: int) -> tuple[int, ...]:
    """Row m of Pascal's triangle: (C(m,0), ..., C(m,m))."""
    if m < 0:
        raise ValueError("binomial row index must be non-negative")
    row = (1,)
    for _ in range(m):
        row = (1, *(row[i] + row[i + 1] for i in range(len(row) - 1)), 1)
    return row


def footprint_weights(m: int) -> tuple[int, ...]:
    """(C(m,1), ..., C(m,m)): how many footprints share each size class."""
    if m < 1:
        raise ValueError("layer size must be at least 1")
    return pascal_row(m)[1:]


@lru_cache(maxsize=None)
def recurrence_matrix(m: int) -> IntMatrix:
    """The m x m matrix advancing footprint-class counts by one layer.

    Entry (i, j), 1-based, is C(m,j) - C(m-i,j): the number of j-vertex
    footprints in the previous layer adjacent to a fixed i-vertex footprint
    in the next one.  The last row is the plain binomial row.
    """
    if m < 1:
        raise ValueError("layer size must be at least 1")
    full = pascal_row(m)
    rows = []
    for i in range(1, m + 1):
        sub = pascal_row(m - i)
        rows.append(tuple(full[j] - (sub[j] if j <= m - i else 0)
                          for j in range(1, m + 1)))
    return IntMatrix(rows)


class ProfileTable:
    """Append-only grid of footprint-class counts for one layer size.

    Column k holds, for each footprint size i = 1..m, the number of
    connected sets of the k-layer product that meet every one of the first
    k-1 layers and occupy one fixed i-vertex footprint in layer k.  Column
    1 is all ones; column k is the recurrence matrix applied to column k-1.
    ``total(k)`` weights column k by the binomial row, giving the number of
    connected sets that meet all k layers.

    Growth is single-writer behind a lock; computed prefixes never change,
    so a shared table can serve callers at different horizons.
    """

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("layer size must be at least 1")
        self.m = m
        self.matrix = recurrence_matrix(m)
        self.weights = footprint_weights(m)
        self._columns: list[tuple[int, ...]] = [(1,) * m]
        self._totals: list[int] = [sum(self.weights)]
        self._lock = threading.Lock()

    @property
    def k_max(self) -> int:
        return len(self._columns)

    def ensure(self, k_max: int) -> ProfileTable:
        """Grow the table to horizon k_max (no-op if already there)."""
        if k_max < 1:
            raise ValueError("horizon must be at least 1")
        if k_max > len(self._columns):
            with self._lock:
                while len(self._columns) < k_max:
                    column = self.matrix.apply(self._columns[-1])
                    self._columns.append(column)
                    self._totals.append(sum(w * c for w, c in zip(self.weights, column)))
        return self

    def _check_k(self, k: int) -> None:
        if not 1 <= k <= len(self._columns):
            raise ValueError(f"horizon {k} outside computed range 1..{len(self._columns)}")

    def column(self, k: int) -> tuple[int, ...]:
        self._check_k(k)
        return self._columns[k - 1]

    def count(self, i: int, k: int) -> int:
        """Connected sets meeting layers 1..k-1 with a fixed i-vertex footprint in layer k."""
        if not 1 <= i <= self.m:
            raise ValueError(f"footprint size {i} outside 1..{self.m}")
        self._check_k(k)
        return self._columns[k - 1][i - 1]

    def total(self, k: int) -> int:
        """Connected sets of the k-layer product meeting every layer."""
        self._check_k(k)
        return self._totals[k - 1]


_TABLES: dict[int, ProfileTable] = {}
_TABLES_LOCK = threading.Lock()


def profile_table(m: int, k_max: int = 1) -> ProfileTable:
    """Shared per-m table, grown to at least the requested horizon."""
    with _TABLES_LOCK:
        table = _TABLES.get(m)
        if table is None:
            table = _TABLES.setdefault(m, ProfileTable(m))
    return table.ensure(k_max)


def weighted_profile_sum(m: int, i: int, k: int) -> int:
    """Binomial row dotted with the i-th column of the (k-1)-th matrix power.

    Equals C(m,i) times the size-i footprint count at horizon k; the matrix
    power is never materialized, only a basis vector is advanced k-1 times.
    """
    if not 1 <= i <= m:
        raise ValueError(f"footprint size {i} outside 1..{m}")
    if k < 1:
        raise ValueError("horizon must be at least 1")
    matrix = recurrence_matrix(m)
    vector = tuple(int(j == i - 1) for j in range(m))
    for _ in range(k - 1):
        vector = matrix.apply(vector)
    return sum(w * v for w, v in zip(footprint_weights(m), vector))


def weighted_power_symmetric(m: int, k: int) -> bool:
    """Whether diag(C(m,1)..C(m,m)) times the k-th matrix power is symmetric.

    This symmetry is what lets per-size counts stand in for per-footprint
    counts; it is checked on materialized powers, so keep k small.
    """
    if m < 1:
        raise ValueError("layer size must be at least 1")
    if k < 1:
        raise ValueError("power must be at least 1")
    weighted = IntMatrix.diagonal(footprint_weights(m)) @ (recurrence_matrix(m) ** k)
    return weighted.is_symmetric
