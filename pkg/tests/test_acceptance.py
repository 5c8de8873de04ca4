"""Acceptance battery: one test per criterion, one printed line each.

All comparisons are exact (tolerance zero); the stated runtime budgets
are asserted as well.  Run with ``pytest tests/test_acceptance.py -s``
to see the per-criterion lines.

Criterion 3 is known red: it asserts a unit constant term for the
characteristic polynomial at every m in 3..10, but that claimed identity
is false for m = 5, 6, 9, 10 (the determinant of the layer matrix is
(-1)^(m(m-1)/2), so the constant term's sign cycles with period 4; see
test_exactmath.test_layer_matrix_determinant_sign_law for the verified
law).  The criterion is implemented as stated and left to fail rather
than weakened.
"""

import json
import subprocess
import sys
import time
from fractions import Fraction

from consets import aggregate, ladder, oracle, recurrence
from consets.exactmath import char_poly
from consets.layers import (
    footprint_weights,
    profile_table,
    recurrence_matrix,
    weighted_power_symmetric,
    weighted_profile_sum,
)
from consets.orders import layer_order_sum_convolution, order_column_direct, order_table

ORACLE_GRID = ((1, 10), (2, 8), (3, 5), (4, 4), (5, 3))


def _criterion(number: int, description: str, ok: bool, elapsed: float,
               detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    line = f"ACCEPTANCE {number} {description}: {status} ({elapsed:.2f}s)"
    if detail and not ok:
        line += f" -- {detail}"
    print(line)


def test_criterion_1_census_equivalence():
    start = time.perf_counter()
    mismatches = []
    for m, n_top in ORACLE_GRID:
        for n in range(1, n_top + 1):
            result = aggregate.evaluate(m, n)
            report = oracle.census(oracle.complete_path_product(m, n).graph)
            if (result.count, result.total) != (report.count, report.total_order):
                mismatches.append(f"m={m} n={n}: formula ({result.count}, {result.total}), "
                                  f"census ({report.count}, {report.total_order})")
            if result.average != report.average or result.density != report.density:
                mismatches.append(f"m={m} n={n}: ratio mismatch")
    elapsed = time.perf_counter() - start
    _criterion(1, "census equivalence on the desk-scale grid",
               not mismatches, elapsed, "; ".join(mismatches))
    assert not mismatches
    assert elapsed < 60


def test_criterion_2_ladder_closed_forms():
    start = time.perf_counter()
    mismatches = []
    for n in range(1, 201):
        count = aggregate.count_connected_sets(2, n)
        average = aggregate.average_order(2, n)
        if ladder.ladder_count(n) != count:
            mismatches.append(f"count at n={n}")
        if not ladder.ladder_average(n) == ladder.vince_average(n) == average:
            mismatches.append(f"average at n={n}")
    anchors_ok = ([ladder.ladder_count(n) for n in (1, 2, 3)] == [3, 13, 40]
                  and ladder.ladder_average(1) == Fraction(4, 3)
                  and ladder.ladder_average(2) == Fraction(28, 13))
    if not anchors_ok:
        mismatches.append("anchor values")
    elapsed = time.perf_counter() - start
    _criterion(2, "ladder closed forms for n=1..200",
               not mismatches, elapsed, "; ".join(mismatches))
    assert not mismatches
    assert elapsed < 5


def test_criterion_3_characteristic_coefficient_identities():
    start = time.perf_counter()
    mismatches = []
    poly2 = char_poly(recurrence_matrix(2))
    if (poly2[1], poly2[0]) != (-2, -1):
        mismatches.append(f"m=2 coefficients {(poly2[1], poly2[0])}")
    for m in range(3, 11):
        poly = char_poly(recurrence_matrix(m))
        expected_top = recurrence.fibonacci(m + 1) - 2 ** m
        if poly[m - 1] != expected_top:
            mismatches.append(f"m={m}: top {poly[m - 1]} != {expected_top}")
        if poly[0] != 1:
            mismatches.append(f"m={m}: constant {poly[0]} != 1")
    elapsed = time.perf_counter() - start
    _criterion(3, "characteristic-coefficient closed forms for m=2..10",
               not mismatches, elapsed,
               "; ".join(mismatches) + " (claimed unit constant term is false "
               "for m = 1, 2 mod 4; determinant sign cycles with period 4)")
    assert elapsed < 1
    assert not mismatches, mismatches


def test_criterion_4_recurrence_matches_matrix_path():
    start = time.perf_counter()
    mismatches = []
    for m in range(2, 7):
        table = profile_table(m, 200)
        stream = recurrence.total_stream(m, 200)
        for k in range(1, 201):
            if stream[k - 1] != table.total(k):
                mismatches.append(f"m={m} k={k}")
    elapsed = time.perf_counter() - start
    _criterion(4, "scalar recurrence equals matrix path for m=2..6, k=1..200",
               not mismatches, elapsed, "; ".join(mismatches))
    assert not mismatches
    assert elapsed < 5


def test_criterion_5_weighted_symmetry():
    start = time.perf_counter()
    mismatches = []
    for m in range(2, 7):
        table = profile_table(m, 12)
        weights = footprint_weights(m)
        for k in range(1, 13):
            if not weighted_power_symmetric(m, k):
                mismatches.append(f"symmetry m={m} k={k}")
            for i in range(1, m + 1):
                if weighted_profile_sum(m, i, k) != weights[i - 1] * table.count(i, k):
                    mismatches.append(f"weighted sum m={m} i={i} k={k}")
    elapsed = time.perf_counter() - start
    _criterion(5, "weighted power symmetry and column sums for m=2..6, k=1..12",
               not mismatches, elapsed, "; ".join(mismatches))
    assert not mismatches
    assert elapsed < 5


def test_criterion_6_order_sum_three_paths():
    start = time.perf_counter()
    mismatches = []
    for m in range(2, 6):
        table = order_table(m, 10)
        weights = footprint_weights(m)
        for k in range(1, 11):
            recursive = table.column(k)
            if recursive != order_column_direct(m, k):
                mismatches.append(f"direct m={m} k={k}")
            weighted = sum(w * s for w, s in zip(weights, recursive))
            if weighted != layer_order_sum_convolution(m, k, table.profile):
                mismatches.append(f"convolution m={m} k={k}")
    elapsed = time.perf_counter() - start
    _criterion(6, "order-sum three-path agreement for m=2..5, k=1..10",
               not mismatches, elapsed, "; ".join(mismatches))
    assert not mismatches
    assert elapsed < 10


def test_criterion_7_analytic_anchors():
    start = time.perf_counter()
    mismatches = []
    for m in range(1, 11):
        if aggregate.average_order(m, 1) != Fraction(m * 2 ** (m - 1), 2 ** m - 1):
            mismatches.append(f"single-layer m={m}")
    for n in range(1, 51):
        if aggregate.average_order(1, n) != Fraction(n + 2, 3):
            mismatches.append(f"single-column n={n}")
    elapsed = time.perf_counter() - start
    _criterion(7, "analytic anchor averages", not mismatches, elapsed,
               "; ".join(mismatches))
    assert not mismatches
    assert elapsed < 1


def test_criterion_8_summation_identities():
    start = time.perf_counter()
    mismatches = []
    for n in range(1, 101):
        for check in ladder.ladder_sum_identities(n):
            if not check.ok:
                mismatches.append(f"{check.name} at n={n}")
    elapsed = time.perf_counter() - start
    _criterion(8, "prefix-sum identities for n=1..100",
               not mismatches, elapsed, "; ".join(mismatches))
    assert not mismatches
    assert elapsed < 2


def test_criterion_9_performance_floor():
    start = time.perf_counter()
    completed = subprocess.run(
        [sys.executable, "-m", "consets.cli", "compute",
         "--m", "6", "--n", "1000", "--format", "json"],
        capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    record = json.loads(completed.stdout) if completed.returncode == 0 else {}
    exact = (completed.returncode == 0
             and Fraction(record["A_exact"])
             == Fraction(int(record["S"]), int(record["N"]))
             and Fraction(record["D_exact"])
             == Fraction(record["A_exact"]) / 6000)
    _criterion(9, "compute m=6 n=1000 under ten seconds with exact output",
               exact and elapsed < 10, elapsed,
               completed.stderr.strip() or "output not exact")
    assert exact
    assert elapsed < 10
