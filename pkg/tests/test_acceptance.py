"""End-to-end acceptance gate.

Each test prints one numbered pass/fail line on the real stdout so the
verdicts survive pytest's capture.  The golden values are frozen here and
must match bit for bit; there is no tolerance anywhere.
"""
from __future__ import annotations

import math
import os
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from f2cover.bounds import (
    _closed_form_rules,
    bundled_search_anchors,
    format_table,
    hamming_ceil,
    lb_double_count,
    lb_hamming_s0,
    n0_report,
    origin_mult_floor,
    propagate,
)
from f2cover.codes import cover_from_code, code_from_cover, golay_generator, min_distance
from f2cover.constructions import (
    diagonal_cover,
    gv_random_cover,
    lemma31_cover,
    smax_cover,
    thm_a_cover,
)
from f2cover.covers import restriction_census, verify
from f2cover.gf2core import GFVector
from f2cover.solver import solve_g, solve_min

LONG = os.environ.get("F2COVER_LONG") == "1"

T1_ROWS = {
    3: [6, 7, 9, 11, 13, 14, 16, 18, 20, 21, 23, 25, 27, 28],
    4: [7, 8, 10, 12, 14, 15, 17, 19, 21, 23, 25, 27, 29, 30],
    5: [8, 10, 11, 13, 15, 16, 18, 20, 22, 24, 26, 28, 30, 31],
    6: [9, 11, 13, 14, 16, 18, 20, 22, 23, 25, 27, 29, 31, 32],
}
TABLE1 = {(n, k): v for n, row in T1_ROWS.items() for k, v in zip(range(3, 17), row)}
T1_STARS = {(3, 3), (4, 3), (5, 3), (5, 4), (6, 3), (6, 4), (6, 5)}

T2_ROWS = {
    6: [9, 11, 13, 14, 16, 18, 20, 22],
    7: [10, 12, 14, 16, 17, 19, 21, 23],
    8: [11, 13, 15, 17, 19, 20, 22, 24],
    9: [12, 14, 16, 18, 20, 21, 23, 25],
    10: [13, 15, 17, 19, 21, 22, 24, 26],
    11: [14, 16, 18, 20, 22, 23, 25, 27],
    12: [15, 17, 19, 21, 23, 24, 26, 28],
}
TABLE2 = {(n, k): v for n, row in T2_ROWS.items() for k, v in zip(range(3, 11), row)}
T2_STARS = (
    {(6, k) for k in (3, 4, 5)}
    | {(7, k) for k in (3, 4, 5, 6)}
    | {(n, k) for n in range(8, 13) for k in range(3, 8)}
)

# Cells the search solver must close in the default tier, with the frozen
# minimum sizes.  The two larger cells live in the opt-in long tier below.
SEARCH_CELLS = (
    [(3, k) for k in range(3, 17)]
    + [(4, k) for k in range(3, 9)]
    + [(5, 3), (5, 4), (5, 5), (6, 3)]
)


@contextmanager
def _check(num: int, label: str):
    try:
        yield
    except BaseException:
        print(f"acceptance {num} ({label}): FAIL", file=sys.__stdout__, flush=True)
        raise
    print(f"acceptance {num} ({label}): PASS", file=sys.__stdout__, flush=True)


def _csv_rows(values: dict, stars: set, ns: range, ks: range) -> list[str]:
    rows = ["n\\k," + ",".join(str(k) for k in ks)]
    for n in ns:
        cells = [
            f"{values[(n, k)]}*" if (n, k) in stars else str(values[(n, k)])
            for k in ks
        ]
        rows.append(f"{n}," + ",".join(cells))
    return rows


def test_dense_regime_family_is_extremal():
    with _check(1, "dense regime family"):
        t0 = time.perf_counter()
        cells = 0
        for n in range(2, 9):
            for d in range(1, n):
                for k in range(1 << (n - d - 1), (1 << (n - d)) + 4):
                    C = thm_a_cover(n, k, d)
                    want = (k << d) - (k >> (n - d))
                    assert C.size == want, (n, k, d, C.size, want)
                    assert verify(C, k).is_cover_for(k), (n, k, d)
                    assert lb_double_count(n, k, d, 0) == want, (n, k, d)
                    cells += 1
        elapsed = time.perf_counter() - t0
        assert cells == 359, cells
        assert elapsed < 30.0, elapsed


def test_search_solver_reproduces_small_table():
    with _check(2, "small table search"):
        for n, k in SEARCH_CELLS:
            t0 = time.perf_counter()
            res = solve_min(n, k, 1)
            elapsed = time.perf_counter() - t0
            assert res.status == "optimal", (n, k, res.status)
            assert res.value == TABLE1[(n, k)], (n, k, res.value)
            assert res.certificate is not None and res.certificate.size == res.value
            assert verify(res.certificate, k).is_cover_for(k), (n, k)
            assert res.assumptions == (), (n, k)
            assert elapsed < 600.0, (n, k, elapsed)


@pytest.mark.slow
@pytest.mark.skipif(not LONG, reason="set F2COVER_LONG=1 to run the long search tier")
def test_search_solver_long_tier():
    with _check(2, "long tier search"):
        for n, k, want in [(6, 5, 13), (6, 8, 18)]:
            res = solve_min(n, k, 1)
            assert res.status == "optimal", (n, k, res.status)
            assert res.value == want, (n, k, res.value)
            assert verify(res.certificate, k).is_cover_for(k), (n, k)


def test_golay_pipeline():
    with _check(3, "golay pipeline"):
        t0 = time.perf_counter()
        G = golay_generator()
        assert min_distance(G) == 8
        C = cover_from_code(G)
        assert C.n == 12 and C.d == 1 and C.size == 24
        report = verify(C, 8)
        assert report.is_cover_for(8) and report.origin_count == 0
        assert time.perf_counter() - t0 < 1.0


def test_table_regeneration_from_anchors():
    with _check(4, "table regeneration"):
        t0 = time.perf_counter()
        ledger = propagate(12, 16, 1, anchors=bundled_search_anchors())

        for (n, k), want in {**TABLE1, **TABLE2}.items():
            assert ledger.value(n, k) == want, (n, k)
        got = format_table(ledger, "csv", n_lo=3, n_hi=6, k_lo=3, k_hi=16)
        assert got.splitlines() == _csv_rows(TABLE1, T1_STARS, range(3, 7), range(3, 17))
        got = format_table(ledger, "csv", n_lo=6, n_hi=12, k_lo=3, k_hi=10)
        assert got.splitlines() == _csv_rows(TABLE2, T2_STARS, range(6, 13), range(3, 11))

        for n in range(6, 13):
            assert ledger.value(n, 8) == n + 12, n
        r4 = n0_report(4, ledger)
        assert r4.status == "determined" and r4.n0 == 5
        r5 = n0_report(5, ledger)
        assert r5.status == "determined" and r5.n0 == 6
        r8 = n0_report(8, ledger)
        assert r8.status == "at_least" and r8.n0_min >= 13
        assert time.perf_counter() - t0 < 5.0


def test_extremal_origin_family_and_exact_g():
    with _check(5, "extremal origin family"):
        for d in range(1, 4):
            for n in range(d, 9):
                for k in range(1, 6):
                    C = smax_cover(n, k, d)
                    want = n + (k << d) - d - 1
                    assert C.size == want, (n, k, d, C.size)
                    report = verify(C, k)
                    assert report.is_cover_for(k), (n, k, d)
                    assert report.origin_count == k - 1, (n, k, d)
        for n in range(1, 5):
            for k in range(1, 4):
                res = solve_g(n, k, 1, k - 1)
                assert res.status == "optimal", (n, k)
                assert res.value == n + 2 * k - 2, (n, k, res.value)


def test_code_cover_roundtrips():
    with _check(6, "code cover roundtrip"):
        for seed in range(200):
            n = 3 + seed % 8
            k = 2 + seed % 3
            C = gv_random_cover(n, k, seed=seed)
            code = code_from_cover(C)
            dist = min_distance(code)
            assert dist >= k, (n, k, seed, dist)
            back = cover_from_code(code)
            assert back.n == C.n and back.entries == C.entries, (n, k, seed)
            report = verify(back, dist)
            assert report.is_cover_for(dist) and report.min_nonzero == dist


def test_restriction_census_scan():
    with _check(7, "restriction census"):
        for seed in range(50):
            branch = seed % 3
            if branch == 0:
                C = gv_random_cover(3 + seed % 3, 2 + seed % 2, seed=seed)
            elif branch == 1:
                C = smax_cover(3 + seed % 3, 1 + seed % 5, 1 + seed % 2)
            else:
                C = diagonal_cover(4 + seed % 2)
            s = verify(C, 1).origin_count
            points = (1 << C.n) - 1
            diffs = [
                x - y
                for u in range(1, points + 1)
                for x, y in [restriction_census(C, GFVector(u, C.n))]
            ]
            assert max(diffs) >= 1, (seed, C.n, C.d)
            mean = Fraction(sum(diffs), points)
            assert mean == Fraction(C.size - (s << C.d), points), (seed, C.n, C.d)


def test_bound_rules_are_consistent():
    with _check(8, "bound consistency"):
        for d in range(1, 4):
            for n in range(d, 13):
                for k in range(1, 17):
                    rules = _closed_form_rules(n, k, d)
                    los = [v for _, side, v in rules if side in ("lo", "both")]
                    his = [v for _, side, v in rules if side in ("hi", "both")]
                    assert los and his, (n, k, d)
                    assert max(los) <= min(his), (n, k, d, rules)

        ledger = propagate(12, 16, 1, anchors=bundled_search_anchors())
        for n in range(9, 13):
            assert float(lb_hamming_s0(n, 3)) >= n + math.log2(n), n
            assert hamming_ceil(n, 3) > n + 3, n
            assert origin_mult_floor(n, 3, 1) == 1, n
            assert ledger.value(n, 3) == n + 3, n
