"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and timings.  The heavy fixtures are session-cached, so the full gate
costs one build per complex.
"""

import resource
import time

import pytest

from striptc.certificates import verify_certificate
from striptc.chains import _CACHE, build_complex, get_complex
from striptc.cohomology import evaluate_witness, surviving_terms
from striptc.reports import dtc_value, reference_values, tc_value
from striptc.symbols import ComplexParams, cell_count

GRID_N7 = [(n, w) for n in range(1, 8) for w in range(1, n + 1)]
NARROW = [(n, w) for n in range(2, 8) for w in range(2, n)]  # n > w
WIDE = [(n, w) for w in range(2, 6) for n in range(2, w + 1)]  # n <= w
MAX_RSS_BYTES = 4 * 1024**3


def _line(num: int, ok: bool, detail: str) -> None:
    print(f"\nACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {detail}")


def stirling_poly(n):
    coeffs = [1]
    for k in range(1, n):
        coeffs = [
            (coeffs[i] if i < len(coeffs) else 0)
            + (k * coeffs[i - 1] if i >= 1 else 0)
            for i in range(len(coeffs) + 1)
        ]
    return coeffs


@pytest.fixture(scope="session")
def complex_8_2_timing():
    """Fresh timed build of the width-2 model on 8 disks (about 1.37M cells)."""
    t0 = time.perf_counter()
    cx = build_complex(ComplexParams(8, 2))
    betti = cx.betti()
    elapsed = time.perf_counter() - t0
    _CACHE[(8, 2)] = cx  # later chain-level checks reuse the build
    return cx, betti, elapsed


def test_criterion_1_boundary_squared_zero():
    t0 = time.perf_counter()
    ok = True
    for (n, w) in GRID_N7:
        cx = get_complex(ComplexParams(n, w))  # builds with the check enabled
        try:
            cx.verify_d_squared()
        except AssertionError:
            ok = False
    elapsed = time.perf_counter() - t0
    within = elapsed < 300
    _line(1, ok and within, f"d∘d = 0 on all (n,w), 1<=w<=n<=7, in {elapsed:.1f}s")
    assert ok
    assert within, f"criterion 1 exceeded 5 minutes: {elapsed:.1f}s"


def test_criterion_2_known_betti_tables():
    ok = True
    for n in range(1, 7):
        expected = stirling_poly(n)
        got = get_complex(ComplexParams(n, n)).betti()
        ok &= got == expected
    ok &= get_complex(ComplexParams(4, 4)).betti() == [1, 6, 11, 6]
    _line(2, ok, "betti of the n-wide model equals the point-space polynomial, n<=6")
    assert ok


def test_criterion_3_dimension_formula():
    ok = True
    for (n, w) in GRID_N7:
        params = ComplexParams(n, w)
        formula = params.top_dimension
        counts = [cell_count(params, d) for d in range(n)]
        top_nonempty = max(d for d, c in enumerate(counts) if c)
        b = get_complex(params).betti()
        top_betti = max(d for d, x in enumerate(b) if x)
        ok &= top_nonempty == formula == top_betti
    _line(3, ok, "top nonempty dimension and top Betti index equal n - ceil(n/w)")
    assert ok


def test_criterion_4_certificate_suite(complex_8_2_timing):
    chain_grid = (
        {(n, 2) for n in range(3, 9)}
        | {(n, 3) for n in range(4, 8)}
        | set(WIDE)  # small complexes: the oracle always fits there
    )
    ok = True
    for (n, w) in sorted(set(NARROW + WIDE) | chain_grid):
        report = verify_certificate(ComplexParams(n, w))
        ok &= report.decomposable_A
        ok &= report.decomposable_B
        ok &= report.disjoint_symbolic
        if (n, w) in chain_grid:
            ok &= report.disjoint_chain is True  # ran, and agrees
        ok &= report.consistent
    _line(4, ok, "all torus pairs verify; chain oracle agrees (w=2 n<=8, w=3 n<=7)")
    assert ok


def test_criterion_5_exact_values_narrow():
    ok = True
    for (n, w) in NARROW:
        hdim = ComplexParams(n, w).top_dimension
        for r in range(2, 6):
            rep = tc_value(n, w, r)
            ok &= rep.lower_tori == rep.upper_bgrt == r * hdim == rep.tc == rep.dtc
    spot = [
        tc_value(7, 3, 2).tc == 8,
        tc_value(7, 3, 3).tc == 12,
        all(tc_value(3, 2, r).tc == r for r in range(2, 6)),
    ]
    ok &= all(spot)
    _line(5, ok, "n > w: torus lower bound meets the CW upper bound at r(n-ceil(n/w))")
    assert ok


def test_criterion_6_wide_distributional_case():
    ok = True
    for (n, w) in WIDE:
        report = verify_certificate(ComplexParams(n, w), chain=False)
        ok &= report.passed_symbolic
        for r in range(2, 6):
            rep = dtc_value(n, w, r)
            ok &= rep.dtc == r * (n - 1) - 1
            ok &= report.lower_bound(r) == (r - 1) * (n - 1) + (n - 2) == rep.lower_tori
    _line(6, ok, "n <= w: dtc = r(n-1)-1 with the (n-1, n-2) pair certifying the bound")
    assert ok


def test_criterion_7_zero_divisor_witness():
    t0 = time.perf_counter()
    ok = True
    for m in range(1, 5):
        for l in range(1, m + 1):
            for r in range(2, 5):
                value = evaluate_witness(m, l, r)
                ok &= abs(value) == 1
                ok &= len(surviving_terms(m, l, r)) == 1
    elapsed = time.perf_counter() - t0
    within = elapsed < 30
    _line(7, ok and within, f"witness is +/-1 with one surviving term, in {elapsed:.2f}s")
    assert ok and within


def test_criterion_8_performance_target(complex_8_2_timing):
    cx, betti, elapsed = complex_8_2_timing
    peak = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss * 1024
    counts = cx.cell_counts()
    ok_cells = sum(counts) == 1_370_880
    ok_euler = cx.euler_characteristic() == sum(
        (-1) ** d * b for d, b in enumerate(betti)
    )
    ok_time = elapsed < 120
    ok_mem = peak < MAX_RSS_BYTES
    ok = ok_cells and ok_euler and ok_time and ok_mem
    _line(
        8,
        ok,
        f"(8,2): {sum(counts)} cells, betti={betti}, "
        f"{elapsed:.1f}s, peak rss {peak / 2**30:.2f} GiB",
    )
    assert ok_cells and ok_euler
    assert ok_time, f"build+betti took {elapsed:.1f}s (budget 120s)"
    assert ok_mem, f"peak rss {peak} exceeds 4 GiB"


def test_criterion_9_reference_tables():
    ok = True
    # points in the plane, classical and sequential
    for n in range(2, 7):
        vals = reference_values("F(n,R^m)", n=n, m=2, r=2)
        ok &= vals[0].value == 2 * n - 3
        ok &= vals[1].value == 2 * n - 3  # distributional
        for r in (3, 4):
            seq = reference_values("F(n,R^m)", n=n, m=2, r=r)
            ok &= seq[0].value == r * (n - 1) - 1
            ok &= seq[1].value == r * (n - 1) - 1
    # higher ambient dimensions: parity split
    for (n, m, r, expected) in [
        (4, 3, 2, 6), (4, 4, 2, 5), (3, 5, 3, 6), (3, 6, 3, 5),
    ]:
        ok &= reference_values("F(n,R^m)", n=n, m=m, r=r)[0].value == expected
    # strip spaces at two stops
    for n in range(2, 8):
        for w in range(2, n + 2):
            (v,) = reference_values("conf(n,w)", n=n, w=w)
            expected = (
                2 * n - 3 if n <= w else 2 * ComplexParams(n, w).top_dimension
            )
            ok &= v.value == expected
    # unordered width-2 strips with an odd disk count
    for m in range(1, 4):
        n = 2 * m + 1
        for r in (2, 3, 4):
            tcr, dtcr = reference_values("uconf(n,2)", n=n, r=r)
            ok &= tcr.value == r * m and dtcr.value == r * m
    _line(9, ok, "every tabulated reference value reproduces exactly")
    assert ok
