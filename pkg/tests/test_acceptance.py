"""Exit criteria: each test runs one criterion at full scale and records a
PASS/FAIL line, printed in the terminal summary."""

import math
import time

import pytest

from dvdbinom import fn_exact_values, make_model, verify_lucas, verify_vwdwo
from dvdbinom.genpoly import (
    verify_counts_range,
    verify_homomorphism_random,
    verify_main_theorem_range,
)
from dvdbinom.words import verify_bijection_random

from conftest import ACCEPTANCE_LINES, all_configs


def record(number, title, ok, elapsed, budget, note=""):
    within = budget is None or elapsed < budget
    status = "PASS" if ok and within else "FAIL"
    limit = "" if budget is None else f" (limit {budget:.0f} s)"
    line = f"[{status}] {number}. {title}: {elapsed:.2f} s{limit}"
    if note:
        line += f" -- {note}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, note
    assert within, f"took {elapsed:.1f} s, limit {budget} s"


@pytest.fixture(scope="module")
def grid():
    return all_configs()


def test_1_lucas_rational_model():
    t0 = time.perf_counter()
    reports = [verify_lucas(make_model("zp", p), 200) for p in (2, 3, 5, 7)]
    bad = [r.counterexample for r in reports if not r.ok]
    record(1, "Lucas analogue, zp p in {2,3,5,7}, n,m <= 200", not bad,
           time.perf_counter() - t0, 10, str(bad[:1]) if bad else "")


def test_2_lucas_function_field_model():
    t0 = time.perf_counter()
    models = [make_model("fqt", 2), make_model("fqt", 3), make_model("fqt", 2, 2, [1, 1, 1])]
    reports = [verify_lucas(M, 100) for M in models]
    bad = [r.counterexample for r in reports if not r.ok]
    record(2, "Lucas analogue, fqt q in {2,3,4}, n,m <= 100", not bad,
           time.perf_counter() - t0, 30, str(bad[:1]) if bad else "")


def test_3_classical_binomials():
    t0 = time.perf_counter()
    bad = None
    for p in (2, 3, 5, 7):
        M = make_model("zp", p)
        for m in range(121):
            for n, v in enumerate(fn_exact_values(M.u(m), 120, M)):
                if v.num != math.comb(m, n) * v.den:
                    bad = bad or (p, n, m)
    record(3, "F_n(u_m) == C(m, n), zp default reps, n,m <= 120", bad is None,
           time.perf_counter() - t0, 5, f"first mismatch {bad}" if bad else "")


def test_4_main_theorem(grid):
    t0 = time.perf_counter()
    bad = [(label, r.counterexample) for label, M in grid
           if not (r := verify_main_theorem_range(2000, M)).ok]
    record(4, f"product formula for G_n, n <= 2000, {len(grid)} configurations",
           not bad, time.perf_counter() - t0, 60, str(bad[:1]) if bad else "")


def test_5_psi_bijection(grid):
    t0 = time.perf_counter()
    bad = [(label, r.counterexample) for label, M in grid
           if not (r := verify_bijection_random(M, trials=100, seed=2020, max_deg=3)).ok]
    record(5, f"psi bijection and convolution, 100 word pairs x {len(grid)} configurations",
           not bad, time.perf_counter() - t0, 30, str(bad[:1]) if bad else "")


def test_6_gamma_homomorphism(grid):
    t0 = time.perf_counter()
    bad = [(label, r.counterexample) for label, M in grid
           if not (r := verify_homomorphism_random(M, trials=200, seed=6)).ok]
    record(6, f"Gamma homomorphism, 200 word pairs x {len(grid)} configurations",
           not bad, time.perf_counter() - t0, None, str(bad[:1]) if bad else "")


def test_7_conservation_and_counting():
    t0 = time.perf_counter()
    r = verify_counts_range(5000, make_model("zp", 3))
    record(7, "count conservation and bruteforce == convolution, zp p=3, n <= 5000",
           r.ok, time.perf_counter() - t0, 20, str(r.counterexample) if not r.ok else "")


def test_8_very_well_distributed(grid):
    t0 = time.perf_counter()
    bad = [(label, r.counterexample) for label, M in grid
           if not (r := verify_vwdwo(M, 200, 3)).ok]
    record(8, f"very well distributed u_n, N=200, kmax=3, {len(grid)} configurations",
           not bad, time.perf_counter() - t0, None, str(bad[:1]) if bad else "")
