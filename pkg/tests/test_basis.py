import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dvdbinom import (
    class_triangle,
    coefficient_classes,
    digit_coeff_table,
    digits_of,
    fn_eval_exact,
    fn_exact_values,
    fn_residue,
    fn_residue_at,
    make_model,
    verify_lucas,
)

from test_dvd_core import ALL_MODELS, _random_element


def test_exact_examples():
    Z3 = make_model("zp", 3)
    assert fn_eval_exact(2, Z3.u(5)) == 10
    for M in ALL_MODELS:
        x = M.element(M.reps[-1])
        assert fn_eval_exact(0, x) == 1
        for n in range(1, 12):
            for h in range(n):
                assert fn_eval_exact(n, M.u(h)).is_zero()
            assert fn_eval_exact(n, M.u(n)) == 1


def test_exact_values_generator_matches_single_calls():
    for M in ALL_MODELS:
        x = M.u(7) + M.uniformizer * M.reps[1]
        values = list(fn_exact_values(x, 15, M))
        assert all(v == fn_eval_exact(n, x, M) for n, v in enumerate(values))


def test_digit_table_examples():
    T = digit_coeff_table(make_model("zp", 3))
    assert T[1][2] == 2
    assert T[2][1] == 0


@pytest.mark.parametrize("M", ALL_MODELS, ids=repr)
def test_digit_table_structure(M):
    T = digit_coeff_table(M)
    q = M.q
    for a in range(q):
        assert T[0][a] == 1
        assert T[a][a] == 1
        for b in range(q):
            assert (T[a][b] == 0) == (b < a)
            assert T[a][b] == fn_eval_exact(a, M.u(b)).residue()


def test_fn_residue_examples():
    assert fn_residue(4, 5, make_model("zp", 3)) == 2
    assert fn_residue(3, 6, make_model("zp", 5)) == 0
    F2 = make_model("fqt", 2)
    assert fn_residue(2, 3, F2) == 1
    assert fn_eval_exact(2, F2.u(3)) == 1


def test_fn_residue_at_examples():
    Z3 = make_model("zp", 3)
    assert fn_eval_exact(2, Z3.element(-1)) == 1
    assert fn_residue_at(2, Z3.element(-1)) == 1
    for M in ALL_MODELS:
        assert fn_residue_at(0, M.element(M.reps[1])) == 1
        for n in range(25):
            for m in range(25):
                assert fn_residue_at(n, M.u(m)) == fn_residue(n, m, M)


@pytest.mark.parametrize("M", ALL_MODELS, ids=repr)
def test_oracle_equivalence_randomized_grid(M):
    N = 60 if M.kind == "zp" else 40
    rep = verify_lucas(M, N)
    assert rep.ok, rep.counterexample


@pytest.mark.parametrize("M", ALL_MODELS, ids=repr)
def test_integrality_on_grid(M):
    for m in range(30):
        for v in fn_exact_values(M.u(m), 30, M):
            assert v.valuation() >= 0


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(ALL_MODELS), st.integers(0, 30), st.data())
def test_fn_residue_at_arbitrary_elements(M, n, data):
    x = _random_element(M, data, allow_neg=False)
    exact = fn_eval_exact(n, x, M)
    assert exact.valuation() >= 0
    assert fn_residue_at(n, x) == exact.residue()


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_classical_binomials(p):
    M = make_model("zp", p)
    for m in range(40):
        for n, v in enumerate(fn_exact_values(M.u(m), 40, M)):
            assert v.num == math.comb(m, n) * v.den


@pytest.mark.parametrize("M", ALL_MODELS, ids=repr)
def test_row_nonzero_count_is_digit_domination(M):
    q = M.q
    for n in range(200):
        nd = digits_of(n, q)
        dominated = sum(
            all(a <= b for a, b in zip(digits_of(m, q) + [0] * len(nd), nd))
            for m in range(n + 1))
        nonzero = sum(fn_residue(m, n, M) != 0 for m in range(n + 1))
        units = math.prod(d + 1 for d in nd)
        assert nonzero == dominated == units


@pytest.mark.parametrize("M", ALL_MODELS, ids=repr)
def test_vectorized_classes_match_scalar(M):
    F = M.field
    tri = class_triangle(80, M)
    for n in range(81):
        row = coefficient_classes(n, M)
        assert (tri[n, : n + 1] == row).all()
        assert (tri[n, n + 1:] == -1).all()
        for m in range(n + 1):
            r = fn_residue(m, n, M)
            assert row[m] == (-1 if r == 0 else F.dlog(r))


def test_triangle_matches_pascal_mod_p():
    for p in (2, 3, 5, 7):
        M = make_model("zp", p)
        g = M.field.primitive_root
        log = {pow(g, j, p): j for j in range(p - 1)}
        tri = class_triangle(60, M)
        expect = np.array([[log.get(math.comb(n, m) % p, -1) for m in range(61)]
                           for n in range(61)])
        assert (tri == expect).all()
