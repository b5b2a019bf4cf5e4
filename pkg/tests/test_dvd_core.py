import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from dvdbinom import (
    digits_of,
    expand,
    make_model,
    n_shift,
    n_slice,
    residue,
    u_of,
    valuation,
    verify_vwdwo,
)
from dvdbinom import fqpoly
from dvdbinom.dvd_core import SplitMix64, from_digits, p_valuation, random_reps
from dvdbinom.errors import ConfigError, NotIntegralError

MODEL_CONFIGS = [("zp", 2, 1, None), ("zp", 3, 1, None), ("zp", 5, 1, None),
               ("fqt", 2, 1, None), ("fqt", 3, 1, None), ("fqt", 2, 2, [1, 1, 1])]


def models(seeds=(None, 7)):
    return [make_model(*cfg, seed=s) for cfg in MODEL_CONFIGS for s in seeds]


ALL_MODELS = models()


@pytest.mark.parametrize("n,q,digits", [(11, 3, [2, 0, 1]), (0, 5, [0]), (8, 5, [3, 1])])
def test_digits_of(n, q, digits):
    assert digits_of(n, q) == digits
    assert from_digits(digits, q) == n


def test_n_shift_examples():
    assert n_shift(11, 1, 3) == 3
    assert n_shift(11, 0, 3) == 11
    assert n_shift(8, 3, 5) == 0


def test_n_slice_examples():
    assert n_slice(11, 1, 0, 3) == 2
    assert n_slice(12345, 40, 0, 7) == 12345
    assert n_slice(8, 0, 1, 5) == 1


@given(st.integers(0, 10**6), st.integers(1, 8), st.integers(2, 9))
def test_n_shift_recursion(n, s, q):
    assert n_shift(n, s, q) == n_shift(n_shift(n, 1, q), s - 1, q)
    assert n_shift(n, s, q) == from_digits(digits_of(n, q)[s:] or [0], q)


@given(st.integers(0, 10**6), st.integers(0, 6), st.integers(0, 6), st.integers(2, 9))
def test_n_slice_digit_window(n, r, s, q):
    digits = digits_of(n, q) + [0] * (r + s + 1)
    assert n_slice(n, r, s, q) == sum(digits[i + s] * q**i for i in range(r + 1))


def test_u_of_examples():
    Z3 = make_model("zp", 3)
    assert u_of(7, Z3) == 7
    F2 = make_model("fqt", 2)
    assert str(u_of(3, F2)) == "1+1*t"
    for M in ALL_MODELS:
        assert u_of(0, M).is_zero()


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_u_of_default_reps_is_identity(p):
    M = make_model("zp", p)
    assert all(M.u(n).num == n for n in range(10**4 + 1))


def test_valuation_examples():
    assert valuation(make_model("zp", 3).element(18, 5)) == 2
    F3 = make_model("fqt", 3)
    assert valuation(F3.parse("t^2/(1+t)")) == 2
    assert valuation(F3.zero) == math.inf
    assert valuation(make_model("zp", 5).element(0)) == math.inf


def test_residue_examples():
    assert residue(make_model("zp", 3).element(10)) == 1
    with pytest.raises(NotIntegralError):
        residue(make_model("zp", 5).element(1, 5))
    F2 = make_model("fqt", 2)
    assert residue(F2.parse("(1+t)/(1+t+t^2)")) == 1
    assert residue(F2.parse("t")) == 0


def test_non_reduced_representation():
    Z3 = make_model("zp", 3)
    x = Z3.element(18 * 9, 6 * 9)  # 3 in disguise
    assert x.valuation() == 1 and x.residue() == 0
    y = Z3.element(10 * 27, 27)
    assert y.valuation() == 0 and y.residue() == 1
    assert str(x) == "3"


def test_expand_examples():
    Z3 = make_model("zp", 3)
    assert expand(Z3.element(-1), 3) == [2, 2, 2]
    assert expand(u_of(5, Z3), 2) == [2, 1]
    for M in ALL_MODELS:
        assert expand(M.zero, 2) == [0, 0]
    with pytest.raises(NotIntegralError):
        expand(Z3.element(1, 3), 2)


def test_expand_truncation_congruence():
    # x == sum r_{d_i} p^i  (mod p^k) for rationals with unit denominators
    Z5 = make_model("zp", 5, seed=11)
    for num, den in [(-1, 1), (1, 3), (7, 2), (-13, 4), (250, 7)]:
        x = Z5.element(num, den)
        k = 6
        d = expand(x, k)
        approx = sum(Z5.reps[di] * 5**i for i, di in enumerate(d))
        assert (num - approx * den) % 5**k == 0


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALL_MODELS), st.integers(0, 5000))
def test_round_trip(M, n):
    digits = digits_of(n, M.q)
    assert expand(u_of(n, M), len(digits)) == digits


def _random_element(M, data, allow_neg=True):
    if M.kind == "zp":
        num = data.draw(st.integers(-10**6, 10**6))
        den = data.draw(st.integers(1, 10**4))
        if not allow_neg:
            den = den * M.p + 1
        return M.element(num, den)
    coeffs = st.lists(st.integers(0, M.q - 1), max_size=6)
    num = fqpoly.trim(data.draw(coeffs))
    den = fqpoly.trim(data.draw(coeffs))
    assume(den)
    if not allow_neg:
        den = fqpoly.add(M.field, fqpoly.shift_up(den, 1), (1,))
    return M.element(num, den)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(ALL_MODELS), st.data())
def test_valuation_properties(M, data):
    x, y = _random_element(M, data), _random_element(M, data)
    assume(not x.is_zero() and not y.is_zero())
    assert (x * y).valuation() == x.valuation() + y.valuation()
    s = (x + y).valuation()
    assert s >= min(x.valuation(), y.valuation())
    if x.valuation() != y.valuation():
        assert s == min(x.valuation(), y.valuation())


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(ALL_MODELS), st.data())
def test_residue_multiplicative(M, data):
    x = _random_element(M, data, allow_neg=False)
    y = _random_element(M, data, allow_neg=False)
    assert (x * y).residue() == M.field.mul(x.residue(), y.residue())
    assert (x + y).residue() == M.field.add(x.residue(), y.residue())


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(ALL_MODELS), st.data())
def test_text_round_trip(M, data):
    x = _random_element(M, data)
    assert M.parse(str(x)) == x


def test_vwdwo_example():
    Z3 = make_model("zp", 3)
    assert (Z3.u(4) - Z3.u(1)).valuation() == 1
    assert verify_vwdwo(make_model("zp", 5, seed=2024), 100, 3).ok


@pytest.mark.parametrize("M", ALL_MODELS, ids=repr)
def test_vwdwo_all_models(M):
    rep = verify_vwdwo(M, 60, 3)
    assert rep.ok, rep.counterexample


def test_vwdwo_detects_bad_sequence():
    # reps that are not a full residue system are rejected up front
    with pytest.raises(ConfigError):
        make_model("zp", 3, reps=[0, 1, 4])
    with pytest.raises(ConfigError):
        make_model("zp", 3, reps=[3, 1, 2])
    with pytest.raises(ConfigError):
        make_model("zp", 3, reps=[0, 3, 2])
    with pytest.raises(ConfigError):
        make_model("fqt", 2, reps=[(), (0, 1)])


def test_splitmix64_reference_values():
    rng = SplitMix64(0)
    assert rng.next() == 0xE220A8397B1DCDAF
    assert rng.next() == 0x6E789E6AA1B965F4
    assert rng.next() == 0x06C45D188009454F


def test_random_reps_deterministic_and_valid():
    for kind, p, d, mod in MODEL_CONFIGS:
        F = make_model(kind, p, d, mod).field
        a = random_reps(F, kind, 99)
        assert a == random_reps(F, kind, 99)
        M = make_model(kind, p, d, mod, reps=a)
        assert sorted(M.rep_residues) == list(range(F.q))
    assert random_reps(make_model("zp", 5).field, "zp", 1) != \
        random_reps(make_model("zp", 5).field, "zp", 2)


@given(st.integers(1, 10**30), st.sampled_from([2, 3, 5, 7, 11]))
def test_p_valuation(n, p):
    v = 0
    m = n
    while m % p == 0:
        m //= p
        v += 1
    assert p_valuation(n, p) == v
    assert p_valuation(n * p**45, p) == v + 45


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([(2, 1), (3, 1), (2, 2), (3, 2), (2, 3)]), st.data())
def test_fqpoly_mul_matches_schoolbook(pd, data):
    M = make_model("fqt", *pd)
    F = M.field
    coeffs = st.lists(st.integers(0, F.q - 1), max_size=8)
    a, b = fqpoly.trim(data.draw(coeffs)), fqpoly.trim(data.draw(coeffs))
    naive = [0] * max(len(a) + len(b) - 1, 0)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            naive[i + j] = F.add(naive[i + j], F.mul(x, y))
    assert fqpoly.mul(F, a, b) == fqpoly.trim(naive)
    if b:
        quo, rem = fqpoly.divmod_(F, a, b)
        assert fqpoly.add(F, fqpoly.mul(F, quo, b), rem) == a
        assert len(rem) < len(b)
