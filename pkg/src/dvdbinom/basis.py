"""The node-product basis F_n and its residues.

F_0 = 1 and, for n >= 1,

    F_n(x) = prod_{k=0}^{n-1} (x - u_k) / (u_n - u_k).

``fn_eval_exact`` multiplies these factors out in the model's ring.  The fast
path never leaves the residue field: F_n(x) mod m is the product over base-q
digit positions of F_{n_i}(x_i) mod m, where x_i are the pi-adic digits of x,
and each single-digit factor is looked up in a q x q table.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .dvd_core import DvdModel, VElement, digits_of
from .report import VerificationReport


def _node_denominator(M: DvdModel, n: int):
    """prod_{k<n} (u_n - u_k) as a ring element, cached on the model."""
    cache = M.__dict__.setdefault("_node_den_cache", {})
    den = cache.get(n)
    if den is None:
        un = M._u_ring(n)
        den = M._one
        for k in range(n):
            den = M._mul(den, M._sub(un, M._u_ring(k)))
        cache[n] = den
    return den


def fn_eval_exact(n: int, x, M: DvdModel | None = None) -> VElement:
    """F_n(x) as an unreduced fraction, computed from the definition."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if M is None:
        M = x.model
    x = M.coerce(x)
    num = M._one
    for k in range(n):
        num = M._mul(num, M._sub(x.num, M._mul(M._u_ring(k), x.den)))
    den = _node_denominator(M, n)
    for _ in range(n):
        den = M._mul(den, x.den)
    return VElement(M, num, den)


def fn_exact_values(x, nmax: int, M: DvdModel | None = None) -> Iterator[VElement]:
    """Yield F_0(x), F_1(x), ..., F_nmax(x), sharing the numerator products."""
    if M is None:
        M = x.model
    x = M.coerce(x)
    num = M._one
    xden_pow = M._one
    for n in range(nmax + 1):
        yield VElement(M, num, M._mul(_node_denominator(M, n), xden_pow))
        num = M._mul(num, M._sub(x.num, M._mul(M._u_ring(n), x.den)))
        xden_pow = M._mul(xden_pow, x.den)


def digit_coeff_table(M: DvdModel) -> list[list[int]]:
    """T[a][b] = F_a(u_b) mod m for digits a, b, computed in the residue field."""
    cached = M.__dict__.get("_digit_table")
    if cached is not None:
        return cached
    F, rho, q = M.field, M.rep_residues, M.q
    T = [[0] * q for _ in range(q)]
    for a in range(q):
        for b in range(q):
            val = 1
            for k in range(a):
                val = F.mul(val, F.div(F.sub(rho[b], rho[k]), F.sub(rho[a], rho[k])))
                if val == 0:
                    break
            T[a][b] = val
    M._digit_table = T
    return T


def digit_class_table(M: DvdModel) -> np.ndarray:
    """dlog of each entry of ``digit_coeff_table``, -1 where the entry is 0."""
    cached = M.__dict__.get("_digit_class_table")
    if cached is None:
        T = np.array(digit_coeff_table(M), dtype=np.int64)
        cached = np.where(T == 0, -1, M.field.log_table[T])
        cached.flags.writeable = False
        M._digit_class_table = cached
    return cached


def _digit_product(F, T, n: int, arg_digits, q: int) -> int:
    r = 1
    i = 0
    while n:
        n, a = divmod(n, q)
        b = arg_digits[i] if i < len(arg_digits) else 0
        t = T[a][b]
        if t == 0:
            return 0
        if t != 1:
            r = F.mul(r, t)
        i += 1
    return r


def fn_residue(n: int, m: int, M: DvdModel) -> int:
    """F_n(u_m) mod m by the digit product."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    q = M.q
    T = digit_coeff_table(M)
    F = M.field
    r = 1
    while n:
        n, a = divmod(n, q)
        m, b = divmod(m, q)
        t = T[a][b]
        if t == 0:
            return 0
        if t != 1:
            r = F.mul(r, t)
    return r


def fn_residue_at(n: int, x, M: DvdModel | None = None) -> int:
    """F_n(x) mod m for an integral x, via its first len(digits_of(n)) digits."""
    if M is None:
        M = x.model
    x = M.coerce(x)
    digits = M.expand(x, len(digits_of(n, M.q)))
    return _digit_product(M.field, digit_coeff_table(M), n, digits, M.q)


def coefficient_classes(n: int, M: DvdModel) -> np.ndarray:
    """Classes of F_m(u_n) for m = 0..n: dlog in [0, q-2], or -1 for residue 0."""
    q = M.q
    C = digit_class_table(M)
    m = np.arange(n + 1, dtype=np.int64)
    acc = np.zeros(n + 1, dtype=np.int64)
    zero = np.zeros(n + 1, dtype=bool)
    for i, b in enumerate(digits_of(n, q)):
        c = C[(m // q**i) % q, b]
        zero |= c < 0
        acc += c
    acc %= q - 1
    acc[zero] = -1
    return acc


def class_triangle(N: int, M: DvdModel) -> np.ndarray:
    """(N+1) x (N+1) array; row n, column m holds the class of F_m(u_n).

    Entries with m > n are -1, since F_m vanishes at u_0..u_{m-1}.
    """
    q = M.q
    C = digit_class_table(M)
    idx = np.arange(N + 1, dtype=np.int64)
    acc = np.zeros((N + 1, N + 1), dtype=np.int64)
    zero = np.zeros((N + 1, N + 1), dtype=bool)
    width = len(digits_of(N, q))
    for i in range(width):
        dig = (idx // q**i) % q
        c = C[dig[None, :], dig[:, None]]
        zero |= c < 0
        acc += c
    acc %= q - 1
    acc[zero] = -1
    return acc


def verify_lucas(M: DvdModel, N: int) -> VerificationReport:
    """Digit-product residues against the exact oracle for all 0 <= n, m <= N."""
    checked = 0
    for m in range(N + 1):
        for n, value in enumerate(fn_exact_values(M.u(m), N, M)):
            checked += 1
            fast = fn_residue(n, m, M)
            if value.valuation() < 0 or fast != value.residue():
                return VerificationReport("lucas", False, checked, {
                    "n": n, "m": m, "fast": fast, "exact": str(value),
                    "valuation": value.valuation()})
    return VerificationReport("lucas", True, checked, details={"max": N})
