"""Dense polynomials in t over a ResidueField.

A polynomial is a tuple of field codes, coefficient of t^i at index i, with
no trailing zeros; the zero polynomial is ().  Multiplication splits each
coefficient into its d base-p digits and convolves digit layers with numpy,
so it stays fast for the long products built by the exact basis oracle.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .residue_field import ResidueField

Poly = tuple

ZERO: Poly = ()


def trim(c: Sequence[int]) -> Poly:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(int(x) for x in c[:n])


def const(a: int) -> Poly:
    return (a,) if a else ()


def add(F: ResidueField, a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = F.add(out[i], y)
    return trim(out)


def neg(F: ResidueField, a: Poly) -> Poly:
    return tuple(F.neg(x) for x in a)


def sub(F: ResidueField, a: Poly, b: Poly) -> Poly:
    return add(F, a, neg(F, b))


def scale(F: ResidueField, a: Poly, c: int) -> Poly:
    return trim([F.mul(x, c) for x in a])


def _layers(F: ResidueField, a: Poly) -> np.ndarray:
    arr = np.asarray(a, dtype=np.int64)
    return np.stack([(arr // F.p**i) % F.p for i in range(F.d)])


def mul(F: ResidueField, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ZERO
    p, d = F.p, F.d
    if d == 1:
        out = np.convolve(np.asarray(a, dtype=np.int64),
                          np.asarray(b, dtype=np.int64)) % p
        return trim(out.tolist())
    A, B = _layers(F, a), _layers(F, b)
    n = len(a) + len(b) - 1
    rows = np.zeros((2 * d - 1, n), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            rows[i + j] += np.convolve(A[i], B[j])
    rows %= p
    # y^d = -(modulus[0] + ... + modulus[d-1] y^(d-1))
    for r in range(2 * d - 2, d - 1, -1):
        top = rows[r]
        for k in range(d):
            if F.modulus[k]:
                rows[r - d + k] -= F.modulus[k] * top
        rows[r - d:r] %= p
    weights = np.array([p**i for i in range(d)], dtype=np.int64)
    return trim((weights @ rows[:d]).tolist())


def order(a: Poly) -> int | None:
    """t-adic order; None for the zero polynomial."""
    for i, c in enumerate(a):
        if c:
            return i
    return None


def low_coeff(a: Poly) -> int:
    """Lowest nonzero coefficient (0 for the zero polynomial)."""
    for c in a:
        if c:
            return c
    return 0


def shift_down(a: Poly, k: int) -> Poly:
    """a / t^k; the caller guarantees t^k divides a."""
    return a[k:]


def shift_up(a: Poly, k: int) -> Poly:
    return (0,) * k + a if a else ZERO


def to_text(a: Poly) -> str:
    if not a:
        return "0"
    terms = []
    for i, c in enumerate(a):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{c}*t")
        else:
            terms.append(f"{c}*t^{i}")
    return "+".join(terms)


def from_text(F: ResidueField, s: str) -> Poly:
    """Parse the output of to_text; also accepts bare "t", "t^k", "c*t"."""
    s = s.replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    coeffs: dict[int, int] = {}
    for term in s.split("+"):
        if not term:
            raise ValueError(f"malformed polynomial {s!r}")
        if "t" in term:
            head, _, power = term.partition("t")
            head = head.rstrip("*")
            c = int(head) if head else 1
            if power:
                if not power.startswith("^"):
                    raise ValueError(f"malformed term {term!r}")
                k = int(power[1:])
            else:
                k = 1
        else:
            c, k = int(term), 0
        if not 0 <= c < F.q:
            raise ValueError(f"coefficient {c} is not a code of F_{F.q}")
        coeffs[k] = F.add(coeffs.get(k, 0), c)
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return trim(out)


def divmod_(F: ResidueField, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = F.inv(b[-1])
    rem = list(a)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    for shift in range(len(a) - len(b), -1, -1):
        c = F.mul(rem[shift + len(b) - 1], inv_lead)
        if c:
            quot[shift] = c
            for i, bi in enumerate(b):
                rem[shift + i] = F.sub(rem[shift + i], F.mul(c, bi))
    return trim(quot), trim(rem)


def gcd(F: ResidueField, a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero only when both inputs are zero)."""
    while b:
        a, b = b, divmod_(F, a, b)[1]
    return scale(F, a, F.inv(a[-1])) if a else a
