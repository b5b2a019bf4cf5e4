"""Residue-class counts and their generating polynomials in Z[x]/(x^(q-1) - 1).

For n >= 0, eps_j(n) counts the m in [0, n] with F_m(u_n) == root^j mod m,
and G_n(x) = sum_j eps_j(n) x^j.  The product formula states

    G_n == prod_{j=0}^{q-1} G_j ** e_j(n)   (mod x^(q-1) - 1),

where e_j(n) is the number of base-q digits of n equal to j.  Both sides are
kept as reduced coefficient vectors of length q-1, so congruence is equality.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import coefficient_classes
from .dvd_core import DvdModel, SplitMix64, digits_of
from .errors import LengthMismatchError
from .report import VerificationReport
from .words import DigitWord, concat, random_word, z_of


@dataclass(frozen=True)
class CyclicPoly:
    """Reduced class in Z[x]/(x^(q-1) - 1); coeffs[j] multiplies x^j."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a cyclic polynomial needs q-1 >= 1 coefficients")

    @property
    def q(self) -> int:
        return len(self.coeffs) + 1

    @classmethod
    def one(cls, q: int) -> "CyclicPoly":
        return cls((1,) + (0,) * (q - 2))

    def __mul__(self, other: "CyclicPoly") -> "CyclicPoly":
        return cyclic_mul(self, other)

    def __pow__(self, e: int) -> "CyclicPoly":
        out = CyclicPoly.one(self.q)
        for _ in range(e):
            out = cyclic_mul(out, self)
        return out

    def at_one(self) -> int:
        return sum(self.coeffs)

    def to_dict(self) -> dict:
        return {"q": self.q, "coeffs": list(self.coeffs)}

    @classmethod
    def from_dict(cls, d: dict) -> "CyclicPoly":
        poly = cls(tuple(d["coeffs"]))
        if poly.q != d["q"]:
            raise LengthMismatchError(f"q = {d['q']} needs {d['q'] - 1} coefficients")
        return poly

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
                continue
            mono = "x" if j == 1 else f"x^{j}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) or "0"


def cyclic_mul(a: CyclicPoly, b: CyclicPoly) -> CyclicPoly:
    n = len(a.coeffs)
    if len(b.coeffs) != n:
        raise LengthMismatchError(f"lengths {n} and {len(b.coeffs)} differ")
    out = [0] * n
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                if y:
                    out[(i + j) % n] += x * y
    return CyclicPoly(tuple(out))


@dataclass(frozen=True)
class DistributionCounts:
    n: int
    eps: tuple[int, ...]
    zero_count: int

    def to_dict(self) -> dict:
        return {"n": self.n, "eps": list(self.eps), "zero_count": self.zero_count}


@dataclass(frozen=True)
class DigitStats:
    e: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"e": list(self.e)}


def _bruteforce_counts(n: int, M: DvdModel) -> DistributionCounts:
    cls = coefficient_classes(n, M)
    nonzero = cls[cls >= 0]
    eps = np.bincount(nonzero, minlength=M.q - 1)
    return DistributionCounts(n, tuple(int(c) for c in eps), int((cls < 0).sum()))


def _digit_polys(M: DvdModel) -> list[CyclicPoly]:
    """Brute-forced G_0, ..., G_{q-1}, cached on the model."""
    cached = M.__dict__.get("_digit_genpolys")
    if cached is None:
        cached = [CyclicPoly(_bruteforce_counts(j, M).eps) for j in range(M.q)]
        M._digit_genpolys = cached
    return cached


def eps_counts(n: int, M: DvdModel, method: str = "bruteforce") -> DistributionCounts:
    """eps_0(n)..eps_{q-2}(n) plus the number of m <= n with F_m(u_n) == 0.

    ``bruteforce`` classifies every m in [0, n]; ``convolution`` multiplies
    the single-digit generating polynomials of n's digits.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if method == "bruteforce":
        return _bruteforce_counts(n, M)
    if method == "convolution":
        single = _digit_polys(M)
        acc = CyclicPoly.one(M.q)
        for d in digits_of(n, M.q):
            acc = cyclic_mul(acc, single[d])
        return DistributionCounts(n, acc.coeffs, n + 1 - acc.at_one())
    raise ValueError(f"unknown method {method!r}")


def gen_poly(n: int, M: DvdModel) -> CyclicPoly:
    return CyclicPoly(eps_counts(n, M, "bruteforce").eps)


def gamma(w: DigitWord, M: DvdModel) -> CyclicPoly:
    """Generating polynomial attached to a word: G_{z(w)}."""
    return gen_poly(z_of(w.check_alphabet(M.q), M.q), M)


def digit_stats(n: int, q: int) -> DigitStats:
    """Occurrences of each digit value in n's base-q expansion (e_0(0) = 1)."""
    e = [0] * q
    for d in digits_of(n, q):
        e[d] += 1
    return DigitStats(tuple(e))


def theorem_rhs(n: int, M: DvdModel) -> CyclicPoly:
    single = _digit_polys(M)
    acc = CyclicPoly.one(M.q)
    for j, e in enumerate(digit_stats(n, M.q).e):
        for _ in range(e):
            acc = cyclic_mul(acc, single[j])
    return acc


def verify_main_theorem(n: int, M: DvdModel) -> VerificationReport:
    lhs, rhs = gen_poly(n, M), theorem_rhs(n, M)
    if lhs != rhs:
        return VerificationReport("gw", False, 1, {
            "n": n, "gen_poly": list(lhs.coeffs), "product": list(rhs.coeffs)})
    return VerificationReport("gw", True, 1, details={"n": n, "poly": list(lhs.coeffs)})


def verify_main_theorem_range(N: int, M: DvdModel) -> VerificationReport:
    """verify_main_theorem for every n in [0, N], stopping at the first failure."""
    for n in range(N + 1):
        rep = verify_main_theorem(n, M)
        if not rep.ok:
            rep.checked = n + 1
            return rep
    return VerificationReport("gw", True, N + 1, details={"max": N})


def verify_counts_range(N: int, M: DvdModel) -> VerificationReport:
    """Conservation, unit-count product rule and method agreement for n <= N."""
    for n in range(N + 1):
        bf = eps_counts(n, M, "bruteforce")
        cv = eps_counts(n, M, "convolution")
        units = 1
        for d in digits_of(n, M.q):
            units *= d + 1
        if bf != cv or sum(bf.eps) + bf.zero_count != n + 1 or sum(bf.eps) != units:
            return VerificationReport("counts", False, n + 1, {
                "n": n, "bruteforce": bf.to_dict(), "convolution": cv.to_dict(),
                "unit_product": units})
    return VerificationReport("counts", True, N + 1, details={"max": N})


def verify_homomorphism_random(M: DvdModel, trials: int, seed: int,
                               max_deg: int = 3) -> VerificationReport:
    """gamma(a b) == gamma(a) * gamma(b) on random word pairs."""
    rng = SplitMix64(seed)
    for i in range(trials):
        a = random_word(rng, M.q, max_deg)
        b = random_word(rng, M.q, max_deg)
        lhs = gamma(concat(a, b), M)
        rhs = cyclic_mul(gamma(a, M), gamma(b, M))
        if lhs != rhs:
            return VerificationReport("homomorphism", False, i + 1, {
                "alpha": str(a), "beta": str(b),
                "gamma_concat": list(lhs.coeffs), "product": list(rhs.coeffs)})
    return VerificationReport("homomorphism", True, trials,
                              details={"seed": seed, "max_deg": max_deg})
