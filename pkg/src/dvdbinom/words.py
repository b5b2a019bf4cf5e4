"""Finite words over the representative set and the pairing map psi.

A word is stored by its digit labels: ``DigitWord((2, 0, 1))`` stands for
(u_2, u_0, u_1).  Concatenation makes words a semigroup; ``upsilon`` sends a
word to an element of V and ``z_of`` to the integer with the same base-q
digits, so that upsilon(w) == u_{z(w)}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basis import _digit_product, digit_coeff_table
from .dvd_core import DvdModel, SplitMix64, VElement
from .errors import OutOfRangeError
from .report import VerificationReport


@dataclass(frozen=True)
class DigitWord:
    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(c) for c in self.labels))
        if not self.labels:
            raise ValueError("a word has at least one letter")
        if min(self.labels) < 0:
            raise ValueError(f"negative label in {self.labels}")

    @property
    def deg(self) -> int:
        return len(self.labels)

    def check_alphabet(self, q: int) -> "DigitWord":
        if max(self.labels) >= q:
            raise ValueError(f"label {max(self.labels)} outside 0..{q - 1}")
        return self

    def __add__(self, other: "DigitWord") -> "DigitWord":
        return concat(self, other)

    def __str__(self):
        return ",".join(map(str, self.labels))

    @classmethod
    def parse(cls, s: str) -> "DigitWord":
        """Comma-separated labels, e.g. "2,0,1"."""
        return cls(tuple(int(c) for c in s.split(",")))


def concat(a: DigitWord, b: DigitWord) -> DigitWord:
    return DigitWord(a.labels + b.labels)


def upsilon(w: DigitWord, M: DvdModel) -> VElement:
    return M.from_labels(w.check_alphabet(M.q).labels)


def z_of(w: DigitWord, q: int) -> int:
    n = 0
    for c in reversed(w.labels):
        n = n * q + c
    return n


def strip_trailing_zeros(w: DigitWord) -> DigitWord:
    labels = list(w.labels)
    while len(labels) > 1 and labels[-1] == 0:
        labels.pop()
    return DigitWord(tuple(labels))


def random_word(rng: SplitMix64, q: int, max_deg: int) -> DigitWord:
    deg = 1 + rng.below(max_deg)
    return DigitWord(tuple(rng.below(q) for _ in range(deg)))


def _residues_over_word(w: DigitWord, M: DvdModel) -> list[int]:
    """F_m(upsilon(w)) mod m for m = 0..z(w), digits expanded once."""
    z = z_of(w, M.q)
    x = upsilon(w, M)
    digits = M.expand(x, max(w.deg, 1))
    T = digit_coeff_table(M)
    return [_digit_product(M.field, T, m, digits, M.q) for m in range(z + 1)]


def s_sets(w: DigitWord, M: DvdModel) -> tuple[list[list[int]], list[int]]:
    """All class sets of w at once: (S_0..S_{q-2}, indices with residue 0)."""
    F = M.field
    sets: list[list[int]] = [[] for _ in range(M.q - 1)]
    zeros = []
    for m, r in enumerate(_residues_over_word(w, M)):
        if r == 0:
            zeros.append(m)
        else:
            sets[F.dlog(r)].append(m)
    return sets, zeros


def s_set(w: DigitWord, j: int, M: DvdModel) -> list[int]:
    """{0 <= m <= z(w) : F_m(upsilon(w)) == root^j mod m}; j is read mod q-1."""
    return s_sets(w, M)[0][j % (M.q - 1)]


def psi(l: int, m: int, alpha: DigitWord, q: int) -> int:
    if not 0 <= l <= z_of(alpha, q):
        raise OutOfRangeError(f"l = {l} outside [0, z(alpha)]")
    if m < 0:
        raise OutOfRangeError(f"m = {m} is negative")
    return l + q**alpha.deg * m


def verify_bijection(alpha: DigitWord, beta: DigitWord, n: int,
                     M: DvdModel) -> VerificationReport:
    """psi maps the disjoint union of S_j(alpha) x S_{n-j}(beta) onto S_n(alpha beta).

    Also checks the cardinality convolution that the bijection implies.
    """
    q = M.q
    sa, _ = s_sets(alpha, M)
    sb, _ = s_sets(beta, M)
    gamma = concat(alpha, beta)
    target = s_set(gamma, n, M)
    zg = z_of(gamma, q)
    image: set[int] = set()
    checked = 0
    for j in range(q - 1):
        for l in sa[j]:
            for m in sb[(n - j) % (q - 1)]:
                t = psi(l, m, alpha, q)
                checked += 1
                if not 0 <= t <= zg:
                    return VerificationReport("bijection", False, checked, {
                        "alpha": str(alpha), "beta": str(beta), "n": n,
                        "pair": [l, m], "t": t, "reason": "image out of range"})
                if t in image:
                    return VerificationReport("bijection", False, checked, {
                        "alpha": str(alpha), "beta": str(beta), "n": n,
                        "pair": [l, m], "t": t, "reason": "collision"})
                image.add(t)
    if image != set(target):
        missing = sorted(set(target) - image)[:5]
        extra = sorted(image - set(target))[:5]
        return VerificationReport("bijection", False, checked, {
            "alpha": str(alpha), "beta": str(beta), "n": n,
            "missing": missing, "extra": extra, "reason": "image differs"})
    conv = sum(len(sa[j]) * len(sb[(n - j) % (q - 1)]) for j in range(q - 1))
    if conv != len(target):
        return VerificationReport("bijection", False, checked, {
            "alpha": str(alpha), "beta": str(beta), "n": n,
            "convolution": conv, "card": len(target), "reason": "cardinality"})
    return VerificationReport("bijection", True, checked,
                              details={"card": len(target)})


def verify_bijection_random(M: DvdModel, trials: int, seed: int,
                            max_deg: int = 3) -> VerificationReport:
    """Random word pairs (degrees 1..max_deg), every class n in [0, q-2]."""
    rng = SplitMix64(seed)
    reports = []
    for _ in range(trials):
        a = random_word(rng, M.q, max_deg)
        b = random_word(rng, M.q, max_deg)
        for n in range(M.q - 1):
            rep = verify_bijection(a, b, n, M)
            reports.append(rep)
            if not rep.ok:
                return VerificationReport.merge("bijection", reports)
    out = VerificationReport.merge("bijection", reports)
    out.details = {"trials": trials, "seed": seed, "max_deg": max_deg}
    return out

