"""Finite residue fields F_q, q = p^d, with a fixed primitive root.

Elements are plain ints ("codes"): the base-p digits of a code are the
coefficients, lowest first, of a polynomial in the extension generator y,
reduced modulo the field's monic modulus.  Code 0 is zero and code 1 is one.
"""

from __future__ import annotations

from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import (
    ConfigError,
    DegreeMismatchError,
    LogOfZeroError,
    NonPrimeError,
    ReducibleModulusError,
)

MAX_Q = 4096


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n > 0, by trial division."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomials over F_p, little-endian lists, used for the modulus --

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the nonzero polynomial b over F_p."""
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def _monic_polys(p: int, deg: int):
    for low in range(p**deg):
        coeffs = []
        for _ in range(deg):
            coeffs.append(low % p)
            low //= p
        yield coeffs + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    d = len(modulus) - 1
    for k in range(1, d // 2 + 1):
        for g in _monic_polys(p, k):
            if not _polymod_p(modulus, g, p):
                return False
    return True


def smallest_irreducible(p: int, d: int) -> list[int]:
    """First monic irreducible of degree d, ordering candidates by the base-p
    code of their non-leading coefficients."""
    for f in _monic_polys(p, d):
        if is_irreducible(f, p):
            return f
    raise AssertionError("an irreducible polynomial of every degree exists")


class ResidueField:
    """The field F_q built as F_p[y]/(modulus), with log/antilog tables.

    Instances are immutable after construction.
    """

    def __init__(self, p: int, d: int = 1, modulus: Sequence[int] | None = None,
                 primitive_root: int | None = None):
        if not is_prime(p):
            raise NonPrimeError(f"{p} is not prime")
        if d < 1:
            raise DegreeMismatchError(f"extension degree must be >= 1, got {d}")
        if p**d > MAX_Q:
            raise ConfigError(f"q = {p}^{d} exceeds the table limit {MAX_Q}")
        if d == 1:
            if modulus:
                raise DegreeMismatchError("prime fields take an empty modulus")
            modulus = []
        elif modulus is None or len(modulus) == 0:
            modulus = smallest_irreducible(p, d)
        else:
            modulus = [int(c) % p for c in modulus]
            if len(modulus) != d + 1 or modulus[-1] != 1:
                raise DegreeMismatchError(
                    f"modulus must be monic of degree {d}: {list(modulus)}")
            if not is_irreducible(modulus, p):
                raise ReducibleModulusError(f"{list(modulus)} is reducible over F_{p}")
        self.p = p
        self.d = d
        self.q = p**d
        self.modulus = tuple(modulus)
        self._pw = [p**i for i in range(d)]
        self.primitive_root = self._choose_root(primitive_root)
        exp = [1] * (self.q - 1)
        for i in range(1, self.q - 1):
            exp[i] = self._mul_poly(exp[i - 1], self.primitive_root)
        log = [-1] * self.q
        for i, e in enumerate(exp):
            log[e] = i
        self.exp_table = np.array(exp, dtype=np.int64)
        self.log_table = np.array(log, dtype=np.int64)
        self.exp_table.flags.writeable = False
        self.log_table.flags.writeable = False
        self._exp = exp
        self._log = log

    # -- code <-> coefficient vector --

    def to_vector(self, a: int) -> list[int]:
        out = []
        for _ in range(self.d):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_vector(self, v: Sequence[int]) -> int:
        return sum((int(c) % self.p) * w for c, w in zip(v, self._pw))

    def _mul_poly(self, a: int, b: int) -> int:
        """Schoolbook product mod the modulus; used only while building tables."""
        if self.d == 1:
            return a * b % self.p
        va, vb = self.to_vector(a), self.to_vector(b)
        prod = [0] * (2 * self.d - 1)
        for i, x in enumerate(va):
            if x:
                for j, y in enumerate(vb):
                    prod[i + j] += x * y
        return self.from_vector(_polymod_p(prod, self.modulus, self.p))

    def _order(self, a: int) -> int:
        n = self.q - 1
        for r in prime_factors(n):
            while n % r == 0 and self._pow_slow(a, n // r) == 1:
                n //= r
        return n

    def _pow_slow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_poly(result, a)
            a = self._mul_poly(a, a)
            e >>= 1
        return result

    def _choose_root(self, override: int | None) -> int:
        if override is not None:
            if not 0 < override < self.q or self._order(override) != self.q - 1:
                raise ConfigError(f"{override} is not a primitive root of F_{self.q}")
            return override
        for g in range(1, self.q):
            if self._order(g) == self.q - 1:
                return g
        raise AssertionError("the multiplicative group of a finite field is cyclic")

    # -- arithmetic --

    def add(self, a: int, b: int) -> int:
        if self.d == 1:
            return (a + b) % self.p
        out, w = 0, 1
        for _ in range(self.d):
            out += ((a % self.p + b % self.p) % self.p) * w
            a //= self.p
            b //= self.p
            w *= self.p
        return out

    def neg(self, a: int) -> int:
        if self.d == 1:
            return -a % self.p
        return self.from_vector([-c for c in self.to_vector(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[-self._log[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        return self._exp[self._log[a] * e % (self.q - 1)]

    def arith(self, op: str, a: int, b: int) -> int:
        try:
            fn = {"add": self.add, "sub": self.sub, "mul": self.mul, "div": self.div}[op]
        except KeyError:
            raise ValueError(f"unknown field operation {op!r}") from None
        return fn(a, b)

    def dlog(self, a: int) -> int:
        """The j in [0, q-2] with primitive_root**j == a."""
        if a == 0:
            raise LogOfZeroError("discrete log of 0 is undefined")
        return self._log[a]

    def root_power(self, j: int) -> int:
        """primitive_root**j; j is taken mod q-1."""
        return self._exp[j % (self.q - 1)]

    def order(self, a: int) -> int:
        if a == 0:
            raise LogOfZeroError("0 has no multiplicative order")
        return self._order(a)

    @cached_property
    def primitive_roots(self) -> list[int]:
        """All codes of multiplicative order q-1, ascending."""
        n = self.q - 1
        return sorted(self._exp[k] for k in range(n) if np.gcd(k, n) == 1)

    def elements(self) -> range:
        return range(self.q)

    # -- misc --

    def to_dict(self) -> dict:
        return {"p": self.p, "d": self.d, "modulus": list(self.modulus),
                "q": self.q, "primitive_root": self.primitive_root}

    @classmethod
    def from_dict(cls, d: dict) -> "ResidueField":
        field = cls(d["p"], d.get("d", 1), d.get("modulus") or None,
                    d.get("primitive_root"))
        if "q" in d and d["q"] != field.q:
            raise DegreeMismatchError(f"q = {d['q']} does not match p^d = {field.q}")
        return field

    def __eq__(self, other):
        if not isinstance(other, ResidueField):
            return NotImplemented
        return (self.p, self.d, self.modulus, self.primitive_root) == (
            other.p, other.d, other.modulus, other.primitive_root)

    def __hash__(self):
        return hash((self.p, self.d, self.modulus, self.primitive_root))

    def __repr__(self):
        mod = f", modulus={list(self.modulus)}" if self.d > 1 else ""
        return f"ResidueField(F_{self.q}{mod}, primitive_root={self.primitive_root})"


def build_field(p: int, d: int = 1, modulus: Sequence[int] | None = None,
                primitive_root: int | None = None) -> ResidueField:
    return ResidueField(p, d, modulus, primitive_root)
