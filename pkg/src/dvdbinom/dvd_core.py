"""Two concrete discrete valuation domains with finite residue field.

``RationalLocalization``  Z localized at (p): ring elements are Python ints,
                          the uniformizer is p, residue field F_p.
``PowerSeriesLocalization``  F_q[t] localized at (t): ring elements are
                          polynomials over F_q (see ``fqpoly``), uniformizer t.

A model also fixes the representative set R = (r_0 = 0, r_1, ..., r_{q-1}),
one element per residue class, from which the sequence u_n is built by
substituting representatives for the base-q digits of n.

Elements of the fraction field are ``VElement`` values: an unreduced
numerator/denominator pair, valuation and residue are read off without any
gcd normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Sequence

from . import fqpoly
from .errors import ConfigError, NotIntegralError
from .report import VerificationReport
from .residue_field import ResidueField, build_field

INF = math.inf


# -- base-q digit maps --

def digits_of(n: int, q: int) -> list[int]:
    """Little-endian base-q digits of n; digits_of(0) == [0]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [0]
    out = []
    while n:
        n, r = divmod(n, q)
        out.append(r)
    return out


def from_digits(digits: Sequence[int], q: int) -> int:
    n = 0
    for c in reversed(digits):
        n = n * q + c
    return n


def n_shift(n: int, s: int, q: int) -> int:
    """n with its lowest s base-q digits dropped."""
    return n // q**s


def n_slice(n: int, r: int, s: int, q: int) -> int:
    """The r+1 digits of n at positions s..s+r, reassembled from position 0."""
    return (n // q**s) % q ** (r + 1)


def p_valuation(n: int, p: int) -> int:
    """Exponent of p in the nonzero integer n.

    Divides by p, p^2, p^4, ... and then back down, so large factorial-sized
    numerators cost O(log v) big divisions instead of v.
    """
    if n == 0:
        raise ValueError("valuation of 0")
    if p == 2:
        return (n & -n).bit_length() - 1
    powers = [p]
    while True:
        q_, r = divmod(n, powers[-1])
        if r:
            break
        n = q_
        powers.append(powers[-1] * powers[-1])
    v = (1 << (len(powers) - 1)) - 1
    for k in range(len(powers) - 2, -1, -1):
        q_, r = divmod(n, powers[k])
        if not r:
            n = q_
            v += 1 << k
    return v


# -- splitmix64, the documented generator behind randomized representatives --

_MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next() % n


def shuffled_classes(q: int, rng: SplitMix64) -> list[int]:
    """Fisher-Yates permutation of the nonzero codes 1..q-1."""
    perm = list(range(1, q))
    for i in range(len(perm) - 1, 0, -1):
        j = rng.below(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return perm


@dataclass(frozen=True, eq=False)
class VElement:
    """num/den in the fraction field K of ``model``'s domain V (den != 0)."""

    model: "DvdModel"
    num: Any
    den: Any

    def valuation(self) -> float | int:
        vn = self.model._order(self.num)
        if vn is None:
            return INF
        return vn - self.model._order(self.den)

    def is_zero(self) -> bool:
        return self.model._order(self.num) is None

    def is_integral(self) -> bool:
        return self.valuation() >= 0

    def residue(self) -> int:
        return self.model.residue(self)

    def __add__(self, other):
        other = self.model.coerce(other)
        M = self.model
        return VElement(M, M._add(M._mul(self.num, other.den), M._mul(other.num, self.den)),
                        M._mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return VElement(self.model, self.model._neg(self.num), self.den)

    def __sub__(self, other):
        return self + (-self.model.coerce(other))

    def __rsub__(self, other):
        return self.model.coerce(other) - self

    def __mul__(self, other):
        other = self.model.coerce(other)
        M = self.model
        return VElement(M, M._mul(self.num, other.num), M._mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self.model.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero in K")
        M = self.model
        return VElement(M, M._mul(self.num, other.den), M._mul(self.den, other.num))

    def __eq__(self, other):
        try:
            other = self.model.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        M = self.model
        return M._mul(self.num, other.den) == M._mul(other.num, self.den)

    def __hash__(self):
        raise TypeError("VElement is not hashable (representation is not canonical)")

    def __str__(self):
        return self.model.format(self)

    def __repr__(self):
        return f"VElement({self.model.kind}, {self})"


class DvdModel:
    """Common machinery; subclasses provide the ring primitives."""

    kind: str
    field: ResidueField
    reps: tuple

    def __init__(self, field: ResidueField, reps: Sequence | None = None):
        self.field = field
        self.q = field.q
        if reps is None:
            reps = self.default_reps()
        self.reps = tuple(self._ring_from(r) for r in reps)
        self._validate_reps()
        # residue code -> digit label
        self.rep_residues = tuple(self._ring_residue(r) for r in self.reps)
        self.label_of = {res: i for i, res in enumerate(self.rep_residues)}
        self._u_cache: dict[int, Any] = {}

    def _validate_reps(self):
        if len(self.reps) != self.q:
            raise ConfigError(f"need exactly q = {self.q} representatives, got {len(self.reps)}")
        if self.reps[0] != self._zero:
            raise ConfigError("the first representative must be 0")
        seen = {0}
        for r in self.reps[1:]:
            if self._order(r) != 0:
                raise ConfigError(f"representative {self._ring_text(r)} is not a unit")
            res = self._unit_residue(r)
            if res in seen:
                raise ConfigError(f"representatives repeat residue class {res}")
            seen.add(res)

    # -- element construction --

    def element(self, num, den=None) -> VElement:
        num = self._ring_from(num)
        den = self._one if den is None else self._ring_from(den)
        if self._order(den) is None:
            raise ZeroDivisionError("zero denominator")
        return VElement(self, num, den)

    def coerce(self, x) -> VElement:
        if isinstance(x, VElement):
            if x.model is not self:
                raise ValueError("elements belong to different models")
            return x
        return self.element(x)

    @property
    def zero(self) -> VElement:
        return VElement(self, self._zero, self._one)

    @property
    def one(self) -> VElement:
        return VElement(self, self._one, self._one)

    @property
    def uniformizer(self) -> VElement:
        return VElement(self, self._pi, self._one)

    def _u_ring(self, n: int):
        u = self._u_cache.get(n)
        if u is None:
            u = self._zero
            pw = self._one
            for d in digits_of(n, self.q):
                if d:
                    u = self._add(u, self._mul(self.reps[d], pw))
                pw = self._mul(pw, self._pi)
            self._u_cache[n] = u
        return u

    def u(self, n: int) -> VElement:
        return VElement(self, self._u_ring(n), self._one)

    def from_labels(self, labels: Sequence[int]) -> VElement:
        """Sum of r_{labels[i]} * pi^i."""
        u = self._zero
        pw = self._one
        for d in labels:
            if d:
                u = self._add(u, self._mul(self.reps[d], pw))
            pw = self._mul(pw, self._pi)
        return VElement(self, u, self._one)

    # -- valuation, residue, expansion --

    def residue(self, x: VElement) -> int:
        vn = self._order(x.num)
        if vn is None:
            return 0
        vd = self._order(x.den)
        if vn < vd:
            raise NotIntegralError(f"{self.format(x)} has valuation {vn - vd} < 0")
        if vn > vd:
            return 0
        F = self.field
        return F.div(self._unit_residue(x.num), self._unit_residue(x.den))

    def _unit_denominator(self, x: VElement):
        """(num, den) with the pi-power of den cancelled, den a unit."""
        vd = self._order(x.den)
        vn = self._order(x.num)
        if vn is not None and vn < vd:
            raise NotIntegralError(f"{self.format(x)} has negative valuation")
        if vd == 0:
            return x.num, x.den
        num = self._zero if vn is None else self._div_pi(x.num, vd)
        return num, self._div_pi(x.den, vd)

    def expand(self, x: VElement, depth: int) -> list[int]:
        """First ``depth`` digit labels of the pi-adic expansion of x over R."""
        if depth < 1:
            raise ValueError("depth must be >= 1")
        x = self.coerce(x)
        num, den = self._unit_denominator(x)
        F = self.field
        den_res = self._unit_residue(den)
        labels = []
        for _ in range(depth):
            if num == self._zero:
                labels.extend([0] * (depth - len(labels)))
                break
            res = F.div(self._ring_residue(num), den_res)
            d = self.label_of[res]
            labels.append(d)
            if d:
                num = self._sub(num, self._mul(self.reps[d], den))
            num = self._div_pi(num, 1) if num != self._zero else num
        return labels

    # -- (de)serialization --

    def format(self, x: VElement) -> str:
        """Canonical text: the fraction reduced to lowest terms."""
        if x.den == self._one:
            return self._ring_text(x.num)
        return self._fraction_text(x.num, x.den)

    def parse(self, s: str) -> VElement:
        raise NotImplementedError

    def to_dict(self) -> dict:
        return {"model": self.kind, "field": self.field.to_dict(),
                "reps": [self._ring_text(r) for r in self.reps]}

    # ring primitives supplied by subclasses
    _zero: Any
    _one: Any
    _pi: Any

    def _ring_from(self, x): raise NotImplementedError
    def _add(self, a, b): raise NotImplementedError
    def _sub(self, a, b): raise NotImplementedError
    def _neg(self, a): raise NotImplementedError
    def _mul(self, a, b): raise NotImplementedError
    def _order(self, a) -> int | None: raise NotImplementedError
    def _unit_residue(self, a) -> int: raise NotImplementedError
    def _ring_residue(self, a) -> int: raise NotImplementedError
    def _div_pi(self, a, k: int): raise NotImplementedError
    def _ring_text(self, a) -> str: raise NotImplementedError
    def _fraction_text(self, num, den) -> str: raise NotImplementedError
    def default_reps(self) -> list: raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}(F_{self.q}, reps={[self._ring_text(r) for r in self.reps]})"


class RationalLocalization(DvdModel):
    """Z_(p): rationals whose reduced denominator is prime to p."""

    kind = "zp"
    _zero, _one = 0, 1

    def __init__(self, field: ResidueField, reps: Sequence[int] | None = None):
        if field.d != 1:
            raise ConfigError("the rational model needs a prime residue field (d = 1)")
        self.p = field.p
        self._pi = field.p
        super().__init__(field, reps)

    def default_reps(self):
        return list(range(self.field.p))

    def _ring_from(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"integer expected, got {x!r}")
        return x

    def _add(self, a, b): return a + b
    def _sub(self, a, b): return a - b
    def _neg(self, a): return -a
    def _mul(self, a, b): return a * b

    def _order(self, a):
        return None if a == 0 else p_valuation(a, self.p)

    def _unit_residue(self, a):
        return (a // self.p ** p_valuation(a, self.p)) % self.p

    def _ring_residue(self, a):
        return a % self.p

    def _div_pi(self, a, k):
        return a // self.p**k

    def _ring_text(self, a):
        return str(a)

    def _fraction_text(self, num, den):
        g = math.gcd(num, den)
        num, den = num // g, den // g
        if den < 0:
            num, den = -num, -den
        return str(num) if den == 1 else f"{num}/{den}"

    def parse(self, s: str) -> VElement:
        s = s.strip()
        num, sep, den = s.partition("/")
        return self.element(int(num), int(den) if sep else None)


class PowerSeriesLocalization(DvdModel):
    """F_q[t]_(t): rational functions over F_q regular at t = 0."""

    kind = "fqt"
    _zero, _one, _pi = (), (1,), (0, 1)

    def default_reps(self):
        return [fqpoly.const(a) for a in range(self.field.q)]

    def _ring_from(self, x):
        if isinstance(x, int):
            if not 0 <= x < self.field.q:
                raise ValueError(f"{x} is not a code of F_{self.field.q}")
            return fqpoly.const(x)
        if isinstance(x, str):
            return fqpoly.from_text(self.field, x)
        return fqpoly.trim(list(x))

    def _add(self, a, b): return fqpoly.add(self.field, a, b)
    def _sub(self, a, b): return fqpoly.sub(self.field, a, b)
    def _neg(self, a): return fqpoly.neg(self.field, a)
    def _mul(self, a, b): return fqpoly.mul(self.field, a, b)
    def _order(self, a): return fqpoly.order(a)
    def _unit_residue(self, a): return fqpoly.low_coeff(a)
    def _ring_residue(self, a): return a[0] if a else 0
    def _div_pi(self, a, k): return fqpoly.shift_down(a, k)
    def _ring_text(self, a): return fqpoly.to_text(a)

    def _fraction_text(self, num, den):
        F = self.field
        g = fqpoly.gcd(F, num, den)
        num = fqpoly.divmod_(F, num, g)[0]
        den = fqpoly.divmod_(F, den, g)[0]
        # make den monic
        lead = F.inv(den[-1])
        num, den = fqpoly.scale(F, num, lead), fqpoly.scale(F, den, lead)
        if den == self._one:
            return fqpoly.to_text(num)
        return f"({fqpoly.to_text(num)})/({fqpoly.to_text(den)})"

    def parse(self, s: str) -> VElement:
        s = s.replace(" ", "")
        depth = 0
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "/" and depth == 0:
                return self.element(fqpoly.from_text(self.field, s[:i]),
                                    fqpoly.from_text(self.field, s[i + 1:]))
        return self.element(fqpoly.from_text(self.field, s))


# -- construction helpers --

def random_reps(field: ResidueField, kind: str, seed: int, bound: int = 3,
                extra_degree: int = 2) -> list:
    """Randomized representative set driven by SplitMix64(seed).

    Class order: Fisher-Yates over 1..q-1 (see ``shuffled_classes``).  Then,
    for i = 1..q-1 in order, a multiple of the uniformizer is added:
    zp   r_i = perm[i-1] + p*c,   c = next() % (2*bound+1) - bound
    fqt  r_i = perm[i-1] + t*h(t), h has ``extra_degree`` coefficients, each next() % q
    """
    rng = SplitMix64(seed)
    perm = shuffled_classes(field.q, rng)
    reps: list = [0 if kind == "zp" else ()]
    for cls in perm:
        if kind == "zp":
            c = rng.below(2 * bound + 1) - bound
            reps.append(cls + field.p * c)
        elif kind == "fqt":
            h = [rng.below(field.q) for _ in range(extra_degree)]
            reps.append(fqpoly.trim([cls] + h))
        else:
            raise ConfigError(f"unknown model kind {kind!r}")
    return reps


def make_model(kind: str, p: int, d: int = 1, modulus: Sequence[int] | None = None,
               reps: Sequence | None = None, seed: int | None = None,
               primitive_root: int | None = None) -> DvdModel:
    """Build a field and a model in one call; ``seed`` randomizes the reps."""
    field = build_field(p, d, modulus, primitive_root)
    if seed is not None:
        if reps is not None:
            raise ConfigError("give either explicit reps or a seed, not both")
        reps = random_reps(field, kind, seed)
    if kind == "zp":
        return RationalLocalization(field, reps)
    if kind == "fqt":
        return PowerSeriesLocalization(field, reps)
    raise ConfigError(f"unknown model kind {kind!r}")


# -- functional surface --

def u_of(n: int, M: DvdModel) -> VElement:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return M.u(n)


def valuation(x: VElement) -> float | int:
    return x.valuation()


def residue(x: VElement) -> int:
    return x.residue()


def expand(x: VElement, depth: int, M: DvdModel | None = None) -> list[int]:
    return (M or x.model).expand(x, depth)


def verify_vwdwo(M: DvdModel, N: int, kmax: int) -> VerificationReport:
    """v(u_n - u_m) >= k  <=>  q^k | n - m, for 0 <= m < n <= N, 1 <= k <= kmax."""
    checked = 0
    for n in range(1, N + 1):
        un = M._u_ring(n)
        for m in range(n):
            v = M._order(M._sub(un, M._u_ring(m)))
            v = INF if v is None else v
            for k in range(1, kmax + 1):
                checked += 1
                if (v >= k) != ((n - m) % M.q**k == 0):
                    return VerificationReport("vwdwo", False, checked, {
                        "n": n, "m": m, "k": k,
                        "valuation": None if v == INF else v})
    return VerificationReport("vwdwo", True, checked, details={"N": N, "kmax": kmax})
