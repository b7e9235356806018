"""
Exact arithmetic in cyclotomic fields Q(zeta_e).

An element is stored as a vector of rationals in the power basis
1, z, z^2, ..., z^(phi(e)-1) of Q[x]/(Phi_e(x)).  Elements of different
conductors are compared and combined by lifting both into Q(zeta_lcm).
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

__all__ = [
    "Cyclotomic",
    "cyclotomic_polynomial",
    "cyc_make",
    "cyc_add",
    "cyc_mul",
    "cyc_neg",
    "cyc_inv",
    "cyc_conj",
    "cyc_to_float",
    "cyc_is_rational_integer",
    "zeta",
    "sqrt2",
    "parse_cyclotomic",
]

Rational = Union[int, Fraction]


# -- integer polynomial helpers (lists of coefficients, low degree first) ------

def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den must be monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            q[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    return q, num[:dd] if dd else []


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients of Phi_e, lowest degree first.

    Obtained by dividing x^e - 1 by Phi_d for every proper divisor d of e.
    """
    if e < 1:
        raise ValueError("conductor must be a positive integer")
    poly = [-1] + [0] * (e - 1) + [1]
    for d in range(1, e):
        if e % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


@lru_cache(maxsize=None)
def _degree(e: int) -> int:
    return len(cyclotomic_polynomial(e)) - 1


@lru_cache(maxsize=None)
def _power_table(e: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds the coordinates of x^k mod Phi_e, for 0 <= k < e."""
    phi = cyclotomic_polynomial(e)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1) if deg else []
    for _ in range(e):
        rows.append(tuple(cur))
        # multiply by x, then reduce the overflow coefficient
        top = cur[-1] if deg else 0
        cur = [0] + cur[:-1] if deg else []
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(rows)


def _reduce(e: int, coeffs: Iterable[Rational]) -> tuple[Fraction, ...]:
    table = _power_table(e)
    deg = _degree(e)
    out = [Fraction(0)] * deg
    for k, c in enumerate(coeffs):
        if c:
            row = table[k % e]
            for j in range(deg):
                if row[j]:
                    out[j] += c * row[j]
    return tuple(out)


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    m, p, res = n, 2, 1
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    return -res if m > 1 else res


@lru_cache(maxsize=None)
def _totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@lru_cache(maxsize=None)
def _normalized_traces(e: int) -> tuple[Fraction, ...]:
    # Tr(z^k)/[Q(z):Q] is independent of the field the element is viewed in,
    # which makes it usable as a conductor-agnostic hash ingredient.
    out = []
    for k in range(_degree(e)):
        f = e // math.gcd(k, e)
        out.append(Fraction(_mobius(f), _totient(f)))
    return tuple(out)


class Cyclotomic:
    """Immutable element of Q(zeta_conductor)."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: Iterable[Rational] = ()):
        if not isinstance(conductor, int) or conductor < 1:
            raise ValueError(f"conductor must be a positive integer, got {conductor!r}")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", _reduce(conductor, coeffs))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, conductor: int, coeffs: tuple[Fraction, ...]) -> "Cyclotomic":
        obj = object.__new__(cls)
        object.__setattr__(obj, "conductor", conductor)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def rational(cls, q: Rational) -> "Cyclotomic":
        return cls._raw(1, (Fraction(q),))

    @classmethod
    def coerce(cls, x) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        raise TypeError(f"cannot interpret {x!r} as a cyclotomic number")

    def lift(self, conductor: int) -> "Cyclotomic":
        """Embed into Q(zeta_conductor); conductor must be a multiple of self.conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(f"cannot lift conductor {self.conductor} to {conductor}")
        step = conductor // self.conductor
        big = [Fraction(0)] * (step * len(self.coeffs))
        for k, c in enumerate(self.coeffs):
            big[k * step] = c
        return Cyclotomic(conductor, big)

    def _common(self, other) -> tuple["Cyclotomic", "Cyclotomic"]:
        other = Cyclotomic.coerce(other)
        if other.conductor == self.conductor:
            return self, other
        # rationals never need a real lift
        if other.conductor == 1:
            return self, Cyclotomic._raw(self.conductor, (other.coeffs[0],) + (Fraction(0),) * (len(self.coeffs) - 1))
        if self.conductor == 1:
            a = Cyclotomic._raw(other.conductor, (self.coeffs[0],) + (Fraction(0),) * (len(other.coeffs) - 1))
            return a, other
        L = math.lcm(self.conductor, other.conductor)
        return self.lift(L), other.lift(L)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic._raw(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.conductor, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        try:
            return self + (-Cyclotomic.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return Cyclotomic.coerce(other) - self

    def __mul__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        if b.conductor == 1 or all(c == 0 for c in b.coeffs[1:]):
            s = b.coeffs[0]
            return Cyclotomic._raw(a.conductor, tuple(s * x for x in a.coeffs))
        prod = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(a.conductor, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        e = self.conductor
        phi = [Fraction(c) for c in cyclotomic_polynomial(e)]
        s = _poly_inverse_mod(list(self.coeffs), phi)
        return Cyclotomic(e, s)

    def conj(self) -> "Cyclotomic":
        """Image under z -> z^-1."""
        e = self.conductor
        big = [Fraction(0)] * e
        for k, c in enumerate(self.coeffs):
            big[(-k) % e] += c
        return Cyclotomic(e, big)

    # -- predicates / conversions --------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_rational_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __int__(self) -> int:
        if not self.is_rational_integer():
            raise ValueError(f"{self} is not a rational integer")
        return int(self.coeffs[0])

    def __complex__(self) -> complex:
        e = self.conductor
        return sum((float(c) * cmath.exp(2j * math.pi * k / e) for k, c in enumerate(self.coeffs)), 0j)

    def sort_key(self, conductor: int | None = None) -> tuple[Fraction, ...]:
        """Coefficient tuple in Q(zeta_conductor); a total order for deterministic sorting."""
        c = conductor or self.conductor
        if self.conductor == 1:
            return (self.coeffs[0],) + (Fraction(0),) * (_degree(c) - 1)
        return self.lift(c).coeffs

    def __eq__(self, other) -> bool:
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            tr = _normalized_traces(self.conductor)
            h = hash(sum((c * t for c, t in zip(self.coeffs, tr)), Fraction(0)))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Cyclotomic({self.conductor}, {self})"

    def __str__(self) -> str:
        return format_cyclotomic(self)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_inverse_mod(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    """s with a*s = 1 mod m, by the extended Euclidean algorithm over Q."""
    r0, r1 = _poly_trim(list(m)), _poly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        # polynomial division r0 = q*r1 + r
        r = list(r0)
        q = [Fraction(0)] * (len(r0) - len(r1) + 1)
        lead = r1[-1]
        for i in range(len(r0) - len(r1), -1, -1):
            c = r[i + len(r1) - 1] / lead
            q[i] = c
            if c:
                for j, y in enumerate(r1):
                    r[i + j] -= c * y
        r = _poly_trim(r)
        qs = _poly_mul(q, s1)
        s_new = [x - y for x, y in _zip_longest(s0, qs)]
        r0, r1 = r1, r
        s0, s1 = s1, _poly_trim(s_new)
    if not r1:
        raise ZeroDivisionError("element is not invertible modulo the cyclotomic polynomial")
    c = r1[0]
    return [x / c for x in s1]


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _zip_longest(a, b):
    n = max(len(a), len(b))
    zero = Fraction(0)
    return [(a[i] if i < len(a) else zero, b[i] if i < len(b) else zero) for i in range(n)]


# -- functional interface ------------------------------------------------------

def cyc_make(conductor: int, coeffs: Sequence[Rational]) -> Cyclotomic:
    return Cyclotomic(conductor, coeffs)


def cyc_add(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a + b


def cyc_mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a * b


def cyc_neg(a: Cyclotomic) -> Cyclotomic:
    return -a


def cyc_inv(a: Cyclotomic) -> Cyclotomic:
    return a.inverse()


def cyc_conj(a: Cyclotomic) -> Cyclotomic:
    return a.conj()


def cyc_to_float(a: Cyclotomic) -> complex:
    return complex(a)


def cyc_is_rational_integer(a: Cyclotomic) -> bool:
    return a.is_rational_integer()


def zeta(e: int, k: int = 1) -> Cyclotomic:
    """zeta_e ** k."""
    coeffs = [0] * e
    coeffs[k % e] = 1
    return Cyclotomic(e, coeffs)


def sqrt2() -> Cyclotomic:
    # z8 - z8^3 = 2 cos(pi/4)
    return Cyclotomic(8, [0, 1, 0, -1])


# -- text form -----------------------------------------------------------------

def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_cyclotomic(a: Cyclotomic) -> str:
    """Render as 'a + b*z8 + c*z8^2 + ...'; rationals print bare."""
    if a.is_rational():
        return _fmt_q(a.coeffs[0])
    parts = []
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        if k == 0:
            term = _fmt_q(abs(c))
        else:
            z = f"z{a.conductor}" + (f"^{k}" if k > 1 else "")
            term = z if abs(c) == 1 else f"{_fmt_q(abs(c))}*{z}"
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(f"{sign} {term}")
    return " ".join(parts)


_TERM = re.compile(
    r"""\s*([+-])?\s*
        (?:(\d+(?:/\d+)?)(?:\s*\*\s*(?=z)|(?=z))?)?  # coefficient, '*' or nothing before z
        (?:z(\d+)(?:\^(\d+))?)?               # power of zeta
        \s*""",
    re.VERBOSE,
)


def parse_cyclotomic(text: str) -> Cyclotomic:
    """Inverse of format_cyclotomic."""
    s = text.strip()
    if not s:
        raise ValueError("empty cyclotomic literal")
    pos = 0
    terms: list[tuple[Fraction, int, int]] = []
    conductor = 1
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse cyclotomic literal {text!r} at offset {pos}")
        if terms and m.group(1) is None:
            raise ValueError(f"missing sign between terms in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3):
            e = int(m.group(3))
            k = int(m.group(4)) if m.group(4) else 1
            conductor = math.lcm(conductor, e)
        else:
            e, k = 1, 0
        terms.append((sign * coef, e, k))
        pos = m.end()
    big = [Fraction(0)] * conductor
    for c, e, k in terms:
        big[(k * (conductor // e)) % conductor] += c
    return Cyclotomic(conductor, big)
