"""Exact rational and cyclotomic arithmetic, plus the arbitrary-precision
complex carrier used by every numeric routine.

Rationals are plain :class:`fractions.Fraction` values.  Complex numerics are
:class:`mpmath.mpc` values evaluated under :func:`mpmath.workprec`.  The only
custom type here is :class:`Cyclotomic`, an element of Q(zeta_N) stored in
the power basis ``1, zeta, ..., zeta^(phi(N)-1)`` after reduction modulo the
N-th cyclotomic polynomial, so that equality is a coefficient comparison.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import ceil, gcd, log2
from typing import Iterable, Sequence, Union

import mpmath

DEFAULT_BITS = 256

RationalLike = Union[int, Fraction]


class InvalidOrderError(ValueError):
    """Raised for a cyclotomic order N < 1."""


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def rational_to_str(q: RationalLike) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(s: str) -> Fraction:
    return Fraction(s)


# ---------------------------------------------------------------------------
# cyclotomic polynomials and reduction tables
# ---------------------------------------------------------------------------


def _poly_exact_div(num: list[int], den: Sequence[int]) -> list[int]:
    """Divide integer polynomials (ascending coefficients), den monic."""
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            quot[i - dn] = c
            for j, dj in enumerate(den):
                num[i - dn + j] -= c * dj
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise InvalidOrderError(f"cyclotomic order must be >= 1, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[tuple[int, ...], ...]:
    # row j = coordinates of zeta_n^j in the power basis of Q(zeta_n)
    phi_poly = cyclotomic_polynomial(n)
    deg = len(phi_poly) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] -= top * phi_poly[i]
    return tuple(rows)


def _reduce(order: int, raw: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    table = _reduction_table(order)
    deg = len(table[0])
    folded: dict[int, Fraction] = {}
    for j, c in enumerate(raw):
        if c:
            r = j % order
            folded[r] = folded.get(r, 0) + c
    out = [Fraction(0)] * deg
    for j, c in folded.items():
        if not c:
            continue
        row = table[j]
        for i in range(deg):
            if row[i]:
                out[i] += c * row[i]
    return tuple(Fraction(x) for x in out)


# ---------------------------------------------------------------------------
# Cyclotomic
# ---------------------------------------------------------------------------


class Cyclotomic:
    """Immutable element of the cyclotomic field Q(zeta_N).

    Mixed-order arithmetic lifts both operands to the lcm of their orders.
    Equality compares values, so elements of different orders (or plain
    ints/Fractions) compare equal when they represent the same number.
    Instances are unhashable because the order is not canonical.
    """

    __slots__ = ("order", "coeffs")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, order: int, coeffs: Sequence[RationalLike]):
        if order < 1:
            raise InvalidOrderError(f"cyclotomic order must be >= 1, got {order}")
        deg = euler_phi(order)
        if len(coeffs) != deg:
            raise ValueError(f"expected {deg} coefficients for order {order}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    def __reduce__(self):
        return (Cyclotomic, (self.order, self.coeffs))

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_raw(cls, order: int, raw: Iterable[RationalLike]) -> "Cyclotomic":
        """Reduce ``sum raw[j] * zeta_order**j`` to canonical form."""
        if order < 1:
            raise InvalidOrderError(f"cyclotomic order must be >= 1, got {order}")
        return cls(order, _reduce(order, raw))

    @classmethod
    def rational(cls, q: RationalLike) -> "Cyclotomic":
        return cls(1, (q,))

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "Cyclotomic":
        raw = [0] * order
        raw[power % order] = 1
        return cls.from_raw(order, raw)

    @staticmethod
    def coerce(x: Union["Cyclotomic", RationalLike]) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyclotomic")

    # -- structure ----------------------------------------------------------

    def raw(self) -> list[Fraction]:
        """Coefficients padded to length ``order`` (group-ring form)."""
        return list(self.coeffs) + [Fraction(0)] * (self.order - len(self.coeffs))

    def lift(self, order: int) -> "Cyclotomic":
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} to {order}")
        step = order // self.order
        raw = [Fraction(0)] * order
        for j, c in enumerate(self.coeffs):
            raw[j * step] = c
        return Cyclotomic.from_raw(order, raw)

    def _pair(self, other) -> tuple["Cyclotomic", "Cyclotomic"]:
        other = Cyclotomic.coerce(other)
        n = lcm(self.order, other.order)
        return self.lift(n), other.lift(n)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-x for x in self.coeffs])

    def __sub__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, [x * other for x in self.coeffs])
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        n = a.order
        prod = [Fraction(0)] * (2 * len(a.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic.from_raw(n, prod)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return (self.inverse()) ** (-e)
        result = Cyclotomic(self.order, [1] + [0] * (len(self.coeffs) - 1))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def galois(self, a: int) -> "Cyclotomic":
        """Apply zeta -> zeta**a (a coprime to the order)."""
        n = self.order
        if gcd(a, n) != 1:
            raise ValueError(f"{a} is not a unit mod {n}")
        raw = [Fraction(0)] * n
        for j, c in enumerate(self.coeffs):
            raw[(a * j) % n] += c
        return Cyclotomic.from_raw(n, raw)

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1)

    def norm(self) -> Fraction:
        n = self.order
        prod = Cyclotomic.rational(1)
        for a in range(1, n + 1):
            if gcd(a, n) == 1:
                prod = prod * self.galois(a)
        return prod.to_fraction()

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)")
        n = self.order
        cofactor = Cyclotomic(n, [1] + [0] * (len(self.coeffs) - 1))
        for a in range(2, n + 1):
            if gcd(a, n) == 1:
                cofactor = cofactor * self.galois(a)
        nrm = (self * cofactor).to_fraction()
        return cofactor * (1 / nrm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.coerce(other) * self.inverse()

    def __eq__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return a.coeffs == b.coeffs

    # -- numerics / display -------------------------------------------------

    def embed(self, bits: int = DEFAULT_BITS) -> mpmath.mpc:
        return cyclo_embed(self, bits)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [rational_to_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Cyclotomic":
        return cls(int(data["order"]), [Fraction(c) for c in data["coeffs"]])

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if j == 0 else (f"z{self.order}" if j == 1 else f"z{self.order}^{j}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Cyclotomic({self.order}, [{', '.join(map(str, self.coeffs))}])"


def cyclo_canonicalize(order: int, raw: Sequence[RationalLike]) -> Cyclotomic:
    return Cyclotomic.from_raw(order, raw)


def cyclo_embed(x: Cyclotomic, bits: int = DEFAULT_BITS) -> mpmath.mpc:
    """Numeric value of ``x`` at zeta_N = exp(2*pi*i/N).

    Works with ``bits + ceil(log2 phi(N)) + 10`` guard bits so the result is
    good to about 2**-bits relative to (1 + |x|).
    """
    if bits < 64:
        raise ValueError("embedding precision must be at least 64 bits")
    guard = ceil(log2(max(len(x.coeffs), 1))) + 10
    with mpmath.workprec(bits + guard):
        w = mpmath.expjpi(mpmath.mpf(2) / x.order)
        acc = mpmath.mpc(0)
        pw = mpmath.mpc(1)
        for c in x.coeffs:
            if c:
                acc += pw * mpmath.mpf(c.numerator) / c.denominator
            pw *= w
    with mpmath.workprec(bits):
        return +acc


# ---------------------------------------------------------------------------
# BigComplex helpers (values are mpmath.mpc)
# ---------------------------------------------------------------------------


def complex_close(a, b, tol) -> bool:
    """``|a - b| <= tol * (1 + max(|a|, |b|))``."""
    a, b = mpmath.mpmathify(a), mpmath.mpmathify(b)
    return abs(a - b) <= mpmath.mpf(tol) * (1 + max(abs(a), abs(b)))


def bits_to_digits(bits: int) -> int:
    return int(bits * 0.30103)


def complex_to_json(z, bits: int = DEFAULT_BITS) -> dict:
    """Decimal-string serialization with an explicit digit count."""
    digits = bits_to_digits(bits)
    z = mpmath.mpmathify(z)
    return {
        "re": mpmath.nstr(mpmath.re(z), digits),
        "im": mpmath.nstr(mpmath.im(z), digits),
        "digits": digits,
    }


def complex_from_json(data: dict) -> mpmath.mpc:
    digits = int(data["digits"])
    with mpmath.workdps(digits + 5):
        return mpmath.mpc(mpmath.mpf(data["re"]), mpmath.mpf(data["im"]))
