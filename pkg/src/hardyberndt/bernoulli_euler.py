"""Bernoulli and Euler numbers/polynomials and their periodic extensions.

Conventions: B_1 = -1/2.  The Bernoulli function is the 1-periodic extension
of B_n on [0, 1) with the midpoint value 0 for n = 1 at integers; the Euler
function is the 1-anti-periodic extension of E_n on [0, 1).  All arguments
are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, floor
from typing import Union

Number = Union[int, Fraction]


@dataclass(frozen=True)
class PolyRational:
    """Polynomial with Fraction coefficients, lowest degree first."""

    coefficients: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    # sum_{j=0}^{n} C(n+1, j) B_j = 0
    s = sum(comb(n + 1, j) * bernoulli_number(j) for j in range(n))
    return -s / (n + 1)


@lru_cache(maxsize=None)
def euler_zero(n: int) -> Fraction:
    """E_n(0), from E_n(1) + E_n(0) = 0 for n >= 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    return -sum(comb(n, j) * euler_zero(j) for j in range(n)) / 2


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> PolyRational:
    # Appell form: B_n(x) = sum_j C(n, j) B_j x^(n-j)
    return PolyRational(tuple(comb(n, i) * bernoulli_number(n - i) for i in range(n + 1)))


@lru_cache(maxsize=None)
def euler_poly(n: int) -> PolyRational:
    return PolyRational(tuple(comb(n, i) * euler_zero(n - i) for i in range(n + 1)))


def _split(x: Number) -> tuple[int, Fraction]:
    x = Fraction(x)
    m = floor(x)
    return m, x - m


@lru_cache(maxsize=65536)
def periodic_bernoulli(n: int, x: Fraction) -> Fraction:
    """𝔅_n(x); 𝔅_1 vanishes at integers."""
    _, frac = _split(x)
    if n == 1 and frac == 0:
        return Fraction(0)
    return bernoulli_poly(n)(frac)


@lru_cache(maxsize=65536)
def periodic_euler(n: int, x: Fraction) -> Fraction:
    """ℰ_n(x) with ℰ_n(x + m) = (-1)^m ℰ_n(x).

    ℰ_0 is a square wave; at its jumps (the integers) it takes the mean
    value 0, the same normalization as 𝔅_1.  Every ℰ_n with n >= 1 is
    continuous, so this is the only point where a choice is made.
    """
    m, frac = _split(x)
    if n == 0 and frac == 0:
        return Fraction(0)
    v = euler_poly(n)(frac)
    return -v if m % 2 else v


def raabe_residual(n: int, x: Number, r: int) -> Fraction:
    """sum_{j<r} 𝔅_n(x + j/r) - r^(1-n) 𝔅_n(r x); zero by Raabe's theorem."""
    x = Fraction(x)
    lhs = sum(periodic_bernoulli(n, x + Fraction(j, r)) for j in range(r))
    return lhs - Fraction(r) ** (1 - n) * periodic_bernoulli(n, r * x)


def halving_residual_classical(n: int, x: Number, r: int) -> Fraction:
    """r^(n-1) sum_{j<r} (-1)^j 𝔅_n((x+j)/r) + (n/2) ℰ_{n-1}(x), for even r."""
    if r % 2:
        raise ValueError("the alternating Raabe identity needs even r")
    if n < 1:
        raise ValueError("n must be >= 1")
    x = Fraction(x)
    lhs = Fraction(r) ** (n - 1) * sum(
        (-1) ** j * periodic_bernoulli(n, (x + j) / r) for j in range(r)
    )
    return lhs + Fraction(n, 2) * periodic_euler(n - 1, x)
