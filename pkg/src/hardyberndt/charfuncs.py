"""Generalized Bernoulli functions 𝔅_{m,chi}(x) and character Euler
functions ℰ_{m,chi}(x) at rational x, with their identity residuals.

Values live in Q(zeta_L), L the value order of chi.  Internally they are
kept as group-ring vectors of length L (coefficient j multiplies zeta_L**j)
so that twisting by chi(n) is a rotation; the public functions return
canonical :class:`Cyclotomic` elements.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import floor
from typing import Sequence, Union

from .bernoulli_euler import periodic_bernoulli, periodic_euler
from .dirichlet import DirichletCharacter, conjugate
from .exactmath import Cyclotomic

Number = Union[int, Fraction]
Vec = tuple[Fraction, ...]


class UnsupportedModulusError(ValueError):
    """ℰ_{m,chi} is only defined for odd modulus."""


def _require_odd(chi: DirichletCharacter) -> None:
    if chi.modulus % 2 == 0:
        raise UnsupportedModulusError(
            f"character Euler function needs odd modulus, got k={chi.modulus}"
        )


# -- group-ring helpers ------------------------------------------------------


def rotate_add(acc: list, vec: Sequence[Fraction], shift: int, scale: Number) -> None:
    """acc += scale * zeta**shift * vec, in place."""
    n = len(acc)
    for j, c in enumerate(vec):
        if c:
            acc[(j + shift) % n] += scale * c
    return None


def to_cyclotomic(chi: DirichletCharacter, vec: Sequence[Fraction]) -> Cyclotomic:
    return Cyclotomic.from_raw(chi.value_order, vec)


@lru_cache(maxsize=200_000)
def gen_bernoulli_vec(m: int, chi: DirichletCharacter, x: Fraction) -> Vec:
    k, L = chi.modulus, chi.value_order
    x = x - k * floor(x / k)
    out = [Fraction(0)] * L
    scale = Fraction(k) ** (m - 1)
    for j in range(k):
        e = chi.log(j)
        if e is not None:
            out[(-e) % L] += periodic_bernoulli(m, (j + x) / k)
    return tuple(c * scale for c in out)


@lru_cache(maxsize=200_000)
def _char_euler_base(m: int, chi: DirichletCharacter, x: Fraction) -> Vec:
    k, L = chi.modulus, chi.value_order
    out = [Fraction(0)] * L
    for j in range(k):
        e = chi.log(j)
        if e is not None:
            v = periodic_euler(m, (j + x) / k)
            out[(-e) % L] += -v if j % 2 else v
    scale = Fraction(k) ** m
    return tuple(c * scale for c in out)


def char_euler_vec(m: int, chi: DirichletCharacter, x: Fraction) -> Vec:
    _require_odd(chi)
    k = chi.modulus
    q = floor(Fraction(x) / k)
    base = _char_euler_base(m, chi, Fraction(x) - q * k)
    return tuple(-c for c in base) if q % 2 else base


# -- public operations -------------------------------------------------------


def gen_bernoulli(m: int, chi: DirichletCharacter, x: Number) -> Cyclotomic:
    """𝔅_{m,chi}(x) = k^(m-1) sum_{j<k} conj(chi)(j) 𝔅_m((j+x)/k)."""
    if m < 1:
        raise ValueError("generalized Bernoulli function needs m >= 1")
    return to_cyclotomic(chi, gen_bernoulli_vec(m, chi, Fraction(x)))


def char_euler(m: int, chi: DirichletCharacter, x: Number) -> Cyclotomic:
    """ℰ_{m,chi}(x) = k^m sum_{j<k} (-1)^j conj(chi)(j) ℰ_m((j+x)/k), k odd."""
    if m < 0:
        raise ValueError("character Euler function needs m >= 0")
    return to_cyclotomic(chi, char_euler_vec(m, chi, Fraction(x)))


def multiplication_bernoulli(
    m: int, chi: DirichletCharacter, x: Number, r: int
) -> tuple[Cyclotomic, Cyclotomic]:
    """Both sides of sum_{j<r} 𝔅_{m,chi}(x + jk/r) = chi(r) r^(1-m) 𝔅_{m,chi}(r x)."""
    if m < 1 or r < 1:
        raise ValueError("need m >= 1 and r >= 1")
    x = Fraction(x)
    k, L = chi.modulus, chi.value_order
    lhs = [Fraction(0)] * L
    for j in range(r):
        rotate_add(lhs, gen_bernoulli_vec(m, chi, x + Fraction(j * k, r)), 0, 1)
    rhs = [Fraction(0)] * L
    e = chi.log(r)
    if e is not None:
        rotate_add(rhs, gen_bernoulli_vec(m, chi, r * x), e, Fraction(r) ** (1 - m))
    return to_cyclotomic(chi, lhs), to_cyclotomic(chi, rhs)


def halving_sides(n: int, chi: DirichletCharacter, x: Number) -> tuple[Cyclotomic, Cyclotomic]:
    """(2^n chi(2) 𝔅_{n,chibar}(x/2) - 𝔅_{n,chibar}(x),  -(n/2) ℰ_{n-1,chibar}(x))."""
    _require_odd(chi)
    if n < 1:
        raise ValueError("need n >= 1")
    x = Fraction(x)
    cb = conjugate(chi)
    L = chi.value_order
    lhs = [Fraction(0)] * L
    rotate_add(lhs, gen_bernoulli_vec(n, cb, x / 2), chi.log(2), Fraction(2) ** n)
    rotate_add(lhs, gen_bernoulli_vec(n, cb, x), 0, -1)
    rhs = [Fraction(0)] * L
    rotate_add(rhs, char_euler_vec(n - 1, cb, x), 0, Fraction(-n, 2))
    return to_cyclotomic(chi, lhs), to_cyclotomic(chi, rhs)


def halving_residual(n: int, chi: DirichletCharacter, x: Number) -> Cyclotomic:
    lhs, rhs = halving_sides(n, chi, x)
    return lhs - rhs


def fold_even_odd(m: int, chi: DirichletCharacter, x: Number) -> tuple[Cyclotomic, Cyclotomic]:
    """Both sides of the even/odd folding

        sum_{mu<k} chi(2 mu) ℰ_m((2 mu + x)/k) = sum_{mu<k} (-1)^mu chi(mu) ℰ_m((mu + x)/k)

    with the left side split at mu = (k-1)/2 as the two half-range sums.
    """
    _require_odd(chi)
    x = Fraction(x)
    k, L = chi.modulus, chi.value_order
    half = (k - 1) // 2
    lhs = [Fraction(0)] * L
    for lo, hi in ((0, half), (half + 1, k - 1)):
        for mu in range(lo, hi + 1):
            e = chi.log(2 * mu)
            if e is not None:
                lhs[e] += periodic_euler(m, (2 * mu + x) / k)
    rhs = [Fraction(0)] * L
    for mu in range(k):
        e = chi.log(mu)
        if e is not None:
            v = periodic_euler(m, (mu + x) / k)
            rhs[e] += -v if mu % 2 else v
    return to_cyclotomic(chi, lhs), to_cyclotomic(chi, rhs)
