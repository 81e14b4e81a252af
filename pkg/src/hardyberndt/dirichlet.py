"""Dirichlet characters mod k, built from the CRT decomposition of (Z/k)*.

A character is stored as an exponent vector on fixed unit-group generators:
for odd prime powers the smallest primitive root, for 4 the class of -1, and
for 2**a (a >= 3) the pair (-1, 5).  Each generator is lifted by CRT to a
residue mod k that is 1 on the other prime-power components.  With
``chi(g_i) = exp(2*pi*i*a_i/e_i)``, every value is a power of zeta_L where L
is the order of the image.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Optional

from .exactmath import Cyclotomic, euler_phi, lcm


class UnsupportedCharacterError(ValueError):
    """An operation needs a primitive character and got something else."""


def factorize(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def primitive_root(q: int) -> int:
    """Smallest primitive root of the odd prime power ``q``."""
    phi = euler_phi(q)
    primes = [p for p, _ in factorize(phi)]
    for g in range(2, q):
        if gcd(g, q) == 1 and all(pow(g, phi // p, q) != 1 for p in primes):
            return g
    raise ValueError(f"{q} has no primitive root")


@lru_cache(maxsize=None)
def unit_generators(k: int) -> tuple[tuple[int, int], ...]:
    """Generators ``(g, order)`` of (Z/k)*, one cyclic factor each."""
    gens = []
    for p, e in factorize(k):
        q = p**e
        rest = k // q
        if p == 2:
            if e == 1:
                continue
            local = [(q - 1, 2)] if e == 2 else [(q - 1, 2), (5, 2 ** (e - 2))]
        else:
            local = [(primitive_root(q), q - q // p)]
        for g, order in local:
            if rest == 1:
                lifted = g % k
            else:
                # g mod q and 1 mod rest
                lifted = (g * rest * pow(rest, -1, q) + q * pow(q, -1, rest)) % k
            gens.append((lifted, order))
    return tuple(gens)


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    generators: tuple[tuple[int, int], ...]
    exponents: tuple[int, ...]
    conductor: int = field(compare=False)
    value_order: int = field(compare=False)
    # discrete-log table: entry n is the exponent of zeta_L at n mod k, or -1
    logs: tuple[int, ...] = field(compare=False, repr=False)

    @property
    def label(self) -> str:
        return f"k={self.modulus};f={self.conductor};a=[{','.join(map(str, self.exponents))}]"

    def __str__(self) -> str:
        return self.label

    def log(self, n: int) -> Optional[int]:
        """Exponent e with chi(n) = zeta_L**e, or None when chi(n) = 0."""
        e = self.logs[n % self.modulus]
        return None if e < 0 else e

    def __call__(self, n: int) -> Cyclotomic:
        return char_eval(self, n)

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    @property
    def is_principal(self) -> bool:
        return self.value_order == 1

    @property
    def is_real(self) -> bool:
        return self.value_order <= 2

    @property
    def parity(self) -> int:
        return parity(self)

    def conjugate(self) -> "DirichletCharacter":
        return conjugate(self)


def _value_order(gens, exponents) -> int:
    order = 1
    for (_, e), a in zip(gens, exponents):
        order = lcm(order, e // gcd(a, e))
    return order


def _log_table(k: int, gens, exponents, order: int) -> tuple[int, ...]:
    table = [-1] * k
    steps = [a * order // e for (_, e), a in zip(gens, exponents)]
    for ts in itertools.product(*(range(e) for _, e in gens)):
        n = 1
        val = 0
        for (g, _), t, s in zip(gens, ts, steps):
            n = n * pow(g, t, k) % k
            val += t * s
        table[n % k] = val % order
    if k == 1:
        table[0] = 0
    return tuple(table)


def _conductor(k: int, logs: tuple[int, ...]) -> int:
    for f in divisors(k):
        if all(
            logs[n] == 0 for n in range(1, k) if gcd(n, k) == 1 and n % f == 1 % f
        ):
            return f
    return k


@lru_cache(maxsize=None)
def character(k: int, exponents: tuple[int, ...]) -> DirichletCharacter:
    """The character mod k with the given exponent vector."""
    if k < 1:
        raise ValueError("modulus must be positive")
    gens = unit_generators(k)
    exponents = tuple(exponents)
    if len(exponents) != len(gens):
        raise ValueError(f"modulus {k} needs {len(gens)} exponents, got {len(exponents)}")
    exponents = tuple(a % e for a, (_, e) in zip(exponents, gens))
    order = _value_order(gens, exponents)
    logs = _log_table(k, gens, exponents, order)
    return DirichletCharacter(k, gens, exponents, _conductor(k, logs), order, logs)


def enumerate_characters(k: int) -> list[DirichletCharacter]:
    gens = unit_generators(k)
    return [character(k, a) for a in itertools.product(*(range(e) for _, e in gens))]


def enumerate_primitive(k: int) -> list[DirichletCharacter]:
    """Primitive non-principal characters mod k (empty for k <= 2)."""
    if k <= 2:
        return []
    return [chi for chi in enumerate_characters(k) if chi.is_primitive and not chi.is_principal]


def char_eval(chi: DirichletCharacter, n: int) -> Cyclotomic:
    e = chi.log(n)
    if e is None:
        return Cyclotomic.rational(0)
    return Cyclotomic.zeta(chi.value_order, e)


def conjugate(chi: DirichletCharacter) -> DirichletCharacter:
    return character(chi.modulus, tuple((-a) % e for a, (_, e) in zip(chi.exponents, chi.generators)))


def parity(chi: DirichletCharacter) -> int:
    """chi(-1) as +1 or -1."""
    return 1 if chi.log(-1) == 0 else -1


def gauss_sum(chi: DirichletCharacter, z: int = 1) -> Cyclotomic:
    """G(z, chi) = sum_{v=0}^{k-1} chi(v) exp(2 pi i v z / k), exactly."""
    if not chi.is_primitive:
        raise UnsupportedCharacterError(f"Gauss-sum twist needs a primitive character, got {chi}")
    k, order = chi.modulus, chi.value_order
    n = lcm(k, order)
    raw = [0] * n
    for v in range(k):
        e = chi.log(v)
        if e is not None:
            raw[(e * (n // order) + v * z * (n // k)) % n] += 1
    return Cyclotomic.from_raw(n, raw)


_LABEL_RE = re.compile(r"^k=(\d+);f=(\d+);a=\[([\d,\s]*)\]$")


def parse_label(label: str) -> DirichletCharacter:
    """Inverse of :attr:`DirichletCharacter.label`; ``k=3`` alone picks the
    first primitive character mod 3."""
    label = label.strip()
    m = _LABEL_RE.match(label)
    if m is None:
        short = re.fullmatch(r"k=(\d+)(?:;i=(\d+))?", label)
        if short is None:
            raise ValueError(f"bad character label {label!r}")
        chars = enumerate_primitive(int(short.group(1)))
        idx = int(short.group(2) or 0)
        if idx >= len(chars):
            raise ValueError(f"no primitive character #{idx} mod {short.group(1)}")
        return chars[idx]
    k, f = int(m.group(1)), int(m.group(2))
    body = m.group(3).strip()
    exps = tuple(int(x) for x in body.split(",")) if body else ()
    chi = character(k, exps)
    if chi.conductor != f:
        raise ValueError(f"label says conductor {f}, computed {chi.conductor}")
    return chi
