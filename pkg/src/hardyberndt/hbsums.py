"""Hardy–Berndt sums: the classical ones, Dedekind character sums, and the
character analogues s_{1,p}, s_{2,p}, s_{5,p} with their mixed variants.

Every sum is exact.  Evaluators only check basic preconditions (c > 0, odd
modulus where ℰ_{m,chi} appears); theorem hypotheses such as parity and
coprimality belong to the verification suites.  Negative first arguments
are handled by the periodic and anti-periodic extensions, never by
reducing d mod c.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, floor, gcd

from .bernoulli_euler import periodic_bernoulli
from .charfuncs import (
    char_euler,
    char_euler_vec,
    gen_bernoulli,
    gen_bernoulli_vec,
    rotate_add,
    to_cyclotomic,
)
from .dirichlet import DirichletCharacter, char_eval, conjugate
from .exactmath import Cyclotomic

CLASSICAL_KINDS = ("S", "s1", "s2", "s3", "s4", "s5")


class HypothesisError(ValueError):
    """Parameters violate the hypotheses of the identity being checked."""


def _check_c(c: int) -> None:
    if c <= 0:
        raise ValueError(f"c must be positive, got {c}")


# ---------------------------------------------------------------------------
# classical sums (oracles)
# ---------------------------------------------------------------------------


def classical_sum(kind: str, d: int, c: int) -> Fraction:
    """S(d,c) and s_1..s_5(d,c), summed over n = 1..c-1."""
    _check_c(c)
    B1 = lambda t: periodic_bernoulli(1, Fraction(t))  # noqa: E731
    total = Fraction(0)
    for n in range(1, c):
        fl = (d * n) // c
        if kind == "S":
            total += (-1) ** (n + 1 + fl)
        elif kind == "s1":
            total += (-1) ** fl * B1(Fraction(n, c))
        elif kind == "s2":
            total += (-1) ** n * B1(Fraction(n, c)) * B1(Fraction(d * n, c))
        elif kind == "s3":
            total += (-1) ** n * B1(Fraction(d * n, c))
        elif kind == "s4":
            total += (-1) ** fl
        elif kind == "s5":
            total += (-1) ** (n + fl) * B1(Fraction(n, c))
        else:
            raise ValueError(f"unknown classical sum {kind!r}")
    return total


# ---------------------------------------------------------------------------
# character sums
# ---------------------------------------------------------------------------


def _char_sum(
    chi: DirichletCharacter,
    d: int,
    c: int,
    inner: str,
    inner_index: int,
    outer_index: int,
    alternating: bool,
) -> Cyclotomic:
    # sum_{n=1}^{ck} [(-1)^n] chi(n) F(dn/c) 𝔅_outer(n/ck), F = 𝔅_{i,chi} or ℰ_{i,chi}
    _check_c(c)
    k, L = chi.modulus, chi.value_order
    ck = c * k
    acc = [Fraction(0)] * L
    for n in range(1, ck + 1):
        e = chi.log(n)
        if e is None:
            continue
        w = periodic_bernoulli(outer_index, Fraction(n, ck))
        if not w:
            continue
        if alternating and n % 2:
            w = -w
        x = Fraction(d * n, c)
        vec = gen_bernoulli_vec(inner_index, chi, x) if inner == "B" else char_euler_vec(inner_index, chi, x)
        rotate_add(acc, vec, e, w)
    return to_cyclotomic(chi, acc)


def dedekind_char_sum(p: int, d: int, c: int, chi: DirichletCharacter) -> Cyclotomic:
    """s_p(d,c:chi) = sum_{n=1}^{ck} chi(n) 𝔅_{p,chi}(dn/c) 𝔅_1(n/ck)."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return _char_sum(chi, d, c, "B", p, 1, alternating=False)


def s1p(p: int, d: int, c: int, chi: DirichletCharacter) -> Cyclotomic:
    """s_{1,p}(d,c:chi) = sum_{n=1}^{ck} chi(n) ℰ_{p-1,chi}(dn/c) 𝔅_1(n/ck)."""
    return mixed_sum(1, p, 1, d, c, chi)


def s2p(p: int, d: int, c: int, chi: DirichletCharacter) -> Cyclotomic:
    """s_{2,p}(d,c:chi) = sum_{n=1}^{ck} (-1)^n chi(n) 𝔅_{p,chi}(dn/c) 𝔅_1(n/ck)."""
    return mixed_sum(2, p, 1, d, c, chi)


def s5p(p: int, d: int, c: int, chi: DirichletCharacter) -> Cyclotomic:
    """s_{5,p}(d,c:chi) = sum_{n=1}^{ck} (-1)^n chi(n) ℰ_{p-1,chi}(dn/c) 𝔅_1(n/ck)."""
    return mixed_sum(5, p, 1, d, c, chi)


def mixed_sum(family: int, p: int, m: int, d: int, c: int, chi: DirichletCharacter) -> Cyclotomic:
    """s_{family, p+1-m, m}(d, c:chi).

    All three families sum over n = 1..ck at the point dn/c against
    𝔅_m(n/ck); family 1 uses ℰ_{p-m,chi}, family 2 uses (-1)^n 𝔅_{p+1-m,chi}
    and family 5 uses (-1)^n ℰ_{p-m,chi}.  With m = 1 these are the plain
    sums s_{1,p}, s_{2,p}, s_{5,p}.
    """
    if p < 1 or not 1 <= m <= p:
        raise ValueError(f"need p >= 1 and 1 <= m <= p, got p={p}, m={m}")
    if family == 1:
        return _char_sum(chi, d, c, "E", p - m, m, alternating=False)
    if family == 2:
        return _char_sum(chi, d, c, "B", p + 1 - m, m, alternating=True)
    if family == 5:
        return _char_sum(chi, d, c, "E", p - m, m, alternating=True)
    raise ValueError(f"unknown sum family {family}")


_PLAIN = {1: s1p, 2: s2p, 5: s5p}


# ---------------------------------------------------------------------------
# reciprocity sides
# ---------------------------------------------------------------------------


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise HypothesisError(msg)


def _k_divides_one(k: int, c: int, d: int) -> bool:
    return c % k == 0 or d % k == 0


def classical_reciprocity_sides(kind: str, d: int, c: int) -> tuple[Fraction, Fraction]:
    """kind "8": s1(d,c) - 2 s2(c,d) for even d; kind "9": s5(d,c) + s5(c,d) for odd c, d."""
    _require(d > 0 and c > 0 and gcd(d, c) == 1, "need coprime positive d, c")
    if kind == "8":
        _require(d % 2 == 0, "reciprocity (8) needs d even")
        lhs = classical_sum("s1", d, c) - 2 * classical_sum("s2", c, d)
        rhs = Fraction(1, 2) - (Fraction(1, d * c) + Fraction(c, d)) / 2
    elif kind == "9":
        _require(d % 2 == 1 and c % 2 == 1, "reciprocity (9) needs c, d odd")
        lhs = classical_sum("s5", d, c) + classical_sum("s5", c, d)
        rhs = Fraction(1, 2) - Fraction(1, 2 * c * d)
    else:
        raise ValueError(f"unknown classical reciprocity {kind!r}")
    return lhs, rhs


def dedekind_reciprocity_sides(c: int, d: int, chi: DirichletCharacter) -> tuple[Cyclotomic, Cyclotomic]:
    """s(c,d:chi) + s(d,c:chibar) against B_{1,chi} B_{1,chibar}."""
    k = chi.modulus
    _require(c > 0 and d > 0 and gcd(c, d) == 1, "need coprime positive c, d")
    _require(_k_divides_one(k, c, d), "need c or d divisible by k")
    cb = conjugate(chi)
    lhs = dedekind_char_sum(1, c, d, chi) + dedekind_char_sum(1, d, c, cb)
    rhs = gen_bernoulli(1, chi, 0) * gen_bernoulli(1, cb, 0)
    return lhs, rhs


FORMS = ("stated", "derived")


def _check_form(form: str) -> None:
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}, got {form!r}")


def rps5_sides(p: int, c: int, d: int, chi: DirichletCharacter, form: str = "stated") -> tuple[Cyclotomic, Cyclotomic]:
    """Both sides of the s_{5,p} reciprocity for odd coprime c, d:

    c d^p s_{5,p}(c,d:chi) + d c^p s_{5,p}(d,c:chibar)
        = -(chibar(-4)/2) sum_{m=0}^{p-1} C(p-1,m) c^(m+1) d^(p-m) ℰ_{p-1-m,chibar}(0) ℰ_{m,chi}(0)

    ``form="derived"`` uses the right side obtained by re-deriving the law from
    the verified transformation formulas: the factor chibar(-4) becomes 1 and
    the Euler pairing is ℰ_{p-1-m,chi}(0) ℰ_{m,chibar}(0).
    """
    _check_form(form)
    k = chi.modulus
    _require(p % 2 == 1, "p must be odd")
    _require(c > 0 and d > 0 and c % 2 == 1 and d % 2 == 1, "c, d must be odd and positive")
    _require(gcd(c, d) == 1, "c, d must be coprime")
    _require(_k_divides_one(k, c, d), "need c or d divisible by k")
    cb = conjugate(chi)
    lhs = s5p(p, c, d, chi) * (c * d**p) + s5p(p, d, c, cb) * (d * c**p)
    total = Cyclotomic.rational(0)
    first, second = (cb, chi) if form == "stated" else (chi, cb)
    for m in range(p):
        total += char_euler(p - 1 - m, first, 0) * char_euler(m, second, 0) * (
            comb(p - 1, m) * c ** (m + 1) * d ** (p - m)
        )
    factor = char_eval(cb, -4) if form == "stated" else 1
    return lhs, -factor * total * Fraction(1, 2)


def rps1s2_sides(p: int, c: int, d: int, chi: DirichletCharacter, form: str = "stated") -> tuple[Cyclotomic, Cyclotomic]:
    """Both sides of the s_{1,p} / s_{2,p} reciprocity for even d:

    p d c^p s_{1,p}(d,c:chibar) - chi(-1) 2 c d^p s_{2,p}(c,d:chi)
        = chi(-1) sum_{m=1}^{p} (-1)^m C(p,m-1) c^m d^(p+1-m) 𝔅_{p+1-m,chi}(0) ℰ_{m-1,chibar}(0)

    ``form="derived"`` drops the chi(-1) on the s_2 term:
    p d c^p s_{1,p}(d,c:chibar) - 2 c d^p s_{2,p}(c,d:chi) equals the same right side.
    """
    _check_form(form)
    k = chi.modulus
    _require(p % 2 == 1, "p must be odd")
    _require(c > 0 and d > 0 and gcd(c, d) == 1, "need coprime positive c, d")
    _require(d % 2 == 0, "d must be even")
    _require(_k_divides_one(k, c, d), "need c or d divisible by k")
    cb = conjugate(chi)
    sign = chi.parity
    s2_sign = sign if form == "stated" else 1
    lhs = s1p(p, d, c, cb) * (p * d * c**p) - s2p(p, c, d, chi) * (s2_sign * 2 * c * d**p)
    total = Cyclotomic.rational(0)
    for m in range(1, p + 1):
        coef = (-1) ** m * comb(p, m - 1) * c**m * d ** (p + 1 - m)
        total += gen_bernoulli(p + 1 - m, chi, 0) * char_euler(m - 1, cb, 0) * coef
    return lhs, total * sign


def reciprocity_residual_s5(p: int, c: int, d: int, chi: DirichletCharacter, form: str = "stated") -> Cyclotomic:
    lhs, rhs = rps5_sides(p, c, d, chi, form)
    return lhs - rhs


def reciprocity_residual_s1s2(p: int, c: int, d: int, chi: DirichletCharacter, form: str = "stated") -> Cyclotomic:
    lhs, rhs = rps1s2_sides(p, c, d, chi, form)
    return lhs - rhs


def zk_specialization_sides(p: int, c: int, d: int, chi: DirichletCharacter, form: str = "stated") -> tuple[Cyclotomic, Cyclotomic]:
    """Mixed-sum identity from the s_5 functional equation at z = k:

    sum_{m=1}^{p} C(p,m) (-kc)^(m-1) s_{5,p+1-m,m}(c,d:chi)
        = -(kc)^(p-1) s_{5,1,p}(d,c:chibar) - chibar(-4) (p/2) ℰ_{p-1,chibar}(0) ℰ_{0,chi}(0)

    ``form="derived"``: the last term is -(p/2) ℰ_{p-1,chi}(0) ℰ_{0,chibar}(0).
    """
    _check_form(form)
    k = chi.modulus
    _require(p % 2 == 1, "p must be odd")
    _require(c > 0 and d > 0 and c % 2 == 1 and d % 2 == 1 and gcd(c, d) == 1, "need odd coprime c, d")
    _require(_k_divides_one(k, c, d), "need c or d divisible by k")
    cb = conjugate(chi)
    lhs = Cyclotomic.rational(0)
    for m in range(1, p + 1):
        lhs += mixed_sum(5, p, m, c, d, chi) * (comb(p, m) * (-k * c) ** (m - 1))
    if form == "stated":
        boundary = char_eval(cb, -4) * char_euler(p - 1, cb, 0) * char_euler(0, chi, 0)
    else:
        boundary = char_euler(p - 1, chi, 0) * char_euler(0, cb, 0)
    rhs = -mixed_sum(5, p, p, d, c, cb) * ((k * c) ** (p - 1)) - boundary * Fraction(p, 2)
    return lhs, rhs


def z0_specialization_sides(p: int, c: int, d: int, chi: DirichletCharacter, form: str = "stated") -> tuple[Cyclotomic, Cyclotomic]:
    """Mixed-sum identity from the s_1/s_2 functional equation at z = 0:

    sum_{m=1}^{p} C(p+1,m) (-ck)^(m-1) s_{2,p+1-m,m}(c,d:chibar)
        = (p+1)/2 (chi(-1) (ck)^(p-1) s_{1,1,p}(d,c:chi) + 𝔅_{p,chi}(0) ℰ_{0,chibar}(0))

    ``form="derived"``: (p+1)/2 ((ck)^(p-1) s_{1,1,p}(d,c:chi) - 𝔅_{p,chibar}(0) ℰ_{0,chi}(0)).
    """
    _check_form(form)
    k = chi.modulus
    _require(p % 2 == 1, "p must be odd")
    _require(c > 0 and d > 0 and gcd(c, d) == 1 and d % 2 == 0, "need coprime c, d with d even")
    _require(_k_divides_one(k, c, d), "need c or d divisible by k")
    cb = conjugate(chi)
    lhs = Cyclotomic.rational(0)
    for m in range(1, p + 1):
        lhs += mixed_sum(2, p, m, c, d, cb) * (comb(p + 1, m) * (-c * k) ** (m - 1))
    s1 = mixed_sum(1, p, p, d, c, chi) * ((c * k) ** (p - 1))
    if form == "stated":
        inner = s1 * chi.parity + gen_bernoulli(p, chi, 0) * char_euler(0, cb, 0)
    else:
        inner = s1 - gen_bernoulli(p, cb, 0) * char_euler(0, chi, 0)
    return lhs, inner * Fraction(p + 1, 2)


def scaling_check(family: int, p: int, q: int, d: int, c: int, chi: DirichletCharacter) -> Cyclotomic:
    """s_{family,p}(qd, qc:chi) - s_{family,p}(d, c:chi)."""
    _require(p % 2 == 1, "p must be odd")
    _require(q >= 1 and c > 0 and gcd(d, c) == 1, "need q >= 1, c > 0, gcd(d, c) = 1")
    if family == 1:
        _require(d % 2 == 0, "s_1 scaling needs d even")
    elif family == 2:
        _require(c % 2 == 0, "s_2 scaling needs c even")
    elif family == 5:
        _require((c + d) % 2 == 0, "s_5 scaling needs c + d even")
    else:
        raise ValueError(f"unknown sum family {family}")
    f = _PLAIN[family]
    return f(p, q * d, q * c, chi) - f(p, d, c, chi)


def vanishes_by_parity(family: int, p: int, d: int, c: int) -> bool:
    """Whether the lemma predicts s_{family,p}(d,c) = 0."""
    if family == 1:
        return (d + p) % 2 == 0
    if family == 2:
        return (c + p) % 2 == 0
    if family == 5:
        return (d + c + p) % 2 == 0
    raise ValueError(f"unknown sum family {family}")
