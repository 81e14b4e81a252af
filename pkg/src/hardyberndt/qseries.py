"""High-precision q-series A, A_1, B at s = 1 - p, the finite transformation
functions g_1 / g_2, the residue kernel, and numeric residuals for the
transformation formulas and series evaluations.

Only integer s = 1 - p with p odd is handled, so every power of (cz + d) is
an integer power and no branch choice ever enters.  At such s the factor
1 + exp(pi i s) equals 2, hence H = 2A, H_1 = 2A_1 and B_1 = 2B.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd
from typing import Optional, Sequence, Union

import mpmath

from .bernoulli_euler import bernoulli_poly, periodic_bernoulli
from .charfuncs import char_euler, gen_bernoulli
from .dirichlet import DirichletCharacter, conjugate, gauss_sum
from .exactmath import DEFAULT_BITS, Cyclotomic
from .hbsums import HypothesisError, mixed_sum

GUARD_BITS = 24


class SeriesConvergenceError(RuntimeError):
    """The truncation index needed for the requested tail exceeds max_terms."""


@dataclass(frozen=True)
class SeriesConfig:
    precision: int = DEFAULT_BITS
    # None means 2**-(precision - 8)
    tail_tolerance: Optional[float] = None
    max_terms: int = 2_000_000

    def tail(self) -> mpmath.mpf:
        if self.tail_tolerance is None:
            return mpmath.mpf(2) ** (-(self.precision - 8))
        return mpmath.mpf(self.tail_tolerance)


@dataclass(frozen=True)
class ModularTuple:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise HypothesisError(f"ad - bc must be 1 for {self}")
        if self.c <= 0:
            raise HypothesisError(f"c must be positive for {self}")

    def __call__(self, z):
        return (self.a * z + self.b) / (self.c * z + self.d)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class SeriesValue:
    value: mpmath.mpc
    tail_bound: mpmath.mpf
    terms: int


# ---------------------------------------------------------------------------
# numeric helpers
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def chi_numeric(chi: DirichletCharacter, bits: int) -> tuple:
    """chi(0), ..., chi(k-1) as mpc at ``bits`` precision."""
    with mpmath.workprec(bits):
        L = chi.value_order
        out = []
        for n in range(chi.modulus):
            e = chi.log(n)
            out.append(mpmath.mpc(0) if e is None else mpmath.expjpi(mpmath.mpf(2 * e) / L))
        return tuple(out)


def _chi(chi: DirichletCharacter, n: int, bits: int):
    return chi_numeric(chi, bits)[n % chi.modulus]


def _num(x, bits: int):
    if isinstance(x, Cyclotomic):
        return x.embed(max(bits, 64))
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpmathify(x)


def _terms_needed(absx, tail, extra_den, max_terms: int) -> int:
    # smallest N with absx**(N+1) / extra_den < tail
    if absx == 0:
        return 1
    n = int(mpmath.ceil(mpmath.log(tail * extra_den) / mpmath.log(absx)))
    n = max(n, 1)
    if n > max_terms:
        raise SeriesConvergenceError(f"needs {n} terms, cap is {max_terms}")
    return n


def _check_upper(z) -> None:
    if mpmath.im(z) <= 0:
        raise ValueError(f"series needs Im z > 0, got {z}")


def _periodic_sum(weights, y, period: int, bits: int):
    # sum_{m>=1} w(m) y^m = sum_{r=1}^{period} w(r) y^r / (1 - y^period)
    num = mpmath.mpc(0)
    pw = mpmath.mpc(1)
    for r in range(1, period + 1):
        pw *= y
        if weights[r]:
            num += weights[r] * pw
    den = 1 - pw
    if abs(den) < mpmath.mpf(2) ** (-bits // 2):
        raise ArithmeticError("near-singular geometric denominator")
    return num / den


# ---------------------------------------------------------------------------
# the series
# ---------------------------------------------------------------------------


def _a_like(z, p: int, chi: DirichletCharacter, cfg: SeriesConfig, alternating: bool) -> SeriesValue:
    k = chi.modulus
    bits = cfg.precision + GUARD_BITS
    with mpmath.workprec(bits):
        z = mpmath.mpmathify(z)
        _check_upper(z)
        period = 2 * k if alternating else k
        weights = [
            (-1 if alternating and r % 2 else 1) * _chi(chi, r, bits) for r in range(period + 1)
        ]
        x = mpmath.expjpi(2 * z / k)
        absx = abs(x)
        N = _terms_needed(absx, cfg.tail(), (1 - absx) ** 2, cfg.max_terms)
        total = mpmath.mpc(0)
        y = mpmath.mpc(1)
        for n in range(1, N + 1):
            y *= x
            cn = _chi(chi, n, bits)
            if cn:
                total += cn * _periodic_sum(weights, y, period, bits) / mpmath.mpf(n) ** p
        bound = absx ** (N + 1) / (1 - absx) ** 2
    with mpmath.workprec(cfg.precision):
        return SeriesValue(+total, +bound, N)


def a_series_value(z, p: int, chi: DirichletCharacter, cfg: SeriesConfig = SeriesConfig()) -> SeriesValue:
    return _a_like(z, p, chi, cfg, alternating=False)


def a1_series_value(z, p: int, chi: DirichletCharacter, cfg: SeriesConfig = SeriesConfig()) -> SeriesValue:
    return _a_like(z, p, chi, cfg, alternating=True)


def b_series_value(z, p: int, chi: DirichletCharacter, cfg: SeriesConfig = SeriesConfig()) -> SeriesValue:
    k = chi.modulus
    bits = cfg.precision + GUARD_BITS
    with mpmath.workprec(bits):
        z = mpmath.mpmathify(z)
        _check_upper(z)
        weights = [_chi(chi, r, bits) for r in range(k + 1)]
        x = mpmath.expjpi(z / k)
        absx = abs(x)
        # terms n = 0..N over odd 2n+1; tail <= |x|^(2N+3) / ((1-|x|)(1-|x|^2))
        M = _terms_needed(absx, cfg.tail(), (1 - absx) * (1 - absx**2), cfg.max_terms)
        N = max(M // 2, 0)
        total = mpmath.mpc(0)
        x2 = x * x
        y = x
        for n in range(N + 1):
            odd = 2 * n + 1
            cn = _chi(chi, odd, bits)
            if cn:
                total += cn * _periodic_sum(weights, y, k, bits) / mpmath.mpf(odd) ** p
            y *= x2
        bound = absx ** (2 * N + 3) / ((1 - absx) * (1 - absx**2))
    with mpmath.workprec(cfg.precision):
        return SeriesValue(+total, +bound, N + 1)


def a_series(z, p: int, chi: DirichletCharacter, cfg: SeriesConfig = SeriesConfig()):
    """A(z, 1-p : chi) = sum_m chi(m) sum_n chi(n) n^-p e(nmz/k)."""
    return a_series_value(z, p, chi, cfg).value


def a1_series(z, p: int, chi: DirichletCharacter, cfg: SeriesConfig = SeriesConfig()):
    """A_1(z, 1-p : chi) = sum_n sum_m (-1)^m chi(m) chi(n) n^-p e(mnz/k)."""
    return a1_series_value(z, p, chi, cfg).value


def b_series(z, p: int, chi: DirichletCharacter, cfg: SeriesConfig = SeriesConfig()):
    """B(z, 1-p : chi), the sum over odd 2n+1 of chi(2n+1) (2n+1)^-p times
    sum_m chi(m) exp(pi i m (2n+1) z / k)."""
    return b_series_value(z, p, chi, cfg).value


def h_series(z, p, chi, cfg=SeriesConfig()):
    return 2 * a_series(z, p, chi, cfg)


def h1_series(z, p, chi, cfg=SeriesConfig()):
    return 2 * a1_series(z, p, chi, cfg)


def b1_series(z, p, chi, cfg=SeriesConfig()):
    return 2 * b_series(z, p, chi, cfg)


def a1_rearranged(z, p: int, chi: DirichletCharacter, cfg: SeriesConfig = SeriesConfig()):
    """Right side of G(chibar) A_1(z,1-p:chi) = -sum_{j=1}^{k-1} chibar(j)
    sum_n chi(n) / (n^p (exp(-2 pi i (j + n z)/k) + 1))."""
    k = chi.modulus
    bits = cfg.precision + GUARD_BITS
    cb = conjugate(chi)
    with mpmath.workprec(bits):
        z = mpmath.mpmathify(z)
        _check_upper(z)
        absx = abs(mpmath.expjpi(2 * z / k))
        N = _terms_needed(absx, cfg.tail(), (1 - absx) ** 2, cfg.max_terms)
        total = mpmath.mpc(0)
        for j in range(1, k):
            cj = _chi(cb, j, bits)
            if not cj:
                continue
            inner = mpmath.mpc(0)
            for n in range(1, N + 1):
                cn = _chi(chi, n, bits)
                if cn:
                    inner += cn / (mpmath.mpf(n) ** p * (mpmath.expjpi(-2 * (j + n * z) / k) + 1))
            total -= cj * inner
    with mpmath.workprec(cfg.precision):
        return +total


def b_rearranged(z, p: int, chi: DirichletCharacter, cfg: SeriesConfig = SeriesConfig()):
    """Right side of G(chi) B(z,1-p:chibar) = sum_{j=1}^{k-1} chi(j)
    sum_{n>=0} chibar(2n+1) / ((2n+1)^p (exp(-pi i (2j + (2n+1) z)/k) - 1))."""
    k = chi.modulus
    bits = cfg.precision + GUARD_BITS
    cb = conjugate(chi)
    with mpmath.workprec(bits):
        z = mpmath.mpmathify(z)
        _check_upper(z)
        absx = abs(mpmath.expjpi(z / k))
        M = _terms_needed(absx, cfg.tail(), (1 - absx) * (1 - absx**2), cfg.max_terms)
        total = mpmath.mpc(0)
        for j in range(1, k):
            cj = _chi(chi, j, bits)
            if not cj:
                continue
            inner = mpmath.mpc(0)
            for n in range(M // 2 + 1):
                odd = 2 * n + 1
                cn = _chi(cb, odd, bits)
                if cn:
                    inner += cn / (mpmath.mpf(odd) ** p * (mpmath.expjpi(-(2 * j + odd * z) / k) - 1))
            total += cj * inner
    with mpmath.workprec(cfg.precision):
        return +total


# ---------------------------------------------------------------------------
# g_1, g_2 and the residue kernel
# ---------------------------------------------------------------------------


Exact = Union[int, Fraction, Cyclotomic]


def _poly_eval(coeffs: Sequence[Cyclotomic], w, bits: int):
    # sum_i coeffs[i] * w**i, exactly when w is exact
    if isinstance(w, (int, Fraction, Cyclotomic)):
        acc = Cyclotomic.rational(0)
        pw = Cyclotomic.rational(1)
        for c in coeffs:
            acc = acc + c * pw
            pw = pw * w
        return acc
    with mpmath.workprec(bits + GUARD_BITS):
        w = mpmath.mpmathify(w)
        acc = mpmath.mpc(0)
        pw = mpmath.mpc(1)
        for c in coeffs:
            acc += _num(c, bits + GUARD_BITS) * pw
            pw *= w
    with mpmath.workprec(bits):
        return +acc


def _is_exact(z) -> bool:
    return isinstance(z, (int, Fraction, Cyclotomic))


def g1_coefficients(c: int, d: int, p: int, chi: DirichletCharacter, shifted: bool = False) -> list[Cyclotomic]:
    """Coefficients of g_1 as a polynomial in w = -(cz + d) (or -(cz + d + ck)).

    Entry m-1 is C(p,m) k^(m-p) sum_{n=1}^{ck} [(-1)^n] chi(n) ℰ_{p-m,chi}(dn/c) 𝔅_m(n/ck),
    the (-1)^n appearing in the shifted form.
    """
    k = chi.modulus
    family = 5 if shifted else 1
    return [
        mixed_sum(family, p, m, d, c, chi) * (comb(p, m) * Fraction(k) ** (m - p)) for m in range(1, p + 1)
    ]


def g1_eval(c: int, d: int, z, p: int, chi: DirichletCharacter, shifted: bool = False,
            bits: int = DEFAULT_BITS, check_parity: bool = True):
    """g_1(c, d, z, p, chi); with ``shifted`` the form g_1(c, d+ck, z, p, chi)
    written through the (-1)^n weighted sum.  Exact when z is exact."""
    if p % 2 == 0 or chi.modulus % 2 == 0:
        raise HypothesisError("g_1 needs odd p and odd modulus")
    if check_parity:
        if shifted and (c % 2 == 0 or d % 2 == 0):
            raise HypothesisError("shifted g_1 needs c and d odd")
        if not shifted and d % 2:
            raise HypothesisError("g_1 needs d even")
    dd = d + c * chi.modulus if shifted else d
    w = -(c * z + dd)
    return _poly_eval(g1_coefficients(c, d, p, chi, shifted), w, bits)


def g2_coefficients(c: int, d: int, p: int, chi: DirichletCharacter) -> list[Cyclotomic]:
    """Entry m-1 is C(p+1,m) k^(m-p) sum_{n=1}^{ck} (-1)^n chi(n) 𝔅_{p+1-m,chi}(dn/c) 𝔅_m(n/ck)."""
    k = chi.modulus
    return [
        mixed_sum(2, p, m, d, c, chi) * (comb(p + 1, m) * Fraction(k) ** (m - p)) for m in range(1, p + 1)
    ]


def g2_eval(c: int, d: int, z, p: int, chi: DirichletCharacter, bits: int = DEFAULT_BITS):
    """g_2(c, d, z, p, chi); exact when z is exact."""
    if p % 2 == 0:
        raise HypothesisError("g_2 needs odd p")
    return _poly_eval(g2_coefficients(c, d, p, chi), -(c * z + d), bits)


def f_residue(z, p: int, c: int, d: int, j: int, mu: int, nu: int, k: int, bits: int = DEFAULT_BITS):
    """Residue form of the loop integral f(z, 1-p, c, d):

    2 pi i k^(p-1)/(p+1)! sum_{m=0}^{p+1} C(p+1,m) (-(cz+d))^(m-1)
        B_{p+1-m}((nu + {dj/c})/k) B_m((mu c + j)/(ck))
    """
    frac = Fraction(d * j, c) - (d * j) // c
    u = (nu + frac) / k
    v = Fraction(mu * c + j, c * k)
    with mpmath.workprec(bits + GUARD_BITS):
        w = -(c * mpmath.mpmathify(z) + d)
        acc = mpmath.mpc(0)
        for m in range(p + 2):
            coef = comb(p + 1, m) * bernoulli_poly(p + 1 - m)(u) * bernoulli_poly(m)(v)
            if coef:
                acc += _num(coef, bits) * w ** (m - 1)
        val = 2j * mpmath.pi * mpmath.mpf(k) ** (p - 1) / factorial(p + 1) * acc
    with mpmath.workprec(bits):
        return +val


# ---------------------------------------------------------------------------
# transformation formulas
# ---------------------------------------------------------------------------

THEOREMS = ("d_even_ad", "d_even_bc", "shifted_ad", "shifted_bc", "c_even_ad", "c_even_bc")


@dataclass(frozen=True)
class TransformSides:
    lhs: mpmath.mpc
    rhs: mpmath.mpc
    # lhs - rhs formed before the final rounding
    residual: mpmath.mpc
    tail_bound: mpmath.mpf


def check_transform_hypotheses(theorem: str, T: ModularTuple, k: int) -> None:
    a, b, c, d = T.as_tuple()
    if k % 2 == 0:
        raise HypothesisError("modulus must be odd")
    if theorem.endswith("_ad"):
        if a % k or d % k:
            raise HypothesisError(f"{theorem} needs a = d = 0 mod {k}")
    elif theorem.endswith("_bc"):
        if b % k or c % k:
            raise HypothesisError(f"{theorem} needs b = c = 0 mod {k}")
    else:
        raise ValueError(f"unknown theorem {theorem!r}")
    family = theorem.rsplit("_", 1)[0]
    if family == "d_even" and d % 2:
        raise HypothesisError(f"{theorem} needs d even")
    if family == "c_even" and c % 2:
        raise HypothesisError(f"{theorem} needs c even")
    if family == "shifted" and (c % 2 == 0 or d % 2 == 0):
        raise HypothesisError(f"{theorem} needs c and d odd")
    if family not in ("d_even", "c_even", "shifted"):
        raise ValueError(f"unknown theorem {theorem!r}")


def transform_sides(theorem: str, T: ModularTuple, z, p: int, chi: DirichletCharacter,
                    cfg: SeriesConfig = SeriesConfig()) -> TransformSides:
    """Both sides of one of the six transformation formulas for H_1 at s = 1-p."""
    if p % 2 == 0 or p < 1:
        raise HypothesisError("p must be a positive odd integer")
    k = chi.modulus
    check_transform_hypotheses(theorem, T, k)
    a, b, c, d = T.as_tuple()
    bits = cfg.precision
    cb = conjugate(chi)
    family, cong = theorem.rsplit("_", 1)
    work = bits + GUARD_BITS
    with mpmath.workprec(work):
        z = mpmath.mpmathify(z)
        _check_upper(z)
        dd = d + c * k if family == "shifted" else d
        Tz = (a * z + b + (a * k if family == "shifted" else 0)) / (c * z + dd)
        lhs_series = a1_series_value(Tz, p, chi, SeriesConfig(work, cfg.tail_tolerance, cfg.max_terms))
        G_chi = _num(gauss_sum(chi), work)
        G_cb = _num(gauss_sum(cb), work)
        lhs = G_cb * (c * z + dd) ** (p - 1) * 2 * lhs_series.value

        X = lambda ch, n: _chi(ch, n, work)  # noqa: E731
        twopii_p = (2j * mpmath.pi) ** p
        if cong == "ad":
            pref, other, G_other, two = X(cb, b) * X(chi, c), cb, G_chi, X(chi, 2)
        else:
            pref, other, G_other, two = X(cb, a) * X(chi, d), chi, G_cb, X(cb, 2)

        if family in ("d_even", "shifted"):
            b_val = b_series_value(z, p, other, SeriesConfig(work, cfg.tail_tolerance, cfg.max_terms))
            series_term = G_other * 2**p * two * 2 * b_val.value
            g = g1_eval(c, d, z, p, other, shifted=(family == "shifted"), bits=work)
            tail = lhs_series.tail_bound + b_val.tail_bound
            if family == "d_even":
                rhs = pref * (series_term - X(chi, -1) * twopii_p / (2 * factorial(p)) * g)
            else:
                sgn = X(chi, -c) / X(chi, c) if cong == "ad" else X(chi, -d) / X(chi, d)
                rhs = pref * series_term - pref * sgn / 2 * twopii_p / factorial(p) * g
        else:
            h_val = a1_series_value(z, p, other, SeriesConfig(work, cfg.tail_tolerance, cfg.max_terms))
            series_term = G_other * 2 * h_val.value
            g = g2_eval(c, d, z, p, other, bits=work)
            tail = lhs_series.tail_bound + h_val.tail_bound
            sgn = X(chi, -1)
            rhs = pref * series_term + pref * sgn * twopii_p / factorial(p + 1) * g
        diff = lhs - rhs
    with mpmath.workprec(bits):
        return TransformSides(+lhs, +rhs, +diff, +tail)


def transform_residual(theorem: str, T: ModularTuple, z, p: int, chi: DirichletCharacter,
                       cfg: SeriesConfig = SeriesConfig()):
    return transform_sides(theorem, T, z, p, chi, cfg).residual


def d_even_ad_residue_rhs(T: ModularTuple, z, p: int, chi: DirichletCharacter,
                          cfg: SeriesConfig = SeriesConfig()):
    """Right side of the d-even, a = d = 0 (mod k) formula assembled from the
    triple sum over (j, mu, nu) of residue kernels instead of g_1.  Serves as a
    second, independent path for that right side."""
    k = chi.modulus
    check_transform_hypotheses("d_even_ad", T, k)
    a, b, c, d = T.as_tuple()
    cb = conjugate(chi)
    work = cfg.precision + GUARD_BITS
    with mpmath.workprec(work):
        z = mpmath.mpmathify(z)
        X = lambda ch, n: _chi(ch, n, work)  # noqa: E731
        b_val = b_series_value(z, p, cb, SeriesConfig(work, cfg.tail_tolerance, cfg.max_terms)).value
        pref = X(cb, b) * X(chi, c)
        head = pref * _num(gauss_sum(chi), work) * 2**p * X(chi, 2) * 2 * b_val
        acc = mpmath.mpc(0)
        for j in range(1, c + 1):
            for mu in range(k):
                w = X(cb, mu * c + j)
                if not w:
                    continue
                for nu in range(k):
                    half = X(chi, (d * j) // (2 * c) - nu)
                    full = X(chi, (d * j) // c - nu)
                    term = mpmath.mpc(0)
                    if half:
                        term += 2**p * X(chi, 2) * half * f_residue(z / 2, p, c, d // 2, j, mu, nu, k, work)
                    if full:
                        term -= full * f_residue(z, p, c, d, j, mu, nu, k, work)
                    acc += w * term
        # e^{-pi i s} = 1 at s = 1 - p with p odd
        rhs = head + pref * (-mpmath.mpf(k) / (2j * mpmath.pi)) ** (1 - p) * acc
    with mpmath.workprec(cfg.precision):
        return +rhs


def reduction_residuals(z, p: int, chi: DirichletCharacter, cfg: SeriesConfig = SeriesConfig()) -> dict:
    """Residuals of the two halving reductions at s = 1 - p:

    ``halving_B``:  2^p chi(2) H(z/2 : chibar) - H(z : chibar) - 2^p chi(2) B_1(z : chibar)
    ``alternating``: H_1(z : chi) - (2 chi(2) H(2z : chi) - H(z : chi))
    """
    cb = conjugate(chi)
    work = cfg.precision + GUARD_BITS
    wcfg = SeriesConfig(work, cfg.tail_tolerance, cfg.max_terms)
    with mpmath.workprec(work):
        z = mpmath.mpmathify(z)
        two = _chi(chi, 2, work)
        r1 = 2**p * two * h_series(z / 2, p, cb, wcfg) - h_series(z, p, cb, wcfg) - 2**p * two * b1_series(z, p, cb, wcfg)
        r2 = h1_series(z, p, chi, wcfg) - (2 * two * h_series(2 * z, p, chi, wcfg) - h_series(z, p, chi, wcfg))
    with mpmath.workprec(cfg.precision):
        return {"halving_B": +r1, "alternating": +r2}


# ---------------------------------------------------------------------------
# functional equations of g_1 / g_2
# ---------------------------------------------------------------------------

G_KINDS = ("V1", "inversion")


def check_g_hypotheses(kind: str, c: int, d: int, k: int) -> None:
    if c <= 0 or d <= 0 or gcd(c, d) != 1:
        raise HypothesisError("need coprime positive c, d")
    if c % k and d % k:
        raise HypothesisError(f"need c or d divisible by {k}")
    if kind == "V1":
        if c % 2 == 0 or d % 2 == 0:
            raise HypothesisError("V1 functional equation needs c, d odd")
    elif kind == "inversion":
        if d % 2:
            raise HypothesisError("inversion functional equation needs d even")
    else:
        raise ValueError(f"unknown functional equation {kind!r}")


def g_functional_sides(kind: str, c: int, d: int, z, p: int, chi: DirichletCharacter,
                       form: str = "stated", bits: int = DEFAULT_BITS):
    """Both sides of a functional equation for g_1 / g_2.  Exact when z is exact.

    ``V1``:  g_1(d,-c-dk,z,p,chi) - chi(-1)(z-k)^(p-1) g_1(c,d+ck,V_1(z),p,chibar)
             = chibar(4) p/(2k^(p-1)) sum_m C(p-1,m)(z-k)^m ℰ_{p-1-m,chibar}(0) ℰ_{m,chi}(0),
             V_1(z) = (-kz + k^2 - 1)/(z - k).
    ``inversion``: (p+1)/2 z^(p-1) g_1(c,d,-1/z,p,chibar) + g_2(d,-c,z,p,chi)
             = -chi(-1)/k^(p-1) sum_m C(p+1,m)(m/2)(-z)^(m-1) 𝔅_{p+1-m,chi}(0) ℰ_{m-1,chibar}(0).

    ``form="derived"`` gives the versions re-derived from the transformation
    formulas: for V1 the factor is chi(-1) and the pairing is
    ℰ_{p-1-m,chi}(0) ℰ_{m,chibar}(0); for inversion chi(-1) multiplies the g_1
    term instead of the right side.
    """
    if form not in ("stated", "derived"):
        raise ValueError(f"unknown form {form!r}")
    k = chi.modulus
    check_g_hypotheses(kind, c, d, k)
    cb = conjugate(chi)
    exact = _is_exact(z)
    work = bits + GUARD_BITS
    ctx = mpmath.workprec(work)
    with ctx:
        if not exact:
            z = mpmath.mpmathify(z)
        if kind == "V1":
            if z == k:
                raise ValueError("z = k is a pole of V_1")
            V = (-k * z + k * k - 1) / (z - k)
            lhs = g1_eval(d, -c - d * k, z, p, chi, bits=work, check_parity=False) - chi.parity * (z - k) ** (
                p - 1
            ) * g1_eval(c, d, V, p, cb, shifted=True, bits=work)
            first, second = (cb, chi) if form == "stated" else (chi, cb)
            boundary = Cyclotomic.rational(0)
            coeffs = []
            for m in range(p):
                coeffs.append(char_euler(p - 1 - m, first, 0) * char_euler(m, second, 0) * comb(p - 1, m))
            factor = cb(4) if form == "stated" else Cyclotomic.rational(chi.parity)
            scale = factor * Fraction(p, 2 * k ** (p - 1))
            rhs = _poly_eval([cf * scale for cf in coeffs], z - k, work)
        else:
            if z == 0:
                raise ValueError("z = 0 is a pole of -1/z")
            g1_part = Fraction(p + 1, 2) * z ** (p - 1) * g1_eval(c, d, -1 / z, p, cb, bits=work)
            if form == "derived":
                g1_part = chi.parity * g1_part
            lhs = g1_part + g2_eval(d, -c, z, p, chi, bits=work)
            coeffs = [Cyclotomic.rational(0)]
            for m in range(1, p + 1):
                coeffs.append(
                    gen_bernoulli(p + 1 - m, chi, 0) * char_euler(m - 1, cb, 0) * (comb(p + 1, m) * Fraction(m, 2))
                )
            # coeffs[m] multiplies (-z)^(m-1): shift down by one
            coeffs = coeffs[1:]
            sign = chi.parity if form == "stated" else 1
            scale = Fraction(-sign, k ** (p - 1))
            rhs = _poly_eval([cf * scale for cf in coeffs], -z, work)
    if exact:
        return lhs, rhs
    with mpmath.workprec(bits):
        return +lhs, +rhs


def g_functional_residual(kind: str, c: int, d: int, z, p: int, chi: DirichletCharacter,
                          form: str = "stated", bits: int = DEFAULT_BITS):
    lhs, rhs = g_functional_sides(kind, c, d, z, p, chi, form, bits)
    return lhs - rhs


# ---------------------------------------------------------------------------
# series evaluations
# ---------------------------------------------------------------------------

SERIES_NAMES = ("seri1", "corollary", "final_theorem")


def _decay_terms(rate, tail, max_terms: int) -> int:
    # terms bounded by 4 e^{-rate n} once e^{rate n} >= 2
    start = int(mpmath.ceil(mpmath.log(2) / rate)) + 1
    n = int(mpmath.ceil(mpmath.log(4 / (tail * (1 - mpmath.exp(-rate)))) / rate))
    n = max(n, start)
    if n > max_terms:
        raise SeriesConvergenceError(f"needs {n} terms, cap is {max_terms}")
    return n


def _positive_param(x):
    # callables let callers express values like pi/k at the working precision
    x = mpmath.re(_num(x() if callable(x) else x, mpmath.mp.prec))
    if x <= 0:
        raise ValueError("parameter must be positive")
    return x


def seri1_sides(alpha, p: int, chi: DirichletCharacter, cfg: SeriesConfig = SeriesConfig()):
    """Both sides of the exponential-series identity with alpha beta = (pi/k)^2.
    ``alpha`` is a positive number or a zero-argument callable returning one."""
    k = chi.modulus
    cb = conjugate(chi)
    work = cfg.precision + GUARD_BITS
    with mpmath.workprec(work):
        alpha = _positive_param(alpha)
        beta = (mpmath.pi / k) ** 2 / alpha
        N1 = _decay_terms(2 * alpha, cfg.tail(), cfg.max_terms)
        N2 = _decay_terms(2 * beta, cfg.tail(), cfg.max_terms)
        X = lambda ch, n: _chi(ch, n, work)  # noqa: E731
        first = mpmath.mpc(0)
        second = mpmath.mpc(0)
        for j in range(1, k):
            phase = mpmath.expjpi(-mpmath.mpf(2 * j) / k)
            if X(cb, j):
                inner = mpmath.mpc(0)
                for n in range(1, N1 + 1):
                    cn = X(chi, n)
                    if cn:
                        inner += cn / (mpmath.mpf(n) ** p * (mpmath.exp(2 * n * alpha) * phase + 1))
                first += X(cb, j) * inner
            if X(chi, j):
                inner = mpmath.mpc(0)
                for n in range(N2 + 1):
                    odd = 2 * n + 1
                    cn = X(cb, odd)
                    if cn:
                        inner += cn / (mpmath.mpf(odd) ** p * (mpmath.exp(odd * beta) * phase - 1))
                second += X(chi, j) * inner
        lhs = (-beta) ** ((p - 1) // 2) * first + 2**p * alpha ** mpmath.mpf((p - 1) / 2) * X(chi, -2) * second
        acc = mpmath.mpc(0)
        for m in range(1, p + 1):
            coef = _num(char_euler(p - m, cb, 0) * gen_bernoulli(m, chi, 0), work)
            if coef:
                acc += comb(p, m) * mpmath.mpc(0, 1) ** (p + 1 - m) * coef * alpha ** (p - mpmath.mpf(m) / 2) * beta ** (
                    mpmath.mpf(p - 1 + m) / 2
                )
        rhs = mpmath.mpf(2) ** (p - 2) * k / factorial(p) * acc
    with mpmath.workprec(cfg.precision):
        return +lhs, +rhs


def _mod3_character() -> DirichletCharacter:
    from .dirichlet import enumerate_primitive

    return enumerate_primitive(3)[0]


def cosh_series(p: int, scale, sign_exponent, cfg: SeriesConfig = SeriesConfig()):
    """sum_{n>=1} (-1)^(n e) chi(n) / (n^p (2 cosh(scale n) - (-1)^n)) for chi mod 3."""
    chi = _mod3_character()
    work = cfg.precision + GUARD_BITS
    with mpmath.workprec(work):
        scale = mpmath.mpf(scale)
        N = _decay_terms(scale, cfg.tail(), cfg.max_terms)
        total = mpmath.mpf(0)
        for n in range(1, N + 1):
            if n % 3 == 0:
                continue
            cn = 1 if n % 3 == 1 else -1
            sgn = -1 if (n * sign_exponent) % 2 else 1
            total += sgn * cn / (mpmath.mpf(n) ** p * (2 * mpmath.cosh(scale * n) - (-1) ** n))
    with mpmath.workprec(cfg.precision):
        return +total


def corollary_sides(p: int, cfg: SeriesConfig = SeriesConfig()):
    """Series with 2cosh(n pi/3) denominators against its closed form (chi mod 3)."""
    if p % 2 == 0 or p < 1:
        raise ValueError("p must be a positive odd integer")
    chi = _mod3_character()
    work = cfg.precision + GUARD_BITS
    with mpmath.workprec(work):
        lhs = cosh_series(p, mpmath.pi / 3, (p + 1) // 2, SeriesConfig(work, cfg.tail_tolerance, cfg.max_terms))
        acc = mpmath.mpc(0)
        for m in range(1, p + 1):
            coef = _num(char_euler(p - m, chi, 0) * gen_bernoulli(m, chi, 0), work)
            acc += comb(p, m) * mpmath.mpc(0, 1) ** (p - m) * coef
        rhs = (-1) ** ((p + 1) // 2) / (4 * mpmath.sqrt(3)) * mpmath.mpf(3) / factorial(p) * (mpmath.pi / 3) ** p * acc
    with mpmath.workprec(cfg.precision):
        return +lhs, +rhs


def final_theorem_constant() -> Cyclotomic:
    """sum_{j=1}^{5} (-1)^j chi(j) 𝔅_{1,chi}(3j/2) 𝔅_1(j/6), chi mod 3."""
    chi = _mod3_character()
    total = Cyclotomic.rational(0)
    for j in range(1, 6):
        total += chi(j) * gen_bernoulli(1, chi, Fraction(3 * j, 2)) * ((-1) ** j * periodic_bernoulli(1, Fraction(j, 6)))
    return total


def final_theorem_sides(alpha, cfg: SeriesConfig = SeriesConfig()):
    """Returns (series sum at alpha plus at beta, claimed value -pi/(3 sqrt 3)),
    with alpha beta = (pi/3)^2."""
    work = cfg.precision + GUARD_BITS
    wcfg = SeriesConfig(work, cfg.tail_tolerance, cfg.max_terms)
    with mpmath.workprec(work):
        alpha = _positive_param(alpha)
        beta = (mpmath.pi / 3) ** 2 / alpha
        lhs = cosh_series(1, 2 * alpha, 1, wcfg) + cosh_series(1, 2 * beta, 1, wcfg)
        claim = -mpmath.pi / (3 * mpmath.sqrt(3))
    with mpmath.workprec(cfg.precision):
        return +lhs, +claim


def final_theorem_particular(cfg: SeriesConfig = SeriesConfig()):
    """Returns (series with 2cosh(2n pi/3), claimed value -pi/(6 sqrt 3))."""
    work = cfg.precision + GUARD_BITS
    with mpmath.workprec(work):
        val = cosh_series(1, 2 * mpmath.pi / 3, 1, SeriesConfig(work, cfg.tail_tolerance, cfg.max_terms))
        claim = -mpmath.pi / (6 * mpmath.sqrt(3))
    with mpmath.workprec(cfg.precision):
        return +val, +claim


def series_identity(name: str, params: dict, cfg: SeriesConfig = SeriesConfig()):
    """Dispatch to ``seri1`` (alpha, p, chi), ``corollary`` (p) or
    ``final_theorem`` (alpha); returns (lhs, rhs)."""
    if name == "seri1":
        return seri1_sides(params["alpha"], params["p"], params["chi"], cfg)
    if name == "corollary":
        return corollary_sides(params["p"], cfg)
    if name == "final_theorem":
        return final_theorem_sides(params["alpha"], cfg)
    raise ValueError(f"unknown series identity {name!r}")
