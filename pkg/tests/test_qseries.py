from fractions import Fraction
from math import comb

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hardyberndt import qseries as qs
from hardyberndt.charfuncs import char_euler
from hardyberndt.dirichlet import enumerate_primitive
from hardyberndt.exactmath import Cyclotomic
from hardyberndt.hbsums import HypothesisError, mixed_sum
from hardyberndt.suites import small_tuple
from conftest import ODD_CHARS

CHI3 = enumerate_primitive(3)[0]
CHI5 = enumerate_primitive(5)[0]  # chi(2) = i
CFG = qs.SeriesConfig(precision=128)
TOL = mpmath.mpf(10) ** -30
I = Cyclotomic.zeta(4)


def num(re, im="0"):
    # parse at full precision; module-level literals would be rounded to 53 bits
    with mpmath.workprec(200):
        return mpmath.mpc(re, im)


def pi_over_sqrt3(n):
    with mpmath.workprec(200):
        return -mpmath.pi / (n * mpmath.sqrt(3))


def close(a, b, tol=TOL):
    with mpmath.workprec(200):
        return abs(mpmath.mpmathify(a) - mpmath.mpmathify(b)) < tol


# independent oracle: naive truncated double sums at 60 digits
@pytest.mark.parametrize(
    "z, p, chi, expected",
    [
        (1j, 1, CHI3, num("-0.1304061571589892599764128957353256506311")),
        (0.5 + 1j, 3, CHI3, num("-0.05505130618125124310765807102814845431497", "-0.1183838618228289119781384118412397227245")),
        (1j, 1, CHI5, num("-0.2924403837909000883018048027256544218848", "0.07099782990190751892423245355551268827646")),
    ],
)
def test_a1_series_values(z, p, chi, expected):
    assert close(qs.a1_series(z, p, chi, CFG), expected)


@pytest.mark.parametrize(
    "z, p, chi, expected",
    [
        (1j, 1, CHI3, num("0.2370968154595416784441399284060297967318")),
        (0.5 + 1j, 3, CHI5, num("0.431603577234684862688284114187396409453", "0.2447152792233812889315698179122321628786")),
    ],
)
def test_b_series_values(z, p, chi, expected):
    assert close(qs.b_series(z, p, chi, CFG), expected)


def test_h_factor_shortcuts():
    z = mpmath.mpc(0.3, 1.1)
    assert close(qs.h1_series(z, 3, CHI5, CFG), 2 * qs.a1_series(z, 3, CHI5, CFG))
    assert close(qs.b1_series(z, 3, CHI5, CFG), 2 * qs.b_series(z, 3, CHI5, CFG))
    assert close(qs.h_series(z, 3, CHI5, CFG), 2 * qs.a_series(z, 3, CHI5, CFG))


@pytest.mark.parametrize("chi", ODD_CHARS[:4], ids=lambda c: c.label)
@pytest.mark.parametrize("p", [1, 3])
def test_rearranged_forms(chi, p):
    from hardyberndt.dirichlet import conjugate, gauss_sum

    z = mpmath.mpc(0.25, 0.9)
    cb = conjugate(chi)
    with mpmath.workprec(160):
        lhs_a = gauss_sum(cb).embed(160) * qs.a1_series(z, p, chi, CFG)
        lhs_b = gauss_sum(chi).embed(160) * qs.b_series(z, p, cb, CFG)
    assert close(lhs_a, qs.a1_rearranged(z, p, chi, CFG))
    assert close(lhs_b, qs.b_rearranged(z, p, chi, CFG))


def test_tail_bound_is_sound():
    z = mpmath.mpc(0.1, 0.4)
    coarse = qs.a1_series_value(z, 1, CHI5, qs.SeriesConfig(precision=128, tail_tolerance=mpmath.mpf(10) ** -12))
    fine = qs.a1_series_value(z, 1, CHI5, qs.SeriesConfig(precision=128, tail_tolerance=mpmath.mpf(10) ** -30))
    assert abs(coarse.value - fine.value) <= coarse.tail_bound
    assert fine.terms > coarse.terms


def test_truncation_cap():
    with pytest.raises(qs.SeriesConvergenceError):
        qs.a1_series(mpmath.mpc(0, 1e-4), 1, CHI3, qs.SeriesConfig(precision=128, max_terms=1000))


def test_upper_half_plane_required():
    with pytest.raises(ValueError):
        qs.a1_series(mpmath.mpc(0, -1), 1, CHI3, CFG)


def test_modular_tuple_validation():
    T = qs.ModularTuple(3, 4, 2, 3)
    assert T.as_tuple() == (3, 4, 2, 3)
    assert close(T(mpmath.mpc(0, 1)), (3j + 4) / (2j + 3), 1e-15)
    with pytest.raises(ValueError):
        qs.ModularTuple(1, 1, 1, 1)
    with pytest.raises(ValueError):
        qs.ModularTuple(1, 0, 0, 1)


def _g1_direct(c, d, z, p, chi, shifted=False):
    # the defining double sum, written out term by term
    k = chi.modulus
    base = -(c * z + (d + c * k if shifted else d))
    total = Cyclotomic.rational(0)
    for m in range(1, p + 1):
        inner = mixed_sum(5 if shifted else 1, p, m, d, c, chi)
        total += inner * comb(p, m) * Fraction(k) ** (m - p) * base ** (m - 1)
    return total


@pytest.mark.parametrize("chi", [CHI3, CHI5], ids=lambda c: c.label)
@pytest.mark.parametrize("p", [1, 3, 5])
def test_g1_matches_double_sum(chi, p):
    z = Fraction(1, 3) + 2 * I
    assert qs.g1_eval(1, 6, z, p, chi) == _g1_direct(1, 6, z, p, chi)
    assert qs.g1_eval(3, 5, z, p, chi, shifted=True) == _g1_direct(3, 5, z, p, chi, shifted=True)


def test_g1_p1_reduces_to_single_sum():
    z = Fraction(2, 5) + I
    val = qs.g1_eval(1, 2, z, 1, CHI5)
    assert val == mixed_sum(1, 1, 1, 2, 1, CHI5)


def test_g2_degenerate_base():
    # c z + d = 1 collapses every power of the base to (+-1)
    coeffs = qs.g2_coefficients(2, 3, 3, CHI5)
    z = Fraction(-1)  # 2 * (-1) + 3 = 1
    assert qs.g2_eval(2, 3, z, 3, CHI5) == sum((cf * (-1) ** i for i, cf in enumerate(coeffs)), Cyclotomic.rational(0))


def test_g_numeric_matches_exact():
    z_exact = Fraction(1, 2) + I
    exact = qs.g1_eval(1, 6, z_exact, 3, CHI5)
    numeric = qs.g1_eval(1, 6, mpmath.mpc(0.5, 1), 3, CHI5, bits=128)
    assert close(exact.embed(128), numeric)


def test_g_parity_hypotheses():
    with pytest.raises(HypothesisError, match="d even"):
        qs.g1_eval(1, 3, I, 1, CHI3)
    with pytest.raises(HypothesisError, match="c and d odd"):
        qs.g1_eval(2, 3, I, 1, CHI3, shifted=True)
    with pytest.raises(HypothesisError):
        qs.g2_eval(2, 3, I, 2, CHI3)


@pytest.mark.parametrize("T, theorem, ps", [
    ((3, 17, 1, 6), "d_even_ad", (1, 3)),
    ((3, 4, 2, 3), "c_even_ad", (1, 3)),
    ((3, 8, 1, 3), "shifted_ad", (1, 3)),
])
def test_transformation_formulas_k3(T, theorem, ps):
    for p in ps:
        for z in (mpmath.mpc(0, 1), mpmath.mpc(0.5, 1)):
            sides = qs.transform_sides(theorem, qs.ModularTuple(*T), z, p, CHI3, CFG)
            assert abs(sides.residual) < TOL
            assert sides.tail_bound < TOL


@pytest.mark.parametrize("theorem", qs.THEOREMS)
@pytest.mark.parametrize("chi", [CHI3, CHI5, enumerate_primitive(5)[1]], ids=lambda c: c.label)
def test_transformation_formulas_small_tuples(theorem, chi):
    T = qs.ModularTuple(*small_tuple(theorem, chi.modulus))
    sides = qs.transform_sides(theorem, T, mpmath.mpc(0.5, 1), 3, chi, CFG)
    assert abs(sides.residual) < TOL


def test_transformation_hypotheses():
    with pytest.raises(HypothesisError, match="a = d = 0"):
        qs.transform_sides("d_even_ad", qs.ModularTuple(1, 0, 1, 1), 1j, 1, CHI3, CFG)
    with pytest.raises(HypothesisError, match="c even"):
        qs.check_transform_hypotheses("c_even_ad", qs.ModularTuple(3, 8, 1, 3), 3)
    with pytest.raises(ValueError):
        qs.check_transform_hypotheses("meyer", qs.ModularTuple(3, 8, 1, 3), 3)


@pytest.mark.parametrize("p", [1, 3])
def test_residue_triple_sum_agrees_with_g1(p):
    T = qs.ModularTuple(3, 17, 1, 6)
    z = mpmath.mpc(0.5, 1)
    sides = qs.transform_sides("d_even_ad", T, z, p, CHI3, CFG)
    assert close(qs.d_even_ad_residue_rhs(T, z, p, CHI3, CFG), sides.rhs)


@pytest.mark.parametrize("chi", [CHI3, CHI5], ids=lambda c: c.label)
def test_reductions(chi):
    res = qs.reduction_residuals(mpmath.mpc(0.2, 1.3), 3, chi, CFG)
    assert all(abs(v) < TOL for v in res.values())


@pytest.mark.parametrize("chi", ODD_CHARS, ids=lambda c: c.label)
@pytest.mark.parametrize("p", [1, 3, 5])
def test_functional_equations_derived_exact(chi, p):
    z = Fraction(1, 2) + I
    k = chi.modulus
    c, d = (k, 1) if k != 1 else (1, 1)
    assert qs.g_functional_residual("V1", c, d, z, p, chi, form="derived") == 0
    assert qs.g_functional_residual("inversion", 1, 2 * k, z, p, chi, form="derived") == 0


def test_functional_equation_left_side_ignores_c_d():
    z = Fraction(1, 3) + 2 * I
    a = qs.g_functional_sides("V1", 3, 1, z, 3, CHI3)[0]
    b = qs.g_functional_sides("V1", 9, 5, z, 3, CHI3)[0]
    assert a == b


def test_stated_v1_fails_for_odd_character():
    # p = 1: a pure sign flip; p = 3: not even a sign
    assert qs.g_functional_sides("V1", 3, 1, I, 1, CHI3) == (-2, 2)
    assert qs.g_functional_residual("V1", 3, 1, I, 3, CHI3) == 24 - 16 * I


def test_functional_equation_poles_and_hypotheses():
    with pytest.raises(ValueError, match="pole"):
        qs.g_functional_sides("V1", 3, 1, 3, 1, CHI3)
    with pytest.raises(ValueError, match="pole"):
        qs.g_functional_sides("inversion", 1, 6, 0, 1, CHI3)
    with pytest.raises(HypothesisError, match="c, d odd"):
        qs.g_functional_sides("V1", 3, 2, I, 1, CHI3)
    with pytest.raises(HypothesisError, match="divisible"):
        qs.g_functional_sides("inversion", 1, 2, I, 1, CHI5)


@settings(max_examples=15)
@given(st.sampled_from(ODD_CHARS), st.sampled_from([1, 3]), st.floats(0.2, 3.0))
def test_seri1_property(chi, p, alpha):
    lhs, rhs = qs.seri1_sides(alpha, p, chi, CFG)
    assert close(lhs, rhs, TOL * max(1, abs(rhs)))


def test_seri1_rejects_nonpositive_alpha():
    with pytest.raises(ValueError):
        qs.seri1_sides(0, 1, CHI3, CFG)


def test_corollary_values():
    lhs, rhs = qs.corollary_sides(1, CFG)
    assert close(lhs, pi_over_sqrt3(6))
    # plain truncated summation of the series at 60 digits
    lhs3, rhs3 = qs.corollary_sides(3, CFG)
    assert close(lhs3, num("0.221005952937519964185764479217752951937"))
    assert close(lhs3, rhs3)


def test_final_theorem_constant():
    assert qs.final_theorem_constant() == Fraction(1, 3)


def test_final_theorem_values_are_stable():
    # recorded values; the closed forms they were claimed to equal differ
    val, claim = qs.final_theorem_particular(CFG)
    assert close(val, num("-0.11581628062197668785"), mpmath.mpf(10) ** -19)
    assert close(claim, pi_over_sqrt3(6))
    total, _ = qs.final_theorem_sides(Fraction(1, 2), CFG)
    assert close(total, num("-0.32789589856801051046"), mpmath.mpf(10) ** -19)


def test_series_identity_dispatch():
    lhs, rhs = qs.series_identity("corollary", {"p": 1}, CFG)
    assert close(lhs, rhs)
    with pytest.raises(ValueError):
        qs.series_identity("meyer", {}, CFG)
