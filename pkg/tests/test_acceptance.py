"""Acceptance criteria 1-9, each at its stated tolerance.

Every test records a PASS/FAIL line (printed in the terminal summary) before
asserting, so the line appears whatever the outcome.
"""

from fractions import Fraction

import mpmath
import pytest

from hardyberndt import qseries as qs
from hardyberndt.dirichlet import enumerate_primitive
from hardyberndt.suites import SuiteConfig, run_suite
from conftest import ACCEPTANCE

CHI3 = enumerate_primitive(3)[0]


def record(n: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[n] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")


def run_exact(names, cfg):
    failed, total = [], 0
    for name in names:
        report = run_suite(name, cfg)
        total += report.summary["total"]
        if report.summary["pass"] != report.summary["total"]:
            failed.append(f"{name}: {report.summary}")
    return failed, total


def test_criterion_1_exact_identities():
    failed, total = run_exact(
        ["raabe", "halving11", "mult6", "be-identity", "fold12"], SuiteConfig(moduli=(3, 5, 7))
    )
    record(1, not failed, f"{total} exact cases, zero residual" if not failed else "; ".join(failed))
    assert not failed


def test_criterion_2_gauss_twist():
    failed, total = run_exact(["gauss-twist"], SuiteConfig())
    record(2, not failed, f"{total} cases, k <= 15, n in [0, 3k]")
    assert not failed


def test_criterion_3_classical_and_character_reciprocity():
    f1, t1 = run_exact(["classical-recip"], SuiteConfig(max_cd=20))
    f2, t2 = run_exact(["dedekind-char-recip"], SuiteConfig(moduli=(3, 5), max_cd=12))
    failed = f1 + f2
    record(3, not failed, f"{t1} classical + {t2} character cases")
    assert not failed


def test_criterion_4_scaling_and_vanishing():
    failed, total = run_exact(["scaling", "vanishing"], SuiteConfig(moduli=(3, 5, 7), max_cd=12, ps=(1, 3, 5)))
    record(4, not failed, f"{total} cases, p in {{1,3,5}}, q <= 4, c,d <= 12")
    assert not failed


@pytest.mark.xfail(
    strict=True,
    reason="no single global sign fits either reciprocity law over k in {3,5,7}; "
    "k=3 needs -1, the even character mod 5 needs +1, complex characters fit neither",
)
def test_criterion_5_reciprocity_global_sign():
    cfg = SuiteConfig(moduli=(3, 5, 7), max_cd=20, ps=(1, 3, 5))
    fits, details = {}, []
    for name in ("recip-s5", "recip-s1s2"):
        report = run_suite(name, cfg)
        fits[name] = report.global_sign_fits[name]
        details.append(f"{name} eps={fits[name]} {report.summary}")
    ok = all(v in ("+1", "-1") for v in fits.values())
    record(5, ok, "; ".join(details))
    assert ok


TRANSFORM_CASES = [
    ("d_even_ad", (3, 17, 1, 6)),
    ("c_even_ad", (3, 4, 2, 3)),
    ("shifted_ad", (3, 8, 1, 3)),
]


def transform_values(bits):
    cfg = qs.SeriesConfig(precision=bits)
    out = {}
    with mpmath.workprec(bits):
        zs = {"i": mpmath.mpc(0, 1), "1/2+i": mpmath.mpc(mpmath.mpf(1) / 2, 1)}
    for theorem, T in TRANSFORM_CASES:
        for zname, z in zs.items():
            for p in (1, 3):
                out[(theorem, zname, p)] = qs.transform_sides(theorem, qs.ModularTuple(*T), z, p, CHI3, cfg)
    return out


def test_criterion_6_transformation_residuals():
    values = transform_values(256)
    worst = max(abs(s.residual) for s in values.values())
    ok = worst < mpmath.mpf("1e-20")
    record(6, ok, f"{len(values)} cases, max |residual| = {mpmath.nstr(worst, 3)} at 256 bits")
    assert ok


def corollary_values(bits):
    cfg = qs.SeriesConfig(precision=bits)
    return {p: qs.corollary_sides(p, cfg) for p in (1, 3)}


def test_criterion_7_series_anchor():
    vals = corollary_values(256)
    with mpmath.workprec(256):
        anchor = -mpmath.pi / (6 * mpmath.sqrt(3))
        rel1 = abs(vals[1][0] - anchor) / abs(anchor)
        rel1_closed = abs(vals[1][0] - vals[1][1]) / abs(anchor)
        rel3 = abs(vals[3][0] - vals[3][1]) / abs(vals[3][1])
    ok = rel1 < 1e-20 and rel1_closed < 1e-20 and rel3 < 1e-20
    record(7, ok, f"p=1 value {mpmath.nstr(vals[1][0], 25)}, rel err {mpmath.nstr(rel1, 3)}; p=3 rel err {mpmath.nstr(rel3, 3)}")
    assert ok


def test_criterion_8_finite_constant_and_reported_value():
    constant = qs.final_theorem_constant()
    val, claim = qs.final_theorem_particular(qs.SeriesConfig(precision=256))
    ok = constant == Fraction(1, 3)
    record(
        8,
        ok,
        f"constant = {constant}; particular series = {mpmath.nstr(val, 20)} reported against "
        f"claimed {mpmath.nstr(claim, 20)} (not asserted)",
    )
    assert ok


def test_criterion_9_precision_robustness():
    pairs = []
    t256, t512 = transform_values(256), transform_values(512)
    # residuals are compared absolutely, scaled by 1 + |side|
    for key in t256:
        scale = 1 + abs(t512[key].lhs)
        pairs.append((f"transform {key} lhs", abs(t256[key].lhs - t512[key].lhs) / abs(t512[key].lhs)))
        pairs.append((f"transform {key} rhs", abs(t256[key].rhs - t512[key].rhs) / abs(t512[key].rhs)))
        pairs.append((f"transform {key} residual", abs(t256[key].residual - t512[key].residual) / scale))
    c256, c512 = corollary_values(256), corollary_values(512)
    for p in c256:
        for side in (0, 1):
            pairs.append((f"corollary p={p} side {side}", abs(c256[p][side] - c512[p][side]) / abs(c512[p][side])))
    v256, _ = qs.final_theorem_particular(qs.SeriesConfig(precision=256))
    v512, _ = qs.final_theorem_particular(qs.SeriesConfig(precision=512))
    pairs.append(("final particular value", abs(v256 - v512) / abs(v512)))
    name, worst = max(pairs, key=lambda t: t[1])
    ok = worst < mpmath.mpf("1e-40")
    record(9, ok, f"{len(pairs)} quantities, largest 256-vs-512-bit relative change {mpmath.nstr(worst, 3)} ({name})")
    assert ok
