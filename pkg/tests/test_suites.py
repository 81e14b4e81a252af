import json
from fractions import Fraction

import pytest

from hardyberndt.exactmath import Cyclotomic
from hardyberndt.suites import (
    FLAGGED,
    SUITES,
    CaseRecord,
    SuiteConfig,
    VerificationReport,
    apply_sign_protocol,
    fit_global_sign,
    run_suite,
    small_tuple,
)
from hardyberndt import qseries as qs

SMALL = SuiteConfig(moduli=(3,), max_cd=6, ps=(1, 3))


def test_registry_names():
    assert list(SUITES) == [
        "raabe", "halving11", "charfunc-props", "mult6", "be-identity", "fold12", "gauss-twist",
        "classical-recip", "dedekind-char-recip", "scaling", "vanishing", "recip-s5", "recip-s1s2",
        "transform-d-even", "transform-shifted", "transform-c-even", "rp2-functional", "rp1-functional",
        "series-seri1", "series-corollary", "series-final",
    ]


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope", SMALL)


def _rec(lhs, rhs):
    return CaseRecord("x", {}, str(lhs), str(rhs), str(lhs - rhs), "pass" if lhs == rhs else "fail", True, raw=(lhs, rhs))


def test_sign_fit():
    i = Cyclotomic.zeta(4)
    assert fit_global_sign([_rec(2, 2), _rec(0, 0)]) == 1
    assert fit_global_sign([_rec(-2, 2), _rec(0, 0), _rec(i, -i)]) == -1
    assert fit_global_sign([_rec(-2, 2), _rec(3, 3)]) is None
    assert fit_global_sign([_rec(i, 1 + i)]) is None


def test_sign_protocol_flags_negative_fit():
    report = VerificationReport("x", SMALL, [_rec(-2, 2), _rec(Fraction(1, 2), Fraction(-1, 2))])
    apply_sign_protocol(report)
    assert report.global_sign_fits == {"x": "-1"}
    assert report.summary[FLAGGED] == 2 and report.hard_failures == 0
    assert all(c.lhs and c.rhs for c in report.cases)


def test_sign_protocol_no_fit_keeps_failures():
    report = VerificationReport("x", SMALL, [_rec(-2, 2), _rec(3, 3)])
    apply_sign_protocol(report)
    assert report.global_sign_fits == {"x": "none"}
    assert report.summary["fail"] == 1 and report.summary["pass"] == 1


def test_report_json_layout():
    report = run_suite("raabe", SMALL)
    data = json.loads(report.dumps())
    assert data["schema"] == 1
    assert data["numeric"] == []
    assert data["summary"]["total"] == len(data["exact"]) == data["summary"]["pass"]
    for case in data["exact"]:
        assert all(isinstance(case[f], str) for f in ("lhs", "rhs", "residual"))
        assert "." not in case["residual"]


def test_numeric_records_carry_precision():
    report = run_suite("series-corollary", SMALL)
    data = report.to_json()
    assert data["exact"] == []
    for case in data["numeric"]:
        assert case["precision_bits"] == 256
        assert isinstance(case["residual_abs"], str)


def test_counts_match_case_list():
    report = run_suite("series-final", SMALL)
    s = report.summary
    assert s["total"] == sum(s[k] for k in ("pass", "fail", "flagged", "reported"))
    assert s["reported"] == 4 and s["pass"] == 1


def test_deterministic_and_parallel_merge():
    a = run_suite("dedekind-char-recip", SMALL).dumps()
    b = run_suite("dedekind-char-recip", SMALL).dumps()
    c = run_suite("dedekind-char-recip", SMALL, jobs=2).dumps()
    assert a == b == c


def test_k3_stated_reciprocity_is_flagged():
    report = run_suite("recip-s5", SMALL)
    assert report.global_sign_fits == {"recip-s5": "-1"}
    assert report.summary[FLAGGED] == report.summary["total"]


def test_derived_forms_pass():
    cfg = SuiteConfig(moduli=(3, 5), max_cd=8, ps=(1, 3), form="derived")
    for name in ("recip-s5", "recip-s1s2", "rp2-functional", "rp1-functional"):
        report = run_suite(name, cfg)
        assert report.hard_failures == 0, name
        assert report.global_sign_fits[name] == "+1"


@pytest.mark.parametrize("theorem", qs.THEOREMS)
def test_small_tuples_meet_hypotheses(theorem):
    for k in (3, 5, 7):
        for x in (Fraction(0), Fraction(1, 2), Fraction(k)):
            T = qs.ModularTuple(*small_tuple(theorem, k, x))
            qs.check_transform_hypotheses(theorem, T, k)
