from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hardyberndt.dirichlet import enumerate_primitive

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

ODD_MODULI = (3, 5, 7)
ODD_CHARS = [chi for k in ODD_MODULI for chi in enumerate_primitive(k)]


def char_id(chi):
    return chi.label


rationals = st.fractions(min_value=-8, max_value=8, max_denominator=24)
characters = st.sampled_from(ODD_CHARS)


@pytest.fixture(params=ODD_CHARS, ids=char_id)
def odd_char(request):
    return request.param


def frac(s: str) -> Fraction:
    return Fraction(s)


# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
