"""Exact and numeric tools for character analogues of Hardy-Berndt sums,
the series they come from, and the identities relating them."""

from .dirichlet import (
    DirichletCharacter,
    character,
    conjugate,
    enumerate_primitive,
    gauss_sum,
    parse_label,
)
from .exactmath import Cyclotomic
from .hbsums import HypothesisError
from .qseries import ModularTuple, SeriesConfig, SeriesConvergenceError
from .suites import SUITES, SuiteConfig, VerificationReport, run_suite

__all__ = [
    "Cyclotomic",
    "DirichletCharacter",
    "HypothesisError",
    "ModularTuple",
    "SUITES",
    "SeriesConfig",
    "SeriesConvergenceError",
    "SuiteConfig",
    "VerificationReport",
    "character",
    "conjugate",
    "enumerate_primitive",
    "gauss_sum",
    "parse_label",
    "run_suite",
]
__version__ = "0.1.0"
