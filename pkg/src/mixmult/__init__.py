"""Exact mixed multiplicities of multigraded monomial modules and ideal systems."""
from .core import GradedRing, monomial_divides, monomial_mul
from .errors import (
    ArityMismatch,
    DegreeMismatch,
    EmptySupport,
    HypothesisViolation,
    InfiniteLength,
    MixMultError,
    Negative,
    NonIntegral,
    NonIntegralQuotient,
    NotMPrimary,
    RankZero,
    ScenarioError,
    Unstable,
)
from .extensions import MonomialExtension, MonomialMapComponent, check_thm_3_9, length_decompose
from .hilbert import (
    GridSpec,
    MixedMultiplicitySet,
    RationalPolynomial,
    graded_mixed_multiplicities,
    hilbert_polynomial,
    interpolate,
    mixed_multiplicities_from_poly,
    stability_check,
    total_degree_leading_terms,
)
from .ideal_mixed import (
    IdealSystem,
    LocalMixedMultiplicities,
    check_cor_3_8,
    check_prop_2_1,
    check_thm_3_4,
    fiber_hilbert,
    ideal_mixed_multiplicities,
    q_dimension,
    rees_module_multiplicity,
)
from .ideals import DIM_ZERO_RING, MonomialIdeal, minimalize, multipower
from .modules import MonomialModule
from .report import CheckResult, VerificationReport
from .scenario import Scenario, load_scenario, parse_scenario, run_scenario
from .verify import brute_force_length, check_thm_3_1

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "CheckResult",
    "DIM_ZERO_RING",
    "DegreeMismatch",
    "EmptySupport",
    "GradedRing",
    "GridSpec",
    "HypothesisViolation",
    "IdealSystem",
    "InfiniteLength",
    "LocalMixedMultiplicities",
    "MixMultError",
    "MixedMultiplicitySet",
    "MonomialExtension",
    "MonomialIdeal",
    "MonomialMapComponent",
    "MonomialModule",
    "Negative",
    "NonIntegral",
    "NonIntegralQuotient",
    "NotMPrimary",
    "RankZero",
    "RationalPolynomial",
    "Scenario",
    "ScenarioError",
    "Unstable",
    "VerificationReport",
    "brute_force_length",
    "check_cor_3_8",
    "check_prop_2_1",
    "check_thm_3_1",
    "check_thm_3_4",
    "check_thm_3_9",
    "fiber_hilbert",
    "graded_mixed_multiplicities",
    "hilbert_polynomial",
    "ideal_mixed_multiplicities",
    "interpolate",
    "length_decompose",
    "load_scenario",
    "minimalize",
    "mixed_multiplicities_from_poly",
    "monomial_divides",
    "monomial_mul",
    "multipower",
    "parse_scenario",
    "q_dimension",
    "rees_module_multiplicity",
    "run_scenario",
    "stability_check",
    "total_degree_leading_terms",
]
