"""Exact beta-calculus invariant of tangles, with an independent Alexander oracle."""

from zbeta.algebra import LaurentPoly, RationalFn, VarId, parse_expr, render_expr, strand, symbol
from zbeta.beta import BetaElement, beta_eq, beta_union, generic_element, r_element
from zbeta.errors import (
    DivisionByZero,
    LabelError,
    MultiComponentError,
    NonMonomialDenominator,
    OrientationError,
    ParseError,
    SingularSwap,
    ValidationError,
    ZBetaError,
)
from zbeta.oracle import canonical_unit_form, compare_up_to_units, wirtinger_alexander
from zbeta.tangle import PDCode, classify_crossings, parse_pd, read_table, stitch_plan, z_beta, z_g

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "RationalFn",
    "VarId",
    "parse_expr",
    "render_expr",
    "strand",
    "symbol",
    "BetaElement",
    "beta_eq",
    "beta_union",
    "generic_element",
    "r_element",
    "DivisionByZero",
    "LabelError",
    "MultiComponentError",
    "NonMonomialDenominator",
    "OrientationError",
    "ParseError",
    "SingularSwap",
    "ValidationError",
    "ZBetaError",
    "canonical_unit_form",
    "compare_up_to_units",
    "wirtinger_alexander",
    "PDCode",
    "classify_crossings",
    "parse_pd",
    "read_table",
    "stitch_plan",
    "z_beta",
    "z_g",
]
