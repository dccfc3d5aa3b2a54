"""Toeplitz and symmetric Toeplitz determinants of inverse univalent functions.

The library has five layers:

* :mod:`toepinv.series`: truncated complex power series, composition
  and reversion, plus the closed form for the first three inverse
  coefficients.
* :mod:`toepinv.schwarz`: the exact (c1, c2, c3) coefficient body of
  Schwarz functions via Schur parameters, boundary-biased sampling, and
  the Prokhorov-Szynal coefficient inequality.
* :mod:`toepinv.classes`: coefficient maps for the bounded-turning,
  starlike and convex classes and the catalog of extremal functions.
* :mod:`toepinv.functionals`: the determinant functionals T21, T31 and
  their symmetric variants TS22, TS23, TS31, TS32.
* :mod:`toepinv.search`: multistart maximization over the Schwarz body,
  an exhaustive grid oracle, the sharp-bound table and the comparison
  against previously published estimates.

The command line surface lives in :mod:`toepinv.cli`.
"""

from .classes import ClassId, ExtremalEntry, extremal_catalog, forward_map, inverse_map
from .errors import (
    BudgetError,
    DomainError,
    InvalidProblemError,
    OrderMismatchError,
    UnsupportedClassError,
)
from .functionals import (
    FunctionalId,
    bound_value,
    evaluate,
    inversion_invariance_check,
    t21,
    t31,
    ts22,
    ts23,
    ts31,
    ts32,
)
from .schwarz import (
    LEMMA_PAIRS,
    PSRegion,
    SchurParams,
    coeffs_via_composition,
    ps_functional,
    region_member,
    sample_params,
    schur_to_coeffs,
)
from .search import (
    BoundRecord,
    SearchProblem,
    SearchResult,
    Verdict,
    exact_bound,
    grid_oracle,
    maximize,
    objective,
    prior_claim,
    refutation_report,
)
from .series import (
    CoeffTriple,
    InverseTriple,
    TruncatedSeries,
    compose,
    identity,
    inverse_coeffs_closed_form,
    multiply,
    normalized,
    reverse,
)

__version__ = "0.1.0"

__all__ = [
    "BoundRecord",
    "BudgetError",
    "ClassId",
    "CoeffTriple",
    "DomainError",
    "ExtremalEntry",
    "FunctionalId",
    "InvalidProblemError",
    "InverseTriple",
    "LEMMA_PAIRS",
    "OrderMismatchError",
    "PSRegion",
    "SchurParams",
    "SearchProblem",
    "SearchResult",
    "TruncatedSeries",
    "UnsupportedClassError",
    "Verdict",
    "bound_value",
    "coeffs_via_composition",
    "compose",
    "evaluate",
    "exact_bound",
    "extremal_catalog",
    "forward_map",
    "grid_oracle",
    "identity",
    "inverse_coeffs_closed_form",
    "inverse_map",
    "inversion_invariance_check",
    "maximize",
    "multiply",
    "normalized",
    "objective",
    "prior_claim",
    "ps_functional",
    "refutation_report",
    "region_member",
    "reverse",
    "sample_params",
    "schur_to_coeffs",
    "t21",
    "t31",
    "ts22",
    "ts23",
    "ts31",
    "ts32",
]
