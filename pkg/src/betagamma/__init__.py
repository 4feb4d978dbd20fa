"""Exact computations in the beta-gamma system of an sl(2)-module.

Circle products in the vacuum Fock module, current and sl(2) subalgebras, their
commutants, the associated graded d-ring and invariant Hilbert series.
"""

from .algebra import (
    MultiPoly,
    PolyRing,
    TSeries,
    poly_eval,
    poly_partial,
    series_inv_geom,
)
from .chiral import build_conformal, build_currents, build_sl2_triple
from .commutant import (
    is_in_commutant,
    verify_current_ope,
    verify_howe_inclusion,
    verify_level,
)
from .fock import (
    FockState,
    GenMode,
    beta,
    derivative,
    gamma,
    mode_action,
    nth_product,
    ope_singular,
    vacuum,
    wick,
)
from .grring import (
    invariant_dimension,
    jacobian_independence,
    symbol,
    verify_compatibility,
    verify_generators_P0,
    verify_weight_zero_generator,
)
from .hilbert import (
    QTSeries,
    compare_closed_form,
    fit_denominator,
    q_hilbert,
    residue_extract,
)
from .rep import (
    LieRepData,
    builtin_rep,
    dual_action,
    killing_form,
    load_rep,
    trace_form,
    weight_multiset,
)
from .report import VerificationReport

__version__ = "0.1.0"

__all__ = [
    "FockState",
    "GenMode",
    "LieRepData",
    "MultiPoly",
    "PolyRing",
    "QTSeries",
    "TSeries",
    "VerificationReport",
    "beta",
    "build_conformal",
    "build_currents",
    "build_sl2_triple",
    "builtin_rep",
    "compare_closed_form",
    "derivative",
    "dual_action",
    "fit_denominator",
    "gamma",
    "invariant_dimension",
    "is_in_commutant",
    "jacobian_independence",
    "killing_form",
    "load_rep",
    "mode_action",
    "nth_product",
    "ope_singular",
    "poly_eval",
    "poly_partial",
    "q_hilbert",
    "residue_extract",
    "series_inv_geom",
    "symbol",
    "trace_form",
    "vacuum",
    "verify_compatibility",
    "verify_current_ope",
    "verify_generators_P0",
    "verify_howe_inclusion",
    "verify_level",
    "verify_weight_zero_generator",
    "weight_multiset",
    "wick",
]
