"""Level raising at p from integer Hecke eigenvalues: checker, matrices and determinants."""

from .checker import (
    NonTemperedError,
    check_generic,
    check_level_raising,
    hecke_polynomial,
    pair_quadratic,
    weil_bound_advisories,
)
from .matrices import (
    DeterminantSubstitutionError,
    composite_t20_t02,
    det_lr_eval,
    det_ss_eval,
    lr_matrix,
    ss_matrix,
)
from .models import (
    ASSUMPTION_CAVEAT,
    ConditionFlags,
    DeterminantValue,
    EigenData,
    EigenDataError,
    GenericityReport,
    InvalidPrimeError,
    LevelRaisingReport,
    PairQuadratic,
)
from .sweeps import SweepReport, property_sweep

__all__ = [
    "ASSUMPTION_CAVEAT",
    "ConditionFlags",
    "DeterminantSubstitutionError",
    "DeterminantValue",
    "EigenData",
    "EigenDataError",
    "GenericityReport",
    "InvalidPrimeError",
    "LevelRaisingReport",
    "NonTemperedError",
    "PairQuadratic",
    "SweepReport",
    "check_generic",
    "check_level_raising",
    "composite_t20_t02",
    "det_lr_eval",
    "det_ss_eval",
    "hecke_polynomial",
    "lr_matrix",
    "pair_quadratic",
    "property_sweep",
    "ss_matrix",
    "weil_bound_advisories",
]
