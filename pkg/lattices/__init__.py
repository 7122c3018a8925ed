"""p-adic lattice model of the hyperspecial building of GSp4 and brute-force oracles."""

from .cache import CacheFormatError, ConvolutionCache
from .enumeration import (
    DEFAULT_WINDOW,
    RelativePositionError,
    WindowOverflowError,
    enumerate_at_position,
    hecke_degree,
    iwasawa_invariant,
    lattices_between,
    relative_position,
    within_window,
)
from .models import (
    GspClass,
    LatticeError,
    PadicLattice,
    SingularBasisError,
    VertexType,
    canonicalize,
    classify,
    colength,
    contains,
    dual_lattice,
    gram_matrix,
    lattice_intersection,
    lattice_sum,
)
from .oracles import (
    PATTERNS,
    OracleConsistencyError,
    SatakeNormalizationError,
    UnknownPatternError,
    convolve_oracle,
    count_chain_pattern,
    satake_oracle,
    satake_strata,
    t20_t02_oracle,
)
from .surfaces import GaloisField, SizeBoundError, dl_point_count

__all__ = [
    "CacheFormatError",
    "ConvolutionCache",
    "DEFAULT_WINDOW",
    "GaloisField",
    "GspClass",
    "LatticeError",
    "OracleConsistencyError",
    "PATTERNS",
    "PadicLattice",
    "RelativePositionError",
    "SatakeNormalizationError",
    "SingularBasisError",
    "SizeBoundError",
    "UnknownPatternError",
    "VertexType",
    "WindowOverflowError",
    "canonicalize",
    "classify",
    "colength",
    "contains",
    "convolve_oracle",
    "count_chain_pattern",
    "dl_point_count",
    "dual_lattice",
    "enumerate_at_position",
    "gram_matrix",
    "hecke_degree",
    "iwasawa_invariant",
    "lattice_intersection",
    "lattice_sum",
    "lattices_between",
    "relative_position",
    "satake_oracle",
    "satake_strata",
    "t20_t02_oracle",
    "within_window",
]
