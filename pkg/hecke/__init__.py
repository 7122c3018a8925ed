"""Spherical Hecke algebra of GSp4 and the character ring of its dual."""

from .characters import (
    CharacterElement,
    DecompositionError,
    WeylInvarianceError,
    char_decompose,
    char_mul,
    character_from_multiplicities,
    weyl_character,
    weyl_dimension,
)
from .satake import (
    HeckeElement,
    HeckeIdentityCertificate,
    SatakeSpanError,
    hecke_identity_rhs,
    satake,
    satake_table,
    verify_hecke_identity,
)
from .scalar import ONE, P, Q, Scalar, ScalarError
from .weights import (
    NU0,
    NU1,
    NU2,
    TWO_NU2,
    ZERO,
    DominantCoweight,
    Weight,
    WeightError,
    central,
    dominance_leq,
    weyl_orbit,
)

__all__ = [
    "CharacterElement",
    "DecompositionError",
    "DominantCoweight",
    "HeckeElement",
    "HeckeIdentityCertificate",
    "NU0",
    "NU1",
    "NU2",
    "ONE",
    "P",
    "Q",
    "SatakeSpanError",
    "Scalar",
    "ScalarError",
    "TWO_NU2",
    "Weight",
    "WeightError",
    "WeylInvarianceError",
    "ZERO",
    "central",
    "char_decompose",
    "char_mul",
    "character_from_multiplicities",
    "dominance_leq",
    "hecke_identity_rhs",
    "satake",
    "satake_table",
    "verify_hecke_identity",
    "weyl_character",
    "weyl_dimension",
    "weyl_orbit",
]
