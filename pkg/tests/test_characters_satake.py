import random

import pytest

from hecke import (
    NU0,
    NU1,
    NU2,
    TWO_NU2,
    CharacterElement,
    DecompositionError,
    DominantCoweight,
    HeckeElement,
    P,
    Q,
    SatakeSpanError,
    Weight,
    WeylInvarianceError,
    central,
    char_decompose,
    char_mul,
    character_from_multiplicities,
    hecke_identity_rhs,
    satake,
    satake_table,
    verify_hecke_identity,
    weyl_character,
    weyl_dimension,
)
from hecke.weights import WEYL_GENERATORS


def _is_invariant(x: CharacterElement) -> bool:
    table = dict(x.items())
    return all(table.get(g(w)) == c for w, c in x.items() for g in WEYL_GENERATORS)


def test_non_invariant_element_is_rejected():
    with pytest.raises(WeylInvarianceError):
        CharacterElement({Weight((1, 1, 0, 0)): 1})


def test_weyl_characters_of_small_weights():
    chi2 = weyl_character(NU2)
    assert set(chi2.support()) == {(1, 1, 0, 0), (1, 0, 1, 0), (0, 1, 0, 1), (0, 0, 1, 1)}
    assert all(c == 1 for _, c in chi2.items())

    chi1 = weyl_character(NU1)
    assert chi1.coefficient(NU0) == 1
    assert chi1.mass() == 5

    assert weyl_character(TWO_NU2).mass() == 10
    assert weyl_character(TWO_NU2).coefficient(NU1) == 1
    assert weyl_character(TWO_NU2).coefficient(NU0) == 2


def test_character_mass_matches_weyl_dimension():
    for a1 in range(0, 5):
        for a2 in range(0, a1 + 1):
            for a3 in range(0, a2 + 1):
                a4 = a2 + a3 - a1
                if a4 < 0 or a4 > a3:
                    continue
                nu = DominantCoweight((a1, a2, a3, a4))
                chi = weyl_character(nu)
                assert chi.mass() == weyl_dimension(nu)
                assert _is_invariant(chi)


def test_central_twist():
    product = char_mul(CharacterElement.monomial(NU0), weyl_character(NU2))
    assert set(product.support()) == {(2, 2, 1, 1), (2, 1, 2, 1), (1, 2, 1, 2), (1, 1, 2, 2)}


def test_square_of_standard_character():
    square = char_mul(weyl_character(NU2), weyl_character(NU2))
    assert square.mass() == 16
    assert char_decompose(square) == {TWO_NU2: 1, NU1: 1, NU0: 1}
    assert _is_invariant(square)


def test_decompose_small_cases():
    assert char_decompose(CharacterElement.monomial(NU0)) == {NU0: 1}
    assert char_decompose(weyl_character(NU1)) == {NU1: 1}


def test_decompose_rejects_virtual_characters():
    virtual = weyl_character(NU1) - CharacterElement.monomial(NU0) * 2
    with pytest.raises(DecompositionError):
        char_decompose(virtual)
    assert char_decompose(virtual, allow_signed=True) == {NU1: 1, NU0: -2}


def test_decompose_round_trip_on_random_multiplicities():
    rng = random.Random(20240601)
    pool = [TWO_NU2, NU1, NU0, DominantCoweight((3, 2, 1, 0)), DominantCoweight((2, 2, 1, 1))]
    for _ in range(10):
        chosen = {nu: rng.randint(1, 3) for nu in rng.sample(pool, rng.randint(1, len(pool)))}
        assert char_decompose(character_from_multiplicities(chosen)) == chosen


def test_satake_table_values():
    assert satake_table(NU0) == CharacterElement.monomial(NU0)
    assert satake_table(central(-2)) == CharacterElement.monomial(central(-2))
    assert satake_table(NU2) == weyl_character(NU2) * Q ** 3
    assert satake_table(NU1).coefficient(NU0) == Q ** 4 - 1
    assert satake_table(NU1).coefficient(NU1) == Q ** 4
    with pytest.raises(SatakeSpanError):
        satake_table(DominantCoweight((3, 2, 1, 0)))


def test_satake_leading_terms():
    for nu in (NU0, NU2, NU1, TWO_NU2):
        image = satake_table(nu)
        assert image.coefficient(nu) == Q ** nu.rho_pairing2
        assert _is_invariant(image)


def test_satake_is_linear():
    h = HeckeElement({NU1: 3, NU0: P})
    assert satake(h) == satake_table(NU1) * 3 + satake_table(NU0) * P


def test_hecke_identity_certificate():
    certificate = verify_hecke_identity()
    assert certificate.passed
    expected = (weyl_character(TWO_NU2) + weyl_character(NU1) + CharacterElement.monomial(NU0)) * Q ** 6
    assert certificate.lhs == expected
    assert certificate.rhs == expected
    assert certificate.to_dict()["mismatch"] is None


def test_identity_constant_term():
    # -(1+p^2) - (p+1) + (p+1)(p^2+1) = p^3 - 1 joins 3q^6 from the characters
    assert satake(hecke_identity_rhs()).coefficient(NU0) == Q ** 6 * 4


def test_hecke_identity_rhs_specializes():
    assert hecke_identity_rhs().specialize(2).integer_coefficients() == {TWO_NU2: 1, NU1: 3, NU0: 15}
    assert hecke_identity_rhs().specialize(3).integer_coefficients() == {TWO_NU2: 1, NU1: 4, NU0: 40}
