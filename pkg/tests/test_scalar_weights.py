from fractions import Fraction

import pytest

from hecke import NU0, NU1, NU2, TWO_NU2, DominantCoweight, P, Q, Scalar, ScalarError, Weight, WeightError
from hecke import dominance_leq, weyl_orbit


def test_scalar_canonical_form_drops_zero_terms():
    s = Scalar({3: 1, 0: 0, -1: 2}) + Scalar({-1: -2})
    assert s.terms() == ((3, 1),)
    assert Scalar({2: 0}).is_zero()


def test_scalar_render():
    s = Q ** 3 + 2 - Q ** -1
    assert s.render() == "q^3 + 2 - q^-1"
    assert (Q ** 3 * 2).render() == "2q^3"
    assert Scalar().render() == "0"


def test_p_is_q_squared():
    assert P == Q * Q
    assert (P + 1) * (P ** 2 + 1) == Q ** 6 + Q ** 4 + Q ** 2 + 1


def test_negative_powers_only_for_unit_monomials():
    assert Q ** -3 * Q ** 3 == 1
    with pytest.raises(ScalarError):
        (Q + 1) ** -1


def test_evaluate_and_reduce_at_prime():
    assert (Q ** 3).evaluate(2) == (Fraction(0), Fraction(2))
    assert (Q ** 3).reduce_at_prime(2) == Scalar({1: 2})
    assert (Q ** 4 - 1).reduce_at_prime(3) == 8
    assert (Scalar.constant(8) * Q ** -3).reduce_at_prime(2) == Scalar({1: 2})
    with pytest.raises(ScalarError):
        (Q ** -2).reduce_at_prime(3)


def test_specialize_rejects_square_roots():
    assert ((P + 1) * (P ** 2 + 1)).specialize(3) == 40
    with pytest.raises(ScalarError):
        (Q ** 3).specialize(2)


def test_scalar_json():
    s = Q ** 6 - P - 1
    assert Scalar.from_json(s.to_json()) == s


def test_weight_similitude_constraint():
    assert Weight((2, 1, 1, 0)).similitude == 2
    with pytest.raises(WeightError):
        Weight((2, 1, 0, 0))
    with pytest.raises(WeightError):
        DominantCoweight((0, 1, 1, 2))


def test_rho_pairings():
    assert NU2.rho_pairing2 == 3
    assert NU1.rho_pairing2 == 4
    assert TWO_NU2.rho_pairing2 == 6
    assert NU0.rho_pairing2 == 0


def test_coweight_parse_and_render():
    nu = DominantCoweight.parse("(2, 1, 1, 0)")
    assert nu == NU1
    assert nu.render() == "(2,1,1,0)"
    with pytest.raises(WeightError):
        DominantCoweight.parse("2,x,1,0")


def test_dominance_order():
    assert dominance_leq(NU1, TWO_NU2)
    assert not dominance_leq(NU2, NU1)
    assert dominance_leq(NU0, TWO_NU2)
    assert dominance_leq(NU0, NU1)
    assert not dominance_leq(TWO_NU2, NU1)


def test_weyl_orbits():
    assert weyl_orbit(Weight((1, 1, 1, 1))) == {(1, 1, 1, 1)}
    assert weyl_orbit(NU2) == {(1, 1, 0, 0), (1, 0, 1, 0), (0, 1, 0, 1), (0, 0, 1, 1)}
    assert weyl_orbit(NU1) == {(2, 1, 1, 0), (1, 2, 0, 1), (1, 0, 2, 1), (0, 1, 1, 2)}
    assert len(weyl_orbit(Weight((3, 1, 0, -2)))) == 8
