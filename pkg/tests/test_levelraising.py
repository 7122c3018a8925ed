import pytest
from sympy import Matrix, expand

from levelraising import (
    ASSUMPTION_CAVEAT,
    EigenData,
    EigenDataError,
    InvalidPrimeError,
    NonTemperedError,
    check_generic,
    check_level_raising,
    det_lr_eval,
    det_ss_eval,
    hecke_polynomial,
    lr_matrix,
    pair_quadratic,
    property_sweep,
    ss_matrix,
    weil_bound_advisories,
)
from levelraising.matrices import (
    T02,
    T02_T20,
    T0INV_T1,
    T20,
    T20_T02,
    det_lr_factorization_residual,
    det_lr_symbolic,
    det_ss_identity_residual,
)

GOLDEN = EigenData(p=2, a1=47, a2=19, label="golden")
ORDINARY = EigenData(p=2, a1=30, a2=15, label="ordinary")


def test_eigendata_validation():
    with pytest.raises(EigenDataError):
        EigenData(p=4, a1=1, a2=1)
    with pytest.raises(EigenDataError):
        EigenData(p=2, a1=True, a2=1)
    with pytest.raises(EigenDataError, match="trivial central character required"):
        EigenData(p=2, a1=1, a2=1, a0=2)
    assert GOLDEN.to_dict() == {"p": 2, "a1": "47", "a2": "19", "label": "golden"}


def test_hecke_polynomial_coefficients():
    assert hecke_polynomial(ORDINARY).all_coeffs() == [1, -15, 70, -120, 64]
    assert hecke_polynomial(GOLDEN).all_coeffs() == [1, -19, 104, -152, 64]


def test_pair_quadratic_roots():
    assert pair_quadratic(ORDINARY).render() == "Y**2 - 15*Y + 54"
    assert pair_quadratic(ORDINARY).integer_roots() == (6, 9)
    assert pair_quadratic(GOLDEN).integer_roots() == (8, 11)
    assert pair_quadratic(EigenData(p=2, a1=1, a2=1)).integer_roots() is None


def test_golden_vector_is_special_at_five():
    report = check_level_raising(GOLDEN, 5)
    assert report.special
    assert (report.u, report.depth) == (1, 1)
    assert report.condition_flags.all_pass()
    assert report.assumption_caveat == ASSUMPTION_CAVEAT
    assert report.to_dict()["condition_flags"]["congruence"] is True


def test_u_hint_restricts_the_branch():
    assert check_level_raising(GOLDEN, 5, u_hint=1).special
    report = check_level_raising(GOLDEN, 5, u_hint=-1)
    assert not report.special
    assert report.u is None and report.depth is None
    with pytest.raises(ValueError):
        check_level_raising(GOLDEN, 5, u_hint=3)


def test_exact_pair_sum_is_non_tempered():
    with pytest.raises(NonTemperedError, match="depth unbounded"):
        check_level_raising(ORDINARY, 5)
    report = check_level_raising(ORDINARY, 5, u_hint=-1)
    flags = report.condition_flags
    assert flags.congruence and not flags.alpha_noncongruence
    assert not report.special


def test_ell_dividing_p_squared_minus_one():
    report = check_level_raising(GOLDEN, 3)
    assert not report.condition_flags.ell_coprime
    assert not report.special


@pytest.mark.parametrize("ell", [2, 9, 1])
def test_invalid_ell(ell):
    with pytest.raises(InvalidPrimeError):
        check_level_raising(GOLDEN, ell)


def test_ell_equal_to_p_is_rejected():
    with pytest.raises(InvalidPrimeError):
        check_level_raising(EigenData(p=5, a1=0, a2=0), 5)


def test_genericity():
    at_seven = check_generic(GOLDEN, 7)
    assert at_seven.residues == {1: 3, -1: 0}
    assert not at_seven.generic_nonlr
    assert not at_seven.generic_lr
    assert check_generic(GOLDEN, 13).generic_nonlr
    assert check_generic(GOLDEN, 5).generic_lr


def test_genericity_records_non_tempered_note():
    report = check_generic(ORDINARY, 5)
    assert not report.generic_lr
    assert "depth unbounded" in report.note


def test_weil_bound_advisories():
    assert weil_bound_advisories(GOLDEN)
    assert weil_bound_advisories(ORDINARY)
    assert weil_bound_advisories(EigenData(p=2, a1=1, a2=0)) == ()
    assert check_level_raising(GOLDEN, 5).advisories == weil_bound_advisories(GOLDEN)


def test_lr_matrix_at_two():
    assert lr_matrix(2) == Matrix([
        [-2 * (T0INV_T1 + 15), -6 * T02],
        [-6 * T20, -2 * (T0INV_T1 + 15)],
    ])


def test_ss_matrix_at_two():
    matrix = ss_matrix(2)
    assert matrix[0, 1] == -24 * T02
    assert matrix[1, 0] == -24 * T20
    assert matrix[0, 0] == 144 + T20_T02
    assert matrix[1, 1] == 144 + T02_T20


def test_lr_determinant_is_symmetric_in_the_off_diagonal():
    det = det_lr_symbolic(2)
    assert expand(det - det.subs({T02: T20, T20: T02}, simultaneous=True)) == 0


def test_determinants_on_golden_vectors():
    lr = det_lr_eval(GOLDEN, 5)
    assert (lr.value, lr.residue) == (2380, 0)
    assert det_lr_eval(ORDINARY).value == 0
    ss = det_ss_eval(GOLDEN, 5)
    assert (ss.value, ss.residue) == (47089, 4)
    assert det_ss_eval(EigenData(p=2, a1=0, a2=12)).value == 0
    assert lr.to_dict() == {"value": "2380", "ell": 5, "residue": 0}


def test_symbolic_identities_hold():
    assert det_lr_factorization_residual() == 0
    assert det_ss_identity_residual() == 0


def test_seeded_sweep_is_clean_and_reproducible():
    first = property_sweep(seed=7, size=40)
    assert first.ok, first.violations
    assert first.checked == 40
    assert first.to_dict() == property_sweep(seed=7, size=40).to_dict()
