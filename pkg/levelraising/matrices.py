from __future__ import annotations

from typing import Optional

from sympy import Expr, Matrix, Symbol, cancel, expand, symbols

from .models import DeterminantValue, EigenData

P = Symbol("p", positive=True, integer=True)
T0INV_T1, T02, T20 = symbols("T0inv_T1 T02 T20")
T20_T02, T02_T20 = symbols("T20oT02 T02oT20")
T0INV, T_P1, T_P2, T_P2_2 = symbols("T0inv T_p1 T_p2 T_p2sq2")
S1, S2 = symbols("s1 s2")


class DeterminantSubstitutionError(ValueError):
    """Raised when a determinant keeps non-spherical operators after substitution."""


def _degree_factor(p) -> Expr:
    return (p + 1) * (p ** 2 + 1)


def lr_matrix(p=P) -> Matrix:
    """Level raising matrix; -2 is the self-intersection number of a component."""

    diagonal = T0INV_T1 + _degree_factor(p)
    return -2 * Matrix([[diagonal, (p + 1) * T02], [(p + 1) * T20, diagonal]])


def ss_matrix(p=P) -> Matrix:
    constant = 4 * p ** 2 * (p + 1) ** 2
    return Matrix([
        [constant + T20_T02, -4 * p * (p + 1) * T02],
        [-4 * p * (p + 1) * T20, constant + T02_T20],
    ])


def composite_t20_t02(p=P) -> Expr:
    """T20 o T02 = T02 o T20 in the spherical algebra."""

    return T0INV * T_P2_2 + (p + 1) * T0INV * T_P1 + (p ** 2 + 1) * (p + 1)


def hecke_identity_substitution(p=P) -> dict:
    """T0 = 1 together with T_{p,2}^2 = T_{p^2,2} + (p+1) T_{p,1} + (p+1)(p^2+1)."""

    return {T0INV: 1, T_P2_2: T_P2 ** 2 - (p + 1) * T_P1 - _degree_factor(p)}


def _eigen_substitute(expr: Expr, e: EigenData) -> int:
    composite = expand(composite_t20_t02(P).subs(hecke_identity_substitution(P)))
    composite = composite.subs({T_P1: e.a1, T_P2: e.a2, P: e.p})
    expr = expand(expr).subs(T02 * T20, T20_T02)
    if {T02, T20} & expr.free_symbols:
        raise DeterminantSubstitutionError(f"unpaired T02/T20 left in {expr}")
    value = expr.subs({T20_T02: composite, T02_T20: composite, T0INV_T1: e.a1, P: e.p})
    return int(value)


def det_lr_symbolic(p=P) -> Expr:
    return expand(lr_matrix(p).det())


def det_ss_symbolic(p=P) -> Expr:
    return expand(ss_matrix(p).det())


def det_lr_closed_form(p: int, a1: int, a2: int) -> int:
    return 4 * ((a1 + (p + 1) * (p ** 2 + 1)) ** 2 - (p + 1) ** 2 * a2 ** 2)


def det_ss_closed_form(p: int, a2: int) -> int:
    return (a2 ** 2 - 4 * p ** 2 * (p + 1) ** 2) ** 2


def det_lr_eval(e: EigenData, ell: Optional[int] = None) -> DeterminantValue:
    """det T_lr with T0 -> 1, T_{p,1} -> a1 and T20 o T02 -> a2^2."""

    value = _eigen_substitute(lr_matrix(P).det(), e)
    closed = det_lr_closed_form(e.p, e.a1, e.a2)
    if value != closed:
        raise DeterminantSubstitutionError(f"det T_lr evaluates to {value}, closed form gives {closed}")
    return DeterminantValue(value, ell)


def det_ss_eval(e: EigenData, ell: Optional[int] = None) -> DeterminantValue:
    value = _eigen_substitute(ss_matrix(P).det(), e)
    closed = det_ss_closed_form(e.p, e.a2)
    if value != closed:
        raise DeterminantSubstitutionError(f"det T_ss evaluates to {value}, closed form gives {closed}")
    return DeterminantValue(value, ell)


def det_lr_factorization_residual() -> Expr:
    """p^2 det_lr minus 4 (s1^2 - p^2(p+1)^2)(s2^2 - p^2(p+1)^2) under the pair-sum dictionary."""

    a1 = (S1 * S2 - P + P ** 3) / P
    a2 = S1 + S2
    left = P ** 2 * det_lr_closed_form(P, a1, a2)
    c2 = P ** 2 * (P + 1) ** 2
    return cancel(left - 4 * (S1 ** 2 - c2) * (S2 ** 2 - c2))


def det_ss_identity_residual() -> Expr:
    a2, c = symbols("a2 c")
    return expand((a2 ** 2 + 4 * c ** 2) ** 2 - 16 * c ** 2 * a2 ** 2 - (a2 ** 2 - 4 * c ** 2) ** 2)
