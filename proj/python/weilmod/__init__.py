"""Exact Weil representations, metaplectic cocycles and finite theta lifts."""

from fractions import Fraction

from ._weilmod import (
    WeilmodError,
    bruhat_cell,
    cocycle_formula,
    congruence_check,
    hasse,
    hasse_product_holds,
    hilbert,
    selfcheck,
    selfcheck_suites,
    theta_dims,
    weil_sp2_dims,
)
from . import _weilmod


class Cyclotomic:
    """sum_k coeffs[k] zeta_N^k with rational coefficients."""

    def __init__(self, order, coeffs):
        self.order = order
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @classmethod
    def _wrap(cls, d):
        return cls(d["order"], d["coeffs"])

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return isinstance(other, Cyclotomic) and (self.order, self.coeffs) == (other.order, other.coeffs)

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"Cyclotomic({self.order}, {[str(c) for c in self.coeffs]})"


def omega(field, diag):
    return Cyclotomic._wrap(_weilmod.omega(field, diag))


def epsilon(field, m=1):
    return Cyclotomic._wrap(_weilmod.epsilon(field, m))


def cocycle_operator(field, g1, g2):
    return Cyclotomic._wrap(_weilmod.cocycle_operator(field, g1, g2))


__all__ = [
    "Cyclotomic",
    "WeilmodError",
    "bruhat_cell",
    "cocycle_formula",
    "cocycle_operator",
    "congruence_check",
    "epsilon",
    "hasse",
    "hasse_product_holds",
    "hilbert",
    "omega",
    "selfcheck",
    "selfcheck_suites",
    "theta_dims",
    "weil_sp2_dims",
]
