"""Real factors built from unit-modulus conjugate pairs, rationalized when possible."""

from __future__ import annotations

import math
from fractions import Fraction

from .polynomial import Polynomial

_RATIONAL_COS = (Fraction(0), Fraction(1, 2), Fraction(-1, 2), Fraction(1), Fraction(-1))
_SNAP = 1e-12


def cos_value(phi: float):
    """``cos(phi)`` as a Fraction when it is one of 0, +-1/2, +-1, else a float."""
    c = math.cos(phi)
    for r in _RATIONAL_COS:
        if abs(c - float(r)) < _SNAP:
            return r
    return c


def pair_factor(phi: float, power: int = 1) -> Polynomial:
    """``(x^power + e^{i phi})(x^power + e^{-i phi})`` as a real polynomial in ``x``.

    Equals ``x^(2 power) + 2 cos(phi) x^power + 1``.
    """
    c = cos_value(phi)
    coeffs = [1] + [0] * (power - 1) + [2 * c] + [0] * (power - 1) + [1]
    return Polynomial(coeffs)


def product(factors) -> Polynomial:
    out = Polynomial([1])
    for f in factors:
        out = out * f
    return out
