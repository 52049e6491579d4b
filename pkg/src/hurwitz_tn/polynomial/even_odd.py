"""Even/odd decomposition ``p(z) = p0(z^2) + z p1(z^2)`` and what hangs off it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import DegreeTooSmall, GcdUnreliable, PreconditionFailed
from .core import DEFAULT_TOL, Backend, Polynomial, poly_gcd
from .roots import find_roots


@dataclass(frozen=True)
class EvenOddParts:
    """The pair ``(p0, p1)`` in the variable ``u = z**2``.

    ``parity`` is ``"even"`` for ``n = 2l`` and ``"odd"`` for ``n = 2l + 1``.
    """

    p0: Polynomial
    p1: Polynomial
    parity: str
    l: int
    n: int

    def recombine(self) -> Polynomial:
        z = Polynomial([1, 0], self.p0.backend)
        return self.p0.of_square() + z * self.p1.of_square()


def split_even_odd(p: Polynomial) -> EvenOddParts:
    if p.degree < 1:
        raise DegreeTooSmall("even/odd split needs degree >= 1")
    n = p.degree
    a = p.coeffs
    evens, odds = list(a[0::2]), list(a[1::2])
    if n % 2 == 0:
        p0, p1, parity = evens, odds, "even"
    else:
        p0, p1, parity = odds, evens, "odd"
    return EvenOddParts(Polynomial(p0, p.backend), Polynomial(p1, p.backend), parity, n // 2, n)


# -- gcd ---------------------------------------------------------------------


def _conv_matrix(h: np.ndarray, cols: int) -> np.ndarray:
    """Matrix ``C`` with ``C @ g == np.convolve(h, g)`` for ``len(g) == cols``."""
    rows = len(h) + cols - 1
    C = np.zeros((rows, cols))
    for j in range(cols):
        C[j:j + len(h), j] = h
    return C


def _float_gcd(p0: Polynomial, p1: Polynomial, degree: int, tol: float) -> tuple[Polynomial, float]:
    a, b = p0.as_array(), p1.as_array()
    da, db = p0.degree, p1.degree
    if degree == 0:
        return Polynomial([1.0], Backend.FLOAT), 0.0
    if degree > min(da, db):
        raise GcdUnreliable(f"gcd degree {degree} exceeds the degrees of the parts")
    # cofactors h0, h1 with p0*h1 - p1*h0 = 0, deg h0 = da - d, deg h1 = db - d
    n0, n1 = da - degree + 1, db - degree + 1
    S = np.hstack([_conv_matrix(a, n1), -_conv_matrix(b, n0)])
    _, _, vt = np.linalg.svd(S)
    v = vt[-1]
    h1, h0 = v[:n1], v[n1:]
    A = np.vstack([_conv_matrix(h0, degree + 1), _conv_matrix(h1, degree + 1)])
    rhs = np.concatenate([a, b])
    g, *_ = np.linalg.lstsq(A, rhs, rcond=None)
    resid = float(np.linalg.norm(A @ g - rhs) / max(np.linalg.norm(rhs), 1e-300))
    g = g / g[0]
    return Polynomial(list(g), Backend.FLOAT), resid


def _sylvester_gcd_degree(p0: Polynomial, p1: Polynomial, tol: float) -> int:
    a, b = p0.as_array(), p1.as_array()
    da, db = p0.degree, p1.degree
    S = np.hstack([_conv_matrix(a, db), _conv_matrix(b, da)])
    s = np.linalg.svd(S, compute_uv=False)
    rank = int(np.sum(s > tol * s[0]))
    return da + db - rank


def _degree_from_minors(parts: EvenOddParts, tol: float) -> int | None:
    from ..tnn_checker import hurwitz_minors, stability_index_from_minors

    delta = hurwitz_minors(parts.recombine(), tol=tol)
    m = stability_index_from_minors(delta)
    if m is None:
        return None
    return (parts.n - m) // 2


def gcd_even_odd(parts: EvenOddParts, degree: int | None = None,
                 tol: float = DEFAULT_TOL) -> Polynomial:
    """Monic ``gcd(p0, p1)``.

    Exact parts go through the Euclidean algorithm.  For float parts the
    degree of the gcd is fixed first (from the Hurwitz determinant pattern
    when it is a clean ``+ ... + 0 ... 0`` sequence, else from the numerical
    rank of the Sylvester matrix) and the coefficients are then recovered by
    least squares.

    Raises
    ------
    GcdUnreliable
        When the least-squares division residual exceeds ``sqrt(tol)``.
    """
    p0, p1 = parts.p0, parts.p1
    if p0.is_zero and p1.is_zero:
        raise PreconditionFailed("both even and odd parts vanish")
    if p1.is_zero:
        return p0.monic()
    if p0.is_zero:
        return p1.monic()
    if p0.is_exact and p1.is_exact:
        return poly_gcd(p0, p1)
    p0, p1 = p0.to_float(), p1.to_float()
    if degree is None:
        degree = _degree_from_minors(parts, tol)
    if degree is None:
        degree = _sylvester_gcd_degree(p0, p1, tol)
    g, resid = _float_gcd(p0, p1, degree, tol)
    if resid > np.sqrt(tol):
        raise GcdUnreliable(f"gcd division residual {resid:.3g} above tolerance")
    return g


def divide_checked(a: Polynomial, b: Polynomial, tol: float = DEFAULT_TOL) -> tuple[Polynomial, float]:
    """Quotient ``a / b`` and the relative remainder norm."""
    q, r = divmod(a, b)
    if a.is_exact and b.is_exact:
        return q, 0.0 if r.is_zero else float("inf")
    scale = max(float(np.max(np.abs(a.to_float().as_array()))), 1e-300)
    rem = float(np.max(np.abs(r.to_float().as_array()))) if not r.is_zero else 0.0
    return q, rem / scale


# -- associated function Phi = p1 / p0 ---------------------------------------


@dataclass(frozen=True)
class Pole:
    location: complex
    multiplicity: int
    residue: complex | None
    residue_sign: int | None

    @property
    def simple(self) -> bool:
        return self.multiplicity == 1

    @property
    def is_real(self) -> bool:
        return self.location.imag == 0


def associated_function_poles(parts: EvenOddParts, tol: float = DEFAULT_TOL) -> list[Pole]:
    """Poles of ``Phi = p1/p0`` after cancelling ``gcd(p0, p1)``.

    Each simple real pole carries the sign of its residue
    ``p1(w) / p0'(w)``; multiple poles are returned with ``residue=None``
    and fail the R-function test.
    """
    if parts.p0.is_zero:
        raise PreconditionFailed("Phi has a vanishing denominator")
    if parts.p1.is_zero:
        return []
    g = gcd_even_odd(parts, tol=tol)
    num, _ = divide_checked(parts.p1, g, tol)
    den, _ = divide_checked(parts.p0, g, tol)
    if den.degree < 1:
        return []
    dden = den.derivative()
    out = []
    for w, mult in find_roots(den):
        if mult > 1:
            out.append(Pole(w, mult, None, None))
            continue
        res = num(w) / dden(w)
        sign = None
        if w.imag == 0:
            r = res.real
            sign = 0 if abs(r) <= tol * max(1.0, abs(w)) else (1 if r > 0 else -1)
        out.append(Pole(w, 1, res, sign))
    return out


def r_function_criterion(p: Polynomial, tol: float = DEFAULT_TOL) -> bool:
    """True iff ``Phi`` is an R-function with exactly ``l`` simple negative poles.

    For odd degree the limit ``a_0 / a_1`` of ``Phi`` at infinity must also be
    positive.  This is the characterization of Hurwitz stability through the
    associated function.
    """
    parts = split_even_odd(p)
    if p.degree % 2 == 1:
        a0, a1 = p.coeff(0), p.coeff(1)
        if a1 == 0 or a0 / a1 <= 0:
            return False
    if parts.l == 0:
        return True
    poles = associated_function_poles(parts, tol)
    if len(poles) != parts.l:
        return False
    for pole in poles:
        if not pole.simple or not pole.is_real:
            return False
        if pole.location.real >= 0 or pole.residue_sign != 1:
            return False
    return True


# -- a cheap sufficient test -------------------------------------------------


def kleptsyn_sum(p: Polynomial):
    """``sum_{k=1}^{n-2} a_{k-1} a_{k+2} / (a_k a_{k+1})``."""
    if p.degree < 3:
        raise PreconditionFailed("the ratio sum needs degree >= 3")
    if any(c <= 0 for c in p.coeffs):
        raise PreconditionFailed("all coefficients must be positive")
    a = p.coeffs
    total = Fraction(0) if p.is_exact else 0.0
    for k in range(1, p.degree - 1):
        total += a[k - 1] * a[k + 2] / (a[k] * a[k + 1])
    return total


def kleptsyn_sufficient(p: Polynomial) -> bool:
    """True when the ratio sum is below one, which already guarantees stability."""
    return kleptsyn_sum(p) < 1
