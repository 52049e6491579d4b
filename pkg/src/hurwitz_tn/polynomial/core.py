"""Real polynomials with an exact-rational or binary64 coefficient backend.

Coefficients are stored in descending powers, ``coeffs[k]`` being the
coefficient of ``z**(n - k)``.  A polynomial built only from integers,
:class:`fractions.Fraction` values or rational literals such as ``"3/4"`` is
exact; a single float anywhere switches the whole polynomial to floats.
"""

from __future__ import annotations

import numbers
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from ..errors import PreconditionFailed

#: Default relative tolerance of the float backend.
DEFAULT_TOL = 1e-9


class Backend(str, Enum):
    EXACT = "exact"
    FLOAT = "float"


def _is_exact_scalar(x) -> bool:
    if isinstance(x, bool):
        return True
    if isinstance(x, (numbers.Integral, Fraction)):
        return True
    if isinstance(x, str):
        try:
            Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            return False
        return not any(ch in x.lower() for ch in ".e")
    return False


def to_exact(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, numbers.Integral):
        return Fraction(int(x))
    if isinstance(x, Fraction):
        return x
    raise TypeError(f"{x!r} is not an exact rational")


def infer_backend(values: Iterable) -> Backend:
    return Backend.EXACT if all(_is_exact_scalar(v) for v in values) else Backend.FLOAT


class Polynomial:
    """Immutable real polynomial ``a_0 z^n + a_1 z^(n-1) + ... + a_n``.

    Parameters
    ----------
    coeffs : sequence
        Coefficients in descending powers.  Leading zeros are stripped; an
        empty or all-zero sequence gives the zero polynomial (degree ``-1``).
    backend : Backend, optional
        Forced backend.  By default it is inferred from the coefficients.
    """

    __slots__ = ("coeffs", "backend")

    def __init__(self, coeffs: Sequence, backend: Backend | str | None = None):
        values = list(coeffs)
        if backend is None:
            backend = infer_backend(values)
        backend = Backend(backend)
        if backend is Backend.EXACT:
            conv = tuple(to_exact(v) for v in values)
            zero = Fraction(0)
        else:
            conv = []
            for v in values:
                if isinstance(v, str):
                    v = float(Fraction(v)) if "/" in v else float(v)
                c = complex(v) if isinstance(v, complex) else None
                if c is not None:
                    if c.imag != 0:
                        raise PreconditionFailed("complex coefficients are not supported")
                    v = c.real
                conv.append(float(v))
            conv = tuple(conv)
            zero = 0.0
        k = 0
        while k < len(conv) and conv[k] == 0:
            k += 1
        conv = conv[k:] or (zero,)
        object.__setattr__(self, "coeffs", conv)
        object.__setattr__(self, "backend", backend)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- basic properties -------------------------------------------------

    @property
    def degree(self) -> int:
        return -1 if self.is_zero else len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    @property
    def is_exact(self) -> bool:
        return self.backend is Backend.EXACT

    @property
    def leading(self):
        return self.coeffs[0]

    def coeff(self, k: int):
        """``a_k`` in the descending convention, zero outside ``0..n``."""
        if self.is_zero or k < 0 or k > self.degree:
            return self._zero
        return self.coeffs[k]

    @property
    def _zero(self):
        return Fraction(0) if self.is_exact else 0.0

    @property
    def _one(self):
        return Fraction(1) if self.is_exact else 1.0

    def ascending(self) -> tuple:
        return tuple(reversed(self.coeffs))

    # -- conversion -------------------------------------------------------

    def to_float(self) -> "Polynomial":
        if not self.is_exact:
            return self
        return Polynomial([float(c) for c in self.coeffs], Backend.FLOAT)

    def as_array(self) -> np.ndarray:
        return np.array([float(c) for c in self.coeffs], dtype=float)

    @classmethod
    def constant(cls, c, backend=None) -> "Polynomial":
        return cls([c], backend)

    @classmethod
    def from_roots(cls, roots: Iterable[complex], leading=1.0) -> "Polynomial":
        """Float polynomial with the given roots; conjugate imaginary parts must cancel."""
        c = np.array([1.0 + 0j])
        for r in roots:
            c = np.convolve(c, [1.0, -complex(r)])
        if np.max(np.abs(c.imag)) > 1e-9 * max(1.0, np.max(np.abs(c))):
            raise PreconditionFailed("roots are not closed under conjugation")
        return cls(list(leading * c.real), Backend.FLOAT)

    # -- arithmetic -------------------------------------------------------

    def _common(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if self.backend is other.backend:
            return self, other
        return self.to_float(), other.to_float()

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if _is_exact_scalar(other) and self.is_exact:
            return Polynomial([other], Backend.EXACT)
        return Polynomial([other], Backend.FLOAT)

    def __add__(self, other):
        a, b = self._common(self._coerce(other))
        x, y = a.ascending(), b.ascending()
        n = max(len(x), len(y))
        z = a._zero
        s = [(x[i] if i < len(x) else z) + (y[i] if i < len(y) else z) for i in range(n)]
        return Polynomial(s[::-1], a.backend)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.backend)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        a, b = self._common(self._coerce(other))
        if a.is_zero or b.is_zero:
            return Polynomial([a._zero], a.backend)
        out = [a._zero] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ai in enumerate(a.coeffs):
            if ai == 0:
                continue
            for j, bj in enumerate(b.coeffs):
                out[i + j] += ai * bj
        return Polynomial(out, a.backend)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial([self._one], self.backend)
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        a, b = self._common(self._coerce(other))
        if b.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(a.coeffs)
        if a.degree < b.degree:
            return Polynomial([a._zero], a.backend), a
        quot = []
        lead = b.leading
        for k in range(a.degree - b.degree + 1):
            c = rem[k] / lead
            quot.append(c)
            if c != 0:
                for j, bj in enumerate(b.coeffs):
                    rem[k + j] -= c * bj
        tail = rem[a.degree - b.degree + 1:]
        return Polynomial(quot, a.backend), Polynomial(tail, a.backend)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        if self.is_exact and isinstance(x, (numbers.Integral, Fraction)):
            acc, coeffs = Fraction(0), self.coeffs
        else:
            acc, coeffs = 0 * x, [float(c) for c in self.coeffs]
        for c in coeffs:
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.backend is other.backend and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.backend, self.coeffs))

    # -- derived polynomials ---------------------------------------------

    def derivative(self) -> "Polynomial":
        n = self.degree
        if n <= 0:
            return Polynomial([self._zero], self.backend)
        return Polynomial([c * (n - k) for k, c in enumerate(self.coeffs[:-1])], self.backend)

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = self.leading
        return Polynomial([c / lead for c in self.coeffs], self.backend)

    def scaled(self, c) -> "Polynomial":
        return self * c

    def of_square(self) -> "Polynomial":
        """The polynomial ``z -> self(z**2)``."""
        if self.is_zero:
            return self
        out = []
        for c in self.coeffs[:-1]:
            out.extend([c, self._zero])
        out.append(self.coeffs[-1])
        return Polynomial(out, self.backend)

    def trailing_zero_order(self) -> int:
        """Multiplicity of the root ``z = 0``."""
        if self.is_zero:
            return 0
        k = 0
        for c in reversed(self.coeffs):
            if c != 0:
                break
            k += 1
        return k

    def deflate_origin(self) -> tuple["Polynomial", int]:
        k = self.trailing_zero_order()
        if k == 0:
            return self, 0
        return Polynomial(self.coeffs[:-k], self.backend), k

    def allclose(self, other: "Polynomial", rtol: float = DEFAULT_TOL) -> bool:
        a = self.to_float().as_array()
        b = other.to_float().as_array()
        n = max(len(a), len(b))
        a = np.concatenate([np.zeros(n - len(a)), a])
        b = np.concatenate([np.zeros(n - len(b)), b])
        scale = max(1.0, float(np.max(np.abs(a))), float(np.max(np.abs(b))))
        return bool(np.max(np.abs(a - b)) <= rtol * scale)

    # -- display ----------------------------------------------------------

    def __repr__(self):
        cs = ", ".join(str(c) for c in self.coeffs)
        return f"Polynomial([{cs}], backend={self.backend.value!r})"

    def __str__(self):
        return self.pretty()

    def pretty(self, var: str = "z") -> str:
        if self.is_zero:
            return "0"
        n = self.degree
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = n - k
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if power == 0 or mag != 1:
                body = str(mag)
                if power:
                    body += " "
            else:
                body = ""
            if power == 1:
                body += var
            elif power > 1:
                body += f"{var}^{power}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm (exact backend only)."""
    if not (a.is_exact and b.is_exact):
        raise PreconditionFailed("poly_gcd needs exact coefficients; use gcd_even_odd for floats")
    if a.is_zero and b.is_zero:
        raise PreconditionFailed("gcd of two zero polynomials is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def exact_divide(a: Polynomial, b: Polynomial) -> Polynomial:
    q, r = divmod(a, b)
    if not r.is_zero:
        raise PreconditionFailed(f"{b} does not divide {a}")
    return q
