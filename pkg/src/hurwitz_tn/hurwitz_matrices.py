"""Constructors for Hurwitz, Hurwitz-type and triangular Toeplitz matrices.

All row/column indices exposed to callers are 1-based, matching the usual
minor notation ``A(i_1 ... i_k | j_1 ... j_k)``.  Infinite matrices only ever
exist as explicitly sized leading windows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _linalg
from .errors import PreconditionFailed
from .polynomial import Backend, Polynomial


@dataclass(frozen=True)
class Recipe:
    """How a matrix was built: a constructor name plus its arguments.

    ``Submatrix`` recipes keep the parent recipe and the 1-based index lists
    so that a witness minor can be traced back to its source.
    """

    kind: str
    args: tuple = ()
    parent: "Recipe | None" = None
    rows: tuple | None = None
    cols: tuple | None = None

    def describe(self) -> dict:
        out = {"kind": self.kind}
        if self.args:
            out["args"] = [str(a) if isinstance(a, Polynomial) else a for a in self.args]
        if self.parent is not None:
            out["parent"] = self.parent.describe()
            out["rows"] = list(self.rows)
            out["cols"] = list(self.cols)
        return out


@dataclass(frozen=True, eq=False)
class StructuredMatrix:
    entries: np.ndarray
    recipe: Recipe = field(default_factory=lambda: Recipe("Dense"))

    @property
    def backend(self) -> Backend:
        return Backend.EXACT if self.entries.dtype == object else Backend.FLOAT

    @property
    def is_exact(self) -> bool:
        return self.backend is Backend.EXACT

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)

    def __eq__(self, other):
        other_entries = other.entries if isinstance(other, StructuredMatrix) else np.asarray(other)
        if self.shape != np.shape(other_entries):
            return False
        return bool(np.all(self.entries == other_entries))

    def __matmul__(self, other: "StructuredMatrix") -> "StructuredMatrix":
        a, b = self.entries, other.entries
        if self.is_exact != other.is_exact:
            a, b = a.astype(float), b.astype(float)
        return StructuredMatrix(a.dot(b), Recipe("Product", (self.recipe.kind, other.recipe.kind)))

    def submatrix(self, rows, cols) -> "StructuredMatrix":
        """Submatrix on 1-based ``rows`` x ``cols``, provenance preserved."""
        r = [i - 1 for i in rows]
        c = [j - 1 for j in cols]
        return StructuredMatrix(
            self.entries[np.ix_(r, c)],
            Recipe("Submatrix", parent=self.recipe, rows=tuple(rows), cols=tuple(cols)),
        )

    def to_float(self) -> "StructuredMatrix":
        if not self.is_exact:
            return self
        return StructuredMatrix(self.entries.astype(float), self.recipe)

    def tolist(self) -> list[list]:
        return self.entries.tolist()

    def allclose(self, other, tol: float = 1e-9) -> bool:
        a = np.asarray(self.entries, dtype=float)
        b = np.asarray(other.entries if isinstance(other, StructuredMatrix) else other, dtype=float)
        if a.shape != b.shape:
            return False
        scale = max(1.0, float(np.max(np.abs(a), initial=0.0)))
        return bool(np.max(np.abs(a - b), initial=0.0) <= tol * scale)


def _zeros(rows: int, cols: int, backend: Backend) -> np.ndarray:
    if backend is Backend.EXACT:
        out = np.empty((rows, cols), dtype=object)
        out.fill(Fraction(0))
        return out
    return np.zeros((rows, cols))


def _backend_of(*polys: Polynomial) -> Backend:
    return Backend.EXACT if all(p.is_exact for p in polys) else Backend.FLOAT


def _coeff_list(p: Polynomial, degree: int, backend: Backend) -> list:
    """Coefficients of ``p`` padded with leading zeros to formal ``degree``."""
    zero = Fraction(0) if backend is Backend.EXACT else 0.0
    vals = [] if p.is_zero else list(p.coeffs)
    if backend is Backend.FLOAT:
        vals = [float(v) for v in vals]
    if len(vals) > degree + 1:
        raise PreconditionFailed(f"{p} has degree above {degree}")
    return [zero] * (degree + 1 - len(vals)) + vals


def _at(a: list, k: int, zero):
    return a[k] if 0 <= k < len(a) else zero


def finite_hurwitz(p: Polynomial) -> StructuredMatrix:
    """The n x n Hurwitz matrix with ``(i, j)`` entry ``a_{2j-i}``."""
    n = p.degree
    if n < 1:
        raise PreconditionFailed("finite Hurwitz matrix needs degree >= 1")
    M = _zeros(n, n, p.backend)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            M[i - 1, j - 1] = p.coeff(2 * j - i)
    return StructuredMatrix(M, Recipe("FiniteHurwitz", (p, n)))


def infinite_hurwitz_truncation(p: Polynomial, rows: int, cols: int | None = None) -> StructuredMatrix:
    """Leading window of the infinite Hurwitz matrix (first row ``a_0, a_2, a_4, ...``)."""
    if rows < 1:
        raise PreconditionFailed("rows must be >= 1")
    cols = rows if cols is None else cols
    M = _zeros(rows, cols, p.backend)
    for i in range(1, rows + 1):
        for j in range(1, cols + 1):
            M[i - 1, j - 1] = p.coeff(2 * j - i - 1)
    return StructuredMatrix(M, Recipe("InfiniteHurwitzTruncation", (p, rows, cols)))


def hurwitz_type(p: Polynomial, q: Polynomial, rows: int, cols: int | None = None,
                 degree: int | None = None) -> StructuredMatrix:
    """Leading window of the infinite Hurwitz-type matrix ``H(p, q)``.

    ``degree`` is the formal degree ``n`` of ``p`` (defaults to ``p.degree``);
    ``q`` is padded to the same length, so ``b_0 = 0`` exactly when
    ``deg q < n``.  Odd rows carry ``p`` when ``b_0 = 0`` and ``q`` otherwise.
    """
    n = p.degree if degree is None else degree
    if q.degree > n:
        raise PreconditionFailed("hurwitz_type needs deg q <= deg p")
    if rows < 1:
        raise PreconditionFailed("rows must be >= 1")
    cols = rows if cols is None else cols
    backend = _backend_of(p, q)
    a = _coeff_list(p, n, backend)
    b = _coeff_list(q, n, backend)
    zero = a[0] * 0
    M = _zeros(rows, cols, backend)
    equal = b[0] != 0
    for i in range(1, rows + 1):
        k = (i + 1) // 2
        for j in range(1, cols + 1):
            if not equal:
                M[i - 1, j - 1] = _at(a, j - k, zero) if i % 2 else _at(b, j - k, zero)
            else:
                M[i - 1, j - 1] = _at(b, j - k, zero) if i % 2 else _at(a, j - k - 1, zero)
    kind = "HurwitzType2n1" if equal else "HurwitzType2n"
    return StructuredMatrix(M, Recipe(kind, (p, q, rows, cols, n)))


def hurwitz_type_shifted(p: Polynomial, q: Polynomial, size: int,
                         degree: int | None = None) -> StructuredMatrix:
    """Principal submatrix of ``H(p, q)`` on rows and columns ``2 .. size+1``."""
    H = hurwitz_type(p, q, size + 1, degree=degree)
    idx = list(range(2, size + 2))
    return H.submatrix(idx, idx)


def finite_hurwitz_type(p: Polynomial, q: Polynomial, degree: int | None = None) -> StructuredMatrix:
    """The ``2n x 2n`` (``deg q < n``) or ``(2n+1) x (2n+1)`` (``deg q = n``) finite matrix."""
    n = p.degree if degree is None else degree
    if q.degree > n:
        raise PreconditionFailed("finite_hurwitz_type needs deg q <= deg p")
    size = 2 * n + 1 if q.degree == n else 2 * n
    if size < 1:
        raise PreconditionFailed("finite Hurwitz-type matrix would be empty")
    S = hurwitz_type_shifted(p, q, size, degree=n)
    return StructuredMatrix(S.entries, Recipe("FiniteHurwitzType", (p, q, n, size)))


def toeplitz_of(g: Polynomial, size: int) -> StructuredMatrix:
    """``size x size`` leading window of the upper triangular Toeplitz matrix of ``g``."""
    if size < 1:
        raise PreconditionFailed("size must be >= 1")
    M = _zeros(size, size, g.backend)
    for i in range(size):
        for j in range(i, size):
            M[i, j] = g.coeff(j - i)
    return StructuredMatrix(M, Recipe("ToeplitzOfPoly", (g, size)))


def schoenberg_tr(g: Polynomial, r: int) -> StructuredMatrix:
    """The ``r x (r + l)`` band matrix whose row ``i`` holds ``g_0 .. g_l`` from column ``i``."""
    if r < 1:
        raise PreconditionFailed("r must be >= 1")
    if g.is_zero:
        raise PreconditionFailed("g must be nonzero")
    l = g.degree
    M = _zeros(r, r + l, g.backend)
    for i in range(r):
        for k in range(l + 1):
            M[i, i + k] = g.coeffs[k]
    return StructuredMatrix(M, Recipe("SchoenbergTr", (g, r)))


_BUILDERS = {
    "FiniteHurwitz": lambda args: finite_hurwitz(args[0]),
    "InfiniteHurwitzTruncation": lambda args: infinite_hurwitz_truncation(*args),
    "HurwitzType2n": lambda args: hurwitz_type(*args[:4], degree=args[4]),
    "HurwitzType2n1": lambda args: hurwitz_type(*args[:4], degree=args[4]),
    "FiniteHurwitzType": lambda args: finite_hurwitz_type(args[0], args[1], degree=args[2]),
    "ToeplitzOfPoly": lambda args: toeplitz_of(*args),
    "SchoenbergTr": lambda args: schoenberg_tr(*args),
}


def rebuild(recipe: Recipe) -> StructuredMatrix:
    """Regenerate a matrix from its recipe alone."""
    if recipe.kind == "Submatrix":
        return rebuild(recipe.parent).submatrix(recipe.rows, recipe.cols)
    try:
        return _BUILDERS[recipe.kind](recipe.args)
    except KeyError:
        raise PreconditionFailed(f"recipe {recipe.kind!r} cannot be rebuilt") from None


# -- factorization identities -------------------------------------------------


@dataclass(frozen=True)
class FactorizationCheck:
    """Outcome of checking ``H(p g, q g) = H(p, q) T(g)`` on finite windows."""

    infinite_window: bool
    finite: bool
    rank_claim: bool | None = None
    rank: int | None = None
    expected_rank: int | None = None

    def __bool__(self):
        return self.infinite_window and self.finite and self.rank_claim is not False


def _equal(A: StructuredMatrix, B: StructuredMatrix, tol: float) -> bool:
    if A.is_exact and B.is_exact:
        return A == B
    return A.allclose(B, tol)


def verify_factorization(p: Polynomial, q: Polynomial, g: Polynomial,
                         window: int | None = None, tol: float = 1e-9) -> FactorizationCheck:
    """Check the gcd factorization of Hurwitz-type matrices on finite windows.

    Builds ``H(p g, q g)`` and ``H(p, q) T(g)`` on a leading window, the
    finite matrices of ``(p g, q g)`` against the shifted window of
    ``H(p, q)`` times ``T(g)``, and, when ``deg p - deg q`` is 0 or 1 with a
    nonsingular finite matrix of ``(p, q)`` and ``p(0) != 0``, the rank
    ``2n + m`` (resp. ``2n + m + 1``).
    """
    if q.degree > p.degree:
        raise PreconditionFailed("verify_factorization needs deg q <= deg p")
    if g.is_zero:
        raise PreconditionFailed("g must be nonzero")
    n, m = p.degree, g.degree
    pg, qg = p * g, q * g
    size = 2 * (n + m) + 1 if q.degree == n else 2 * (n + m)
    w = window or size + 2
    lhs = hurwitz_type(pg, qg, w, degree=n + m)
    rhs = hurwitz_type(p, q, w, degree=n) @ toeplitz_of(g, w)
    infinite_ok = _equal(lhs, rhs, tol)

    left = finite_hurwitz_type(pg, qg, degree=n + m)
    right = hurwitz_type_shifted(p, q, size, degree=n) @ toeplitz_of(g, size)
    finite_ok = _equal(left, right, tol)

    rank_claim = rank = expected = None
    if q.degree >= n - 1 and p.coeff(n) != 0 and n >= 1:
        base = finite_hurwitz_type(p, q, degree=n)
        base_det = _linalg.det(base.entries)
        nonsingular = base_det != 0 if base.is_exact else abs(base_det) > tol
        if nonsingular:
            expected = 2 * n + m + (1 if q.degree == n else 0)
            rank = _linalg.rank(left.entries)
            rank_claim = rank == expected
    return FactorizationCheck(infinite_ok, finite_ok, rank_claim, rank, expected)


def verify_hurwitz_factorization(q: Polynomial, g: Polynomial, tol: float = 1e-9) -> bool:
    """``H_n(q(z) g(z^2)) = H_n(q) T_n(g)`` with ``H_n(q)`` the shifted window of ``H_inf(q)``."""
    p = q * g.of_square()
    n = p.degree
    Hq = infinite_hurwitz_truncation(q, n + 1)
    idx = list(range(2, n + 2))
    rhs = Hq.submatrix(idx, idx) @ toeplitz_of(g, n)
    return _equal(finite_hurwitz(p), rhs, tol)
