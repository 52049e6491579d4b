"""Total nonnegativity by exhaustive minor enumeration, and Hurwitz determinants.

Minors of order ``k`` are computed from those of order ``k - 1`` by Laplace
expansion along the first selected row, so each minor costs ``O(k)`` work.
Exact matrices are rescaled to integers first (a positive scale does not
change any sign).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import _linalg
from .errors import CapExceeded, PreconditionFailed
from .hurwitz_matrices import StructuredMatrix, finite_hurwitz, infinite_hurwitz_truncation
from .polynomial import DEFAULT_TOL, Polynomial

DEFAULT_CAP = 14


@dataclass(frozen=True)
class Witness:
    rows: tuple
    cols: tuple
    value: object


@dataclass(frozen=True)
class TnnReport:
    verdict: str
    witness: Witness | None
    minors_checked: int
    max_order_checked: int

    @property
    def is_tn(self) -> bool:
        return self.verdict == "TotallyNonnegative"

    def __bool__(self):
        return self.is_tn


@dataclass(frozen=True)
class MinorSequence:
    """Leading principal minors ``values[j-1]`` of order ``j``.

    ``zero_tol[j-1]`` is the band inside which the float value counts as
    zero (always 0 for exact sequences).
    """

    values: tuple
    kind: str
    zero_tol: tuple

    def __len__(self):
        return len(self.values)

    def __getitem__(self, j):
        return self.values[j]

    def signs(self) -> tuple:
        return tuple(_sign(v, t) for v, t in zip(self.values, self.zero_tol))


def _sign(v, tol) -> int:
    if v > tol:
        return 1
    if v < -tol:
        return -1
    return 0


def _entries(M) -> np.ndarray:
    return M.entries if isinstance(M, StructuredMatrix) else np.asarray(M)


def _prepare(A: np.ndarray):
    """Rows as Python scalars plus a per-order value decoder."""
    if _linalg.is_exact_array(A):
        rows, D = _linalg.integer_scaled(A)
        return rows, True, (lambda v, k: Fraction(v, D ** k))
    rows = A.astype(float).tolist()
    return rows, False, (lambda v, k: v)


def _iter_minor_orders(rows: list, max_order: int):
    """Yield ``(k, table)`` with ``table[R][C]`` the minor on 0-based tuples R, C."""
    r = len(rows)
    c = len(rows[0]) if r else 0
    prev = {(i,): {(j,): rows[i][j] for j in range(c)} for i in range(r)}
    yield 1, prev
    for k in range(2, max_order + 1):
        col_sets = list(combinations(range(c), k))
        cur = {}
        for R in combinations(range(r), k):
            first = rows[R[0]]
            sub = prev[R[1:]]
            table = {}
            for C in col_sets:
                total = 0
                sign = 1
                for t in range(k):
                    a = first[C[t]]
                    if a:
                        m = sub[C[:t] + C[t + 1:]]
                        if m:
                            total += sign * a * m
                    sign = -sign
                table[C] = total
            cur[R] = table
        yield k, cur
        prev = cur


def all_minors(M, max_order: int | None = None) -> dict:
    """Every square minor, keyed by 1-based ``(rows, cols)`` tuples."""
    A = _entries(M)
    rows, _, decode = _prepare(A)
    top = min(A.shape) if max_order is None else min(max_order, *A.shape)
    out = {}
    for k, table in _iter_minor_orders(rows, top):
        for R, row in table.items():
            for C, v in row.items():
                out[(tuple(i + 1 for i in R), tuple(j + 1 for j in C))] = decode(v, k)
    return out


def is_totally_nonnegative(M, *, tol: float = DEFAULT_TOL, cap: int = DEFAULT_CAP,
                           max_order: int | None = None) -> TnnReport:
    """Decide whether every square minor of ``M`` is nonnegative.

    Minors are visited by order, then row set, then column set, all in
    lexicographic order; the first negative one is returned as the witness,
    so the result is deterministic.  Float minors of order ``k`` inside
    ``(-tol * |M|_1**k, tol * |M|_1**k)`` count as zero.

    Raises
    ------
    CapExceeded
        When either dimension of ``M`` exceeds ``cap``.
    """
    A = _entries(M)
    if A.ndim != 2:
        raise PreconditionFailed("expected a matrix")
    if max(A.shape) > cap:
        raise CapExceeded(f"{A.shape[0]}x{A.shape[1]} matrix exceeds the {cap}x{cap} enumeration cap")
    if A.size == 0:
        return TnnReport("TotallyNonnegative", None, 0, 0)
    rows, exact, decode = _prepare(A)
    norm1 = 0.0 if exact else float(np.max(np.sum(np.abs(A.astype(float)), axis=0)))
    top = min(A.shape) if max_order is None else min(max_order, *A.shape)
    checked = 0
    for k, table in _iter_minor_orders(rows, top):
        thresh = 0 if exact else tol * norm1 ** k
        for R, row in table.items():
            for C, v in row.items():
                checked += 1
                if v < -thresh:
                    w = Witness(tuple(i + 1 for i in R), tuple(j + 1 for j in C), decode(v, k))
                    return TnnReport("NotTN", w, checked, k)
    return TnnReport("TotallyNonnegative", None, checked, top)


def _leading_minors(A: np.ndarray, kind: str, depth: int, tol: float) -> MinorSequence:
    exact = _linalg.is_exact_array(A)
    values, tols = [], []
    for j in range(1, depth + 1):
        sub = A[:j, :j]
        values.append(_linalg.det(sub))
        if exact:
            tols.append(0)
        else:
            norm1 = float(np.max(np.sum(np.abs(sub.astype(float)), axis=0)))
            tols.append(tol * norm1 ** j)
    return MinorSequence(tuple(values), kind, tuple(tols))


def hurwitz_minors(p: Polynomial, tol: float = DEFAULT_TOL) -> MinorSequence:
    """Hurwitz determinants ``Delta_1 .. Delta_n`` (``Delta_0 = 1`` is implicit)."""
    H = finite_hurwitz(p)
    return _leading_minors(H.entries, "DeltaOfP", p.degree, tol)


def eta_minors(p: Polynomial, depth: int, tol: float = DEFAULT_TOL) -> MinorSequence:
    """Leading principal minors ``eta_1 .. eta_depth`` of the infinite Hurwitz matrix."""
    if depth < 1:
        raise PreconditionFailed("depth must be >= 1")
    H = infinite_hurwitz_truncation(p, depth)
    return _leading_minors(H.entries, "EtaOfP", depth, tol)


def leading_minors(M, kind: str = "DeltaOfPQ", tol: float = DEFAULT_TOL) -> MinorSequence:
    A = _entries(M)
    return _leading_minors(A, kind, min(A.shape), tol)


def stability_index_from_minors(delta: MinorSequence) -> int | None:
    """Largest ``m`` with ``Delta_1..Delta_m > 0`` and the rest zero.

    Returns ``None`` when the sequence has a negative entry or a zero
    followed by a nonzero entry.
    """
    signs = delta.signs()
    m = 0
    while m < len(signs) and signs[m] == 1:
        m += 1
    if any(s != 0 for s in signs[m:]):
        return None
    return m


def last_nonzero_index(seq: MinorSequence) -> int:
    """Index of the last nonzero entry (0 when all vanish)."""
    signs = seq.signs()
    for j in range(len(signs), 0, -1):
        if signs[j - 1] != 0:
            return j
    return 0
