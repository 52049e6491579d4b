"""Eigenstructure of totally nonnegative finite Hurwitz matrices.

For TN ``H_n(p)`` with ``Delta_m != 0 = Delta_{m+1}`` there are ``(n+m)/2``
positive eigenvalues and ``(n-m)/2`` zero ones (semisimple).  Positive
eigenvalues are simple except that ``a_n = p(0)`` may be double, and then it
carries a single Jordan block.  This module measures all of that directly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _linalg
from .errors import CapExceeded, PreconditionFailed, RootFindingFailed, SpectralFailed
from .hurwitz_matrices import StructuredMatrix, finite_hurwitz
from .polynomial import DEFAULT_TOL, Polynomial, find_roots
from .tnn_checker import hurwitz_minors, is_totally_nonnegative, stability_index_from_minors

#: Eigenvalues closer than this (relative to 1 + |value|) are identified.
MATCH_TOL = 1e-6
#: Float char-poly coefficients c_k with |c_k| <= SNAP_TOL * C(n,k) * |H|^k are set to zero.
SNAP_TOL = 1e-9
MAX_DEGREE = 12


@dataclass(frozen=True)
class EigenInfo:
    value: object
    algebraic: int
    geometric: int


@dataclass(frozen=True)
class SpectralReport:
    eigenvalues: tuple
    rank: int
    zero_algebraic_mult: int
    zero_geometric_mult: int
    positive_count: int
    p0_eigen: EigenInfo | None
    jordan_consistent: bool
    stability_index: int | None
    out_of_theorem_scope: bool
    irreducible_leading_block: bool
    trace_residual: float
    warnings: tuple = field(default=())


def rank_of(M) -> int:
    """Exact rank for rational matrices, SVD rank (threshold ``1e-10 sigma_max``) for floats."""
    A = M.entries if isinstance(M, StructuredMatrix) else np.asarray(M)
    return _linalg.rank(A)


def is_irreducible(A) -> bool:
    """Strong connectivity of the digraph ``i -> j`` whenever ``A[i, j] != 0``."""
    A = np.asarray(A)
    n = A.shape[0]
    if n <= 1:
        return True
    adj = [[j for j in range(n) if A[i, j] != 0 and i != j] for i in range(n)]
    radj = [[i for i in range(n) if A[i, j] != 0 and i != j] for j in range(n)]

    def reach(graph):
        seen = {0}
        todo = deque([0])
        while todo:
            for j in graph[todo.popleft()]:
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
        return len(seen) == n

    return reach(adj) and reach(radj)


def _charpoly(H: np.ndarray, exact: bool) -> Polynomial:
    coeffs = _linalg.charpoly_coeffs(H)
    if exact:
        return Polynomial(coeffs)
    n = H.shape[0]
    scale = max(float(np.max(np.sum(np.abs(H.astype(float)), axis=0))), 1.0)
    from math import comb
    c = [float(v) for v in coeffs]
    for k in range(n, 0, -1):
        if abs(c[k]) <= SNAP_TOL * comb(n, k) * scale ** k:
            c[k] = 0.0
        else:
            break
    return Polynomial(c, backend="float")


def _is_zero(z: complex, scale: float) -> bool:
    return abs(z) <= 1e-8 * scale


def spectral_analysis(p: Polynomial, tol: float = DEFAULT_TOL) -> SpectralReport:
    """Eigenvalues, rank and the Jordan structure at 0 and at ``a_n``.

    Raises
    ------
    SpectralFailed
        When the characteristic polynomial cannot be rooted.
    """
    n = p.degree
    if n < 1:
        raise PreconditionFailed("degree must be >= 1")
    if n > MAX_DEGREE:
        raise PreconditionFailed(f"degree {n} above the spectral scope {MAX_DEGREE}")
    warnings = []
    H = finite_hurwitz(p)
    A = H.entries
    exact = H.is_exact

    try:
        tn = is_totally_nonnegative(H, tol=tol).is_tn
    except CapExceeded:
        tn = False
    if not tn:
        warnings.append("H_n(p) is not TN: the eigenstructure theorem does not apply")
    m = stability_index_from_minors(hurwitz_minors(p, tol))

    chi = _charpoly(A, exact)
    try:
        eig = find_roots(chi)
    except RootFindingFailed as exc:
        raise SpectralFailed(f"characteristic polynomial not rooted: {exc}") from exc
    eigs = list(eig.roots)
    # find_roots deflates zeros; make sure they are listed even if absent from RootSet
    listed = sum(k for _, k in eigs)
    if listed < n:
        eigs.append((0j, n - listed))

    scale = 1.0 + float(np.max(np.abs(A.astype(float))))
    zero_alg = sum(k for z, k in eigs if _is_zero(z, scale))
    rk = rank_of(A)
    zero_geo = n - rk
    positives = [(z, k) for z, k in eigs
                 if not _is_zero(z, scale) and z.real > 0 and abs(z.imag) <= 1e-8 * scale]
    positive_count = sum(k for _, k in positives)

    an = p.coeff(n)
    p0_eigen = None
    an_f = float(an)
    for z, k in eigs:
        if an_f != 0 and abs(z - an_f) <= MATCH_TOL * (1 + abs(an_f)):
            shift = A - an * np.eye(n, dtype=object if exact else float)
            geo = n - rank_of(shift)
            p0_eigen = EigenInfo(an, k, geo)
            break

    consistent = zero_alg == zero_geo
    for z, k in positives:
        if k == 1:
            continue
        is_an = p0_eigen is not None and abs(z - an_f) <= MATCH_TOL * (1 + abs(an_f))
        if not (is_an and k == 2 and p0_eigen.geometric == 1):
            consistent = False
    if m is not None and tn:
        consistent = consistent and positive_count == (n + m) // 2 and zero_alg == (n - m) // 2

    lead = A[: n - 1, : n - 1] if n > 1 else A
    irreducible = is_irreducible(lead)
    if not irreducible:
        warnings.append("leading (n-1) block is reducible: simplicity of positive eigenvalues is not implied")

    total = sum(z * k for z, k in eigs)
    trace = float(sum(A[i, i] for i in range(n)))
    trace_residual = abs(total - trace) / max(1.0, abs(trace))

    return SpectralReport(
        eigenvalues=tuple(eigs),
        rank=rk,
        zero_algebraic_mult=zero_alg,
        zero_geometric_mult=zero_geo,
        positive_count=positive_count,
        p0_eigen=p0_eigen,
        jordan_consistent=consistent,
        stability_index=m,
        out_of_theorem_scope=not tn,
        irreducible_leading_block=irreducible,
        trace_residual=float(trace_residual),
        warnings=tuple(warnings),
    )


# -- diagnostics for the rank-(n-1) argument on B_n = H_n(p) - a_n I ----------------

_BASE_TERMS = {
    4: {"top": 1, 0: 1},
    5: {"top": 1, 1: 2},
    6: {"top": 2, 0: 1, 1: 1},
    7: {"top": 3, 0: 1, 1: 1},
    8: {"top": 4, 0: 2},
}


def delta_term_exponents(n: int) -> dict:
    """Monomial ``delta_n`` as ``{"top": e, i: e_i}`` meaning ``a_n^e prod a_i^{e_i}``.

    Tabulated for ``4 <= n <= 8``; for larger ``n`` built by
    ``delta_{2l-1} = top^{l-2} a_1 delta_l`` and ``delta_{2l} = top^{l-1} a_0 delta_l``
    where ``delta_l`` is evaluated with ``a_n`` in place of ``a_l``.
    """
    if n in _BASE_TERMS:
        return dict(_BASE_TERMS[n])
    if n < 4:
        raise PreconditionFailed("delta_n is defined for n >= 4")
    l, odd = (n + 1) // 2, n % 2 == 1
    inner = delta_term_exponents(l)
    out = dict(inner)
    out["top"] = out.get("top", 0) + (l - 2 if odd else l - 1)
    idx = 1 if odd else 0
    out[idx] = out.get(idx, 0) + 1
    return out


def delta_term(p: Polynomial):
    """Value of ``delta_n`` for ``p`` of degree ``n >= 4``."""
    exps = delta_term_exponents(p.degree)
    val = p.coeff(p.degree) ** exps["top"]
    for i, e in exps.items():
        if i != "top":
            val = val * p.coeff(i) ** e
    return val


def b_minor_identity(p: Polynomial) -> tuple:
    """Both sides of ``B(2..n | 1..n-1) = a_0 B(3..n | 2..n-1)`` for ``B = H_n(p) - a_n I``."""
    n = p.degree
    if n < 3:
        raise PreconditionFailed("identity needs n >= 3")
    H = finite_hurwitz(p)
    exact = H.is_exact
    B = H.entries - p.coeff(n) * np.eye(n, dtype=object if exact else float)
    lhs = _linalg.det(B[1:, : n - 1])
    rhs = p.coeff(0) * _linalg.det(B[2:, 1: n - 1])
    return lhs, rhs
