"""Exact/float dense linear algebra kernels used across the package."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import numpy as np


def is_exact_array(A) -> bool:
    A = np.asarray(A)
    return A.dtype == object


def as_exact(A) -> np.ndarray:
    A = np.asarray(A, dtype=object)
    out = np.empty(A.shape, dtype=object)
    for idx, v in np.ndenumerate(A):
        out[idx] = v if isinstance(v, Fraction) else Fraction(v)
    return out


def integer_scaled(A) -> tuple[list[list[int]], int]:
    """Integer matrix ``D * A`` and the common denominator ``D > 0``."""
    D = 1
    for v in np.asarray(A).flat:
        D = lcm(D, Fraction(v).denominator)
    rows = [[int(Fraction(v) * D) for v in row] for row in np.asarray(A)]
    return rows, D


def bareiss_det(M: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination on an integer matrix."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def det(A):
    """Determinant; exact (Fraction) for object arrays, float otherwise."""
    A = np.asarray(A)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1) if is_exact_array(A) else 1.0
    if is_exact_array(A):
        M, D = integer_scaled(A)
        return Fraction(bareiss_det(M), D ** n)
    return float(np.linalg.det(A.astype(float)))


def exact_rank(A) -> int:
    M, _ = integer_scaled(A)
    if not M:
        return 0
    rows, cols = len(M), len(M[0])
    M = [[Fraction(v) for v in r] for r in M]
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        pr = M[rank]
        for i in range(rank + 1, rows):
            f = M[i][c] / pr[c]
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], pr)]
        rank += 1
        if rank == rows:
            break
    return rank


def numerical_rank(A, rtol: float = 1e-10) -> int:
    A = np.asarray(A, dtype=float)
    if A.size == 0:
        return 0
    s = np.linalg.svd(A, compute_uv=False)
    if s[0] == 0:
        return 0
    return int(np.sum(s > rtol * s[0]))


def rank(A, rtol: float = 1e-10) -> int:
    return exact_rank(A) if is_exact_array(A) else numerical_rank(A, rtol)


def charpoly_coeffs(A) -> list:
    """Coefficients of ``det(lambda I - A)``, descending, by Faddeev-LeVerrier.

    Exact for object arrays (Fractions); float otherwise.
    """
    A = np.asarray(A)
    n = A.shape[0]
    exact = is_exact_array(A)
    one = Fraction(1) if exact else 1.0
    eye = np.eye(n, dtype=object if exact else float)
    if exact:
        eye = eye * one
        A = as_exact(A)
    coeffs = [one]
    Mk = eye * 0
    for k in range(1, n + 1):
        Mk = A.dot(Mk) + coeffs[-1] * eye
        AM = A.dot(Mk)
        tr = sum(AM[i, i] for i in range(n))
        ck = -tr / k if exact else -float(tr) / k
        coeffs.append(ck)
    return coeffs
