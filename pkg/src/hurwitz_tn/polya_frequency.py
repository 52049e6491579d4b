"""Polya frequency (PF_r) membership of polynomial coefficient sequences.

A polynomial ``g(u) = g_0 u^l + ... + g_l`` lies in PF_r when its triangular
Toeplitz matrix has no negative minor of order <= r.  Schoenberg reduced this
to the finite ``r x (r + l)`` band matrix ``T_r``; when ``g_0 > 0`` it is
further enough to look at the order-``r`` minors of ``T_r`` alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import _linalg
from ._trig import pair_factor, product
from .errors import PreconditionFailed
from .hurwitz_matrices import schoenberg_tr
from .polynomial import Polynomial
from .tnn_checker import Witness, _iter_minor_orders

ORDER_R = "OrderROnly"
ALL_ORDERS = "AllOrders"

#: Float minors of order k above ``-PF_TOL * max|g_i|**k`` count as nonnegative.
PF_TOL = 1e-10


@dataclass(frozen=True)
class PfReport:
    r: int
    verdict: bool
    witness: Witness | None
    reduction_used: str

    def __bool__(self):
        return self.verdict


def _rows(g: Polynomial, r: int):
    A = schoenberg_tr(g, r).entries
    if g.is_exact:
        rows, D = _linalg.integer_scaled(A)
        return rows, (lambda v, k: Fraction(v, D ** k))
    return A.astype(float).tolist(), (lambda v, k: v)


def _threshold(g: Polynomial, k: int) -> float:
    if g.is_exact:
        return 0
    return PF_TOL * max(abs(float(c)) for c in g.coeffs) ** k


def _order_r_minors(rows: list):
    """Minors using all rows, in lexicographic column order.

    Laplace expansion along the top row only ever needs minors built on the
    trailing rows, so the table stays at ``sum_k C(cols, k)`` entries.
    """
    r = len(rows)
    c = len(rows[0])
    prev = {(j,): rows[r - 1][j] for j in range(c)}
    for k in range(2, r + 1):
        row = rows[r - k]
        cur = {}
        for C in combinations(range(c), k):
            total = 0
            sign = 1
            for t in range(k):
                a = row[C[t]]
                if a:
                    m = prev[C[:t] + C[t + 1:]]
                    if m:
                        total += sign * a * m
                sign = -sign
            cur[C] = total
        prev = cur
    return prev


def is_pf_r(g: Polynomial, r: int, mode: str = "order_r") -> PfReport:
    """Decide ``g in PF_r``.

    Parameters
    ----------
    g : Polynomial
        Nonzero polynomial; ``g_0`` is its leading coefficient.
    r : int
        Order, ``r >= 1``.
    mode : {"order_r", "all"}
        ``"order_r"`` checks ``g_0 > 0`` and the order-``r`` minors of ``T_r``;
        ``"all"`` enumerates every minor of ``T_r``.

    Returns
    -------
    PfReport
        ``witness`` carries the first negative minor (1-based indices into ``T_r``).
    """
    if r < 1:
        raise PreconditionFailed("r must be >= 1")
    if g.is_zero:
        raise PreconditionFailed("g_0 must be nonzero")
    if mode not in ("order_r", "all"):
        raise PreconditionFailed(f"unknown mode {mode!r}")
    rows, decode = _rows(g, r)

    if mode == "all":
        for k, table in _iter_minor_orders(rows, r):
            thresh = _threshold(g, k)
            for R, row in table.items():
                for C, v in row.items():
                    if v < -thresh:
                        w = Witness(tuple(i + 1 for i in R), tuple(j + 1 for j in C), decode(v, k))
                        return PfReport(r, False, w, ALL_ORDERS)
        return PfReport(r, True, None, ALL_ORDERS)

    # the reduction to order r divides by powers of g_0, so its sign matters
    if g.leading < 0:
        return PfReport(r, False, Witness((1,), (1,), g.leading), ORDER_R)
    thresh = _threshold(g, r)
    for C, v in _order_r_minors(rows).items():
        if v < -thresh:
            w = Witness(tuple(range(1, r + 1)), tuple(j + 1 for j in C), decode(v, r))
            return PfReport(r, False, w, ORDER_R)
    return PfReport(r, True, None, ORDER_R)


def schoenberg_sharp_polynomial(r: int, k: int) -> Polynomial:
    """``prod_{j=1}^{r} (z + e^{i theta (r - 2j + 1)})`` with ``theta = pi / (r + k - 1)``.

    Mirror factors ``j`` and ``r + 1 - j`` are multiplied first, giving
    ``z^2 + 2 cos(phi) z + 1``; the middle factor for odd ``r`` is ``z + 1``.
    The result lies in PF_k with zeros at ``-e^{+-i theta (r - 1)}``.
    """
    if r < 1 or k < 1:
        raise PreconditionFailed("r and k must be >= 1")
    theta = math.pi / (r + k - 1)
    factors = [pair_factor(theta * (r - 2 * j + 1)) for j in range(1, r // 2 + 1)]
    if r % 2:
        factors.append(Polynomial([1, 1]))
    return product(factors)


def pf_boundary_quadratic(theta: float, c: float = 1.0) -> Polynomial:
    """``(u + c e^{i theta})(u + c e^{-i theta}) = u^2 + 2 c cos(theta) u + c^2``.

    In PF_k exactly when ``0 <= theta <= pi / (k + 1)``.
    """
    return Polynomial([1.0, 2 * c * math.cos(theta), c * c])
