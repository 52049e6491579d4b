"""Zero-free sectors for totally nonnegative finite Hurwitz matrices.

Necessary side: if ``H_n(p)`` is TN with ``Delta_m != 0 = Delta_{m+1}``, no zero
of ``p`` satisfies ``|arg z| < (pi/4)(n+m)/(n-1)``.  Sufficient side: if ``p``
has the reflection property and no zero with ``|arg z| < (pi/2)(n+m)/(n+m+2)``,
then ``H_n(p)`` is TN.  Both bounds are sharp; the generators below build the
witnessing families.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from ._trig import pair_factor, product
from .errors import PreconditionFailed, UseQuasiStabilityRule
from .polynomial import Polynomial, find_roots

#: Roots within this many radians of the sector edge are "on the boundary".
ANGLE_TOL = 1e-8

THEOREMS = ("Nec21", "Cor22", "Suf23", "Nec57", "Suf58")


@dataclass(frozen=True)
class SectorVerdict:
    half_angle: float
    roots_inside: tuple
    roots_on_boundary: tuple
    theorem: str | None = None

    @property
    def ok(self) -> bool:
        """No root strictly inside the sector (boundary roots are allowed)."""
        return not self.roots_inside


def default_m(n: int) -> int:
    return 0 if n % 2 == 0 else 1


def necessary_sector_halfangle(n: int, m: int | None = None) -> float:
    """``(pi/4)(n+m)/(n-1)`` clamped at ``pi/2``; ``m`` defaults to the parity of ``n``."""
    if n < 2:
        raise PreconditionFailed("n must be >= 2")
    m = default_m(n) if m is None else m
    if not 0 <= m <= n - 2:
        raise PreconditionFailed(f"m={m} outside 0..{n - 2}")
    return min(math.pi / 4 * (n + m) / (n - 1), math.pi / 2)


def sufficient_sector_halfangle(n: int, m: int | None = None) -> float:
    """``(pi/2)(n+m)/(n+m+2)``; ``m`` defaults to ``n - 4``.

    Raises
    ------
    UseQuasiStabilityRule
        For ``n < 4``, where finite TN is simply equivalent to quasi-stability.
    """
    if n < 4:
        raise UseQuasiStabilityRule(
            f"degree {n} < 4: H_n(p) is TN exactly when p is quasi-stable")
    m = n - 4 if m is None else m
    if not 0 <= m <= n - 4:
        raise PreconditionFailed(f"m={m} outside 0..{n - 4}")
    return math.pi / 2 * (n + m) / (n + m + 2)


def sector_for_theorem(theorem: str, n: int, m: int | None = None) -> float:
    if theorem == "Nec21":
        return necessary_sector_halfangle(n, None)
    if theorem == "Nec57":
        return necessary_sector_halfangle(n, m)
    if theorem == "Cor22":
        return math.pi / 4
    if theorem == "Suf23":
        return sufficient_sector_halfangle(n, None)
    if theorem == "Suf58":
        return sufficient_sector_halfangle(n, m)
    raise PreconditionFailed(f"unknown theorem {theorem!r}; expected one of {THEOREMS}")


def check_zero_free_sector(p: Polynomial, half_angle: float, theorem: str | None = None,
                           angle_tol: float = ANGLE_TOL) -> SectorVerdict:
    """Sort the zeros of ``p`` against the open sector ``|arg z| < half_angle``.

    Zeros at the origin are skipped (the sector is open at its apex).
    Entries of ``roots_inside`` / ``roots_on_boundary`` are ``(root, multiplicity)``.
    """
    if not 0 < half_angle <= math.pi / 2 + angle_tol:
        raise PreconditionFailed("half_angle must lie in (0, pi/2]")
    inside, boundary = [], []
    if p.degree >= 1:
        for z, mult in find_roots(p.to_float()):
            if z == 0:
                continue
            a = abs(cmath.phase(z))
            if abs(a - half_angle) <= angle_tol:
                boundary.append((z, mult))
            elif a < half_angle:
                inside.append((z, mult))
    return SectorVerdict(half_angle, tuple(inside), tuple(boundary), theorem)


def sharp_necessary_example(n: int, m: int | None = None) -> Polynomial:
    """``(z+1)^m prod_{j=1}^{(n-m)/2} (z^2 + e^{i (pi/2)(n-m-4j+2)/(n-1)})``.

    Factor ``j`` is paired with its mirror ``(n-m)/2 + 1 - j`` (opposite
    exponent) to give ``z^4 + 2 cos(phi) z^2 + 1``; an unpaired middle factor
    has exponent 0 and is ``z^2 + 1``.  ``H_n`` of the result is TN and its
    extreme zeros sit on the necessary-sector boundary.
    """
    if n < 2:
        raise PreconditionFailed("n must be >= 2")
    m = default_m(n) if m is None else m
    if not 0 <= m <= n - 2 or (n - m) % 2:
        raise PreconditionFailed("need 0 <= m <= n-2 with n-m even")
    half = (n - m) // 2
    factors = [Polynomial([1, 1])] * m
    for j in range(1, half // 2 + 1):
        phi = math.pi / 2 * (n - m - 4 * j + 2) / (n - 1)
        factors.append(pair_factor(phi, power=2))
    if half % 2:
        factors.append(Polynomial([1, 0, 1]))
    return product(factors)


def sufficient_counterexample_angle(n: int, m: int, epsilon: float, literal: bool = False) -> float:
    """Quartic-factor angle just past the PF boundary for ``g in PF_{(n+m)/2}``.

    ``u^2 + 2 cos(theta) u + 1`` is in PF_k iff ``theta <= pi/(k+1)``; with
    ``k = (n+m)/2`` the threshold is ``2 pi/(n+m+2)``.  ``literal=True`` gives
    ``pi/(n+m+2) + epsilon`` instead, which stays inside the PF region and
    therefore yields a TN matrix (kept for comparison).
    """
    base = math.pi / (n + m + 2) if literal else 2 * math.pi / (n + m + 2)
    return base + epsilon


def sharp_sufficient_counterexample(n: int, m: int, epsilon: float, literal: bool = False) -> Polynomial:
    """``(z+1)^m (z^2+1)^{r1} (z^4 + 2 cos(theta) z^2 + 1)^{r2}`` with the quartic just outside.

    ``r1 = (n-m)/2 - 2 floor((n-m)/4)``, ``r2 = floor((n-m)/4)``.  For
    ``n - m = 4`` the finite Hurwitz matrix is not TN for every ``epsilon > 0``.
    For ``n - m >= 6`` the extra factors can pull ``g`` back into the PF class
    at small ``epsilon`` (e.g. ``n=6, m=0, epsilon=0.01`` is still TN), so the
    result is only a candidate and callers should test it.
    """
    if epsilon <= 0:
        raise PreconditionFailed("epsilon must be positive")
    if m < 0 or n - m < 4 or (n - m) % 2:
        raise PreconditionFailed("need m >= 0 and n-m even and >= 4")
    r2 = (n - m) // 4
    r1 = (n - m) // 2 - 2 * r2
    theta = sufficient_counterexample_angle(n, m, epsilon, literal)
    quartic = Polynomial([1.0, 0.0, 2 * math.cos(theta), 0.0, 1.0])
    factors = [Polynomial([1, 1])] * m + [Polynomial([1, 0, 1])] * r1 + [quartic] * r2
    return product(factors)
