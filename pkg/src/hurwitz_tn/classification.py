"""Stability / quasi-stability classification through four independent routes.

Route ``roots`` locates the zeros directly and is taken as ground truth.
Routes ``delta``, ``eta`` and ``finite_tnn`` are minor-based criteria; each
one's verdict is recorded next to the ground truth and any disagreement is
reported in ``discrepancies`` rather than resolved.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _linalg
from .errors import CapExceeded, FactorizationFailed, GcdUnreliable, PreconditionFailed, RootFindingFailed
from .hurwitz_matrices import finite_hurwitz
from .polynomial import (
    DEFAULT_TOL,
    Polynomial,
    RootSet,
    divide_checked,
    find_roots,
    gcd_even_odd,
    split_even_odd,
)
from .tnn_checker import (
    DEFAULT_CAP,
    MinorSequence,
    TnnReport,
    eta_minors,
    hurwitz_minors,
    is_totally_nonnegative,
    stability_index_from_minors,
)

#: A zero counts as lying on the imaginary axis when |Re z| <= AXIS_TOL * (1 + |z|).
AXIS_TOL = 1e-8
#: A zero of g(u) counts as "negative" when real within this band and below -NEG_TOL.
NEG_TOL = 1e-9

STABLE = "Stable"
NOT_QUASI_STABLE = "NotQuasiStable"
UNAVAILABLE = "Unavailable"
INCONCLUSIVE = "Inconclusive"


def quasi_stable(m: int) -> str:
    return f"QuasiStable({m})"


def finite_tnn_only(m: int) -> str:
    return f"FiniteTnnOnly({m})"


def _verdict_index(verdict: str, n: int) -> int | None:
    if verdict == STABLE:
        return n
    if verdict.startswith(("QuasiStable(", "FiniteTnnOnly(")):
        return int(verdict[verdict.index("(") + 1:-1])
    return None


@dataclass(frozen=True)
class ClassificationReport:
    stability_class: str
    stability_index: int | None
    degeneracy_index: int | None
    delta: MinorSequence
    eta: MinorSequence
    factor_q: Polynomial | None
    factor_g: Polynomial | None
    criteria_agreement: dict
    discrepancies: tuple
    roots: RootSet | None
    finite_tnn: bool | None
    tnn_report: TnnReport | None
    rank: int
    warnings: tuple = field(default=())

    @property
    def is_stable(self) -> bool:
        return self.stability_class == STABLE

    @property
    def is_quasi_stable(self) -> bool:
        return self.stability_class == STABLE or self.stability_class.startswith("QuasiStable(")


# -- helpers --------------------------------------------------------------------


def root_location_verdict(roots: RootSet, n: int, axis_tol: float = AXIS_TOL) -> str:
    on_axis = 0
    for z, mult in roots:
        band = axis_tol * (1 + abs(z))
        if z.real > band:
            return NOT_QUASI_STABLE
        if abs(z.real) <= band:
            on_axis += mult
    return STABLE if on_axis == 0 else quasi_stable(n - on_axis)


def has_only_negative_zeros(g: Polynomial, tol: float = NEG_TOL) -> bool:
    """True when every zero of ``g`` is real and strictly negative (vacuous for constants)."""
    if g.degree < 1:
        return True
    for z, _ in find_roots(g):
        scale = 1 + abs(z)
        if abs(z.imag) > tol * scale or z.real >= -tol * scale:
            return False
    return True


def factor_quasistable(p: Polynomial, tol: float = DEFAULT_TOL) -> tuple[Polynomial, Polynomial]:
    """Split ``p(z) = q(z) g(z^2)`` with ``g = gcd(p0, p1)`` monic.

    Raises
    ------
    FactorizationFailed
        When the division of ``p`` by ``g(z^2)`` leaves a residual above tolerance
        or the float gcd cannot be recovered.
    """
    if p.degree < 1:
        raise PreconditionFailed("factorization needs degree >= 1")
    parts = split_even_odd(p)
    try:
        g = gcd_even_odd(parts, tol=tol)
    except GcdUnreliable as exc:
        raise FactorizationFailed(str(exc)) from exc
    q, resid = divide_checked(p, g.of_square(), tol)
    if resid > np.sqrt(tol):
        raise FactorizationFailed(f"division residual {resid:.3g} above tolerance")
    return q, g


def check_reflection_property(p: Polynomial, roots: RootSet | None = None,
                              tol: float = AXIS_TOL, match_tol: float = 1e-6) -> bool:
    """Every zero with positive real part has its negative as a zero of at least equal multiplicity."""
    roots = find_roots(p) if roots is None else roots
    pairs = list(roots)
    for z, mult in pairs:
        if z.real <= tol * (1 + abs(z)):
            continue
        partner = sum(m for w, m in pairs if abs(w + z) <= match_tol * (1 + abs(z)))
        if partner < mult:
            return False
    return True


def _eta_pattern(eta: MinorSequence) -> int | None:
    """``m`` with ``eta_1..eta_{m+1} > 0`` and ``eta_{m+2}, ... = 0``."""
    signs = eta.signs()
    k = 0
    while k < len(signs) and signs[k] == 1:
        k += 1
    if k == 0 or any(s != 0 for s in signs[k:]):
        return None
    return k - 1


def _conflicts(ground: str, other: str, n: int) -> bool:
    if ground in (UNAVAILABLE, INCONCLUSIVE) or other in (UNAVAILABLE, INCONCLUSIVE):
        return False
    if other.startswith("FiniteTnnOnly("):
        gi = _verdict_index(ground, n)
        return gi is not None and gi != _verdict_index(other, n)
    return ground != other


# -- main entry point -------------------------------------------------------------


def classify(p: Polynomial, tol: float = DEFAULT_TOL, cap: int = DEFAULT_CAP) -> ClassificationReport:
    """Classify ``p`` as stable, quasi-stable with index ``m``, or neither."""
    if p.degree < 1:
        raise PreconditionFailed("classification needs degree >= 1")
    if p.leading <= 0:
        raise PreconditionFailed("leading coefficient a_0 must be positive")
    n = p.degree
    warnings = []
    core, k0 = p.deflate_origin()
    if k0:
        warnings.append(f"a_n = 0: factored out z^{k0}; minor routes run on the deflated polynomial")
    nc = core.degree

    # (a) root location
    try:
        roots = find_roots(p)
        v_roots = root_location_verdict(roots, n)
    except RootFindingFailed as exc:
        roots = None
        v_roots = UNAVAILABLE
        warnings.append(f"root route unavailable: {exc}")

    def lift(m: int) -> str:
        return STABLE if m == n else quasi_stable(m)

    # (b) Hurwitz determinants + gcd with negative zeros
    H = finite_hurwitz(p)
    delta = hurwitz_minors(p, tol)
    g_core = None
    if nc >= 1:
        delta_core = hurwitz_minors(core, tol)
        m_b = stability_index_from_minors(delta_core)
        try:
            g_core = gcd_even_odd(split_even_odd(core), tol=tol)
        except GcdUnreliable as exc:
            warnings.append(f"gcd unavailable: {exc}")
        if g_core is None:
            v_delta = UNAVAILABLE
        elif m_b is None or not has_only_negative_zeros(g_core):
            v_delta = NOT_QUASI_STABLE
        else:
            v_delta = lift(m_b)
    else:
        m_b = 0
        v_delta = lift(0)

    # (c) eta minors of the infinite Hurwitz matrix on a window that forces the tail
    depth = n + 2 * (g_core.degree if g_core is not None else n // 2) + 2
    eta = eta_minors(p, depth, tol)
    if nc >= 1:
        eta_core = eta_minors(core, nc + 2 * (g_core.degree if g_core is not None else nc // 2) + 2, tol)
        m_c = _eta_pattern(eta_core)
        if g_core is None:
            v_eta = UNAVAILABLE
        elif m_c is None or not has_only_negative_zeros(g_core):
            v_eta = NOT_QUASI_STABLE
        else:
            v_eta = lift(m_c)
    else:
        v_eta = lift(0)

    # (d) total nonnegativity of the finite Hurwitz matrix
    tnn = None
    finite_tnn = None
    try:
        tnn = is_totally_nonnegative(H, tol=tol, cap=cap)
        finite_tnn = tnn.is_tn
    except CapExceeded as exc:
        warnings.append(str(exc))
    if nc >= 1:
        try:
            tnn_core = is_totally_nonnegative(finite_hurwitz(core), tol=tol, cap=cap)
        except CapExceeded:
            tnn_core = None
        if tnn_core is None:
            v_tnn = UNAVAILABLE
        elif not tnn_core.is_tn:
            v_tnn = NOT_QUASI_STABLE
        elif m_b is None:
            v_tnn = INCONCLUSIVE
        elif m_b >= nc - 2:
            v_tnn = lift(m_b)
        else:
            v_tnn = finite_tnn_only(m_b)
    else:
        v_tnn = lift(0)

    agreement = {"roots": v_roots, "delta": v_delta, "eta": v_eta, "finite_tnn": v_tnn}
    ground = v_roots
    if ground == UNAVAILABLE:
        ground = v_delta
        warnings.append("verdict taken from the Hurwitz-determinant route")
    discrepancies = tuple(
        name for name, v in agreement.items() if name != "roots" and _conflicts(v_roots, v, n)
    )

    m = _verdict_index(ground, n)
    if m is None or ground.startswith("FiniteTnnOnly("):
        m = m_b
    degeneracy = None if m is None else n - m

    try:
        q, g = factor_quasistable(p, tol)
    except (FactorizationFailed, PreconditionFailed) as exc:
        q = g = None
        warnings.append(f"factorization unavailable: {exc}")

    return ClassificationReport(
        stability_class=ground,
        stability_index=m,
        degeneracy_index=degeneracy,
        delta=delta,
        eta=eta,
        factor_q=q,
        factor_g=g,
        criteria_agreement=agreement,
        discrepancies=discrepancies,
        roots=roots,
        finite_tnn=finite_tnn,
        tnn_report=tnn,
        rank=_linalg.rank(H.entries),
        warnings=tuple(warnings),
    )
