"""Polynomial zeros by Aberth-Ehrlich simultaneous iteration.

Exact polynomials are first split into square-free factors (Yun's algorithm)
so multiplicities are exact; float polynomials are rooted directly and
near-coincident zeros are merged into clusters.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DegreeTooSmall, PreconditionFailed, RootFindingFailed
from .core import Polynomial, exact_divide, poly_gcd

MAX_ITER = 500
STEP_TOL = 1e-13
CLUSTER_TOL = 1e-6
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class RootSet:
    """Zeros of a polynomial as ``(value, multiplicity)`` pairs.

    ``residual_bound`` is ``max |p(z)| / sum |a_k| |z|^(n-k)`` over the
    distinct zeros, i.e. a backward-error style residual.
    """

    roots: tuple
    residual_bound: float

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.roots)

    def values(self) -> list:
        """Zeros repeated according to multiplicity."""
        out = []
        for z, m in self.roots:
            out.extend([z] * m)
        return out

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)


def _initial_guesses(c: np.ndarray, rng=None) -> np.ndarray:
    n = len(c) - 1
    a = c / c[0]
    center = -a[1] / n
    # Fujiwara bound on the root moduli, taken about the centroid
    shifted = np.poly1d(a)(np.poly1d([1.0, center]))
    b = np.asarray(shifted.coeffs, dtype=complex)
    if len(b) < n + 1:
        b = np.concatenate([np.zeros(n + 1 - len(b)), b])
    tail = np.abs(b[1:]) ** (1.0 / np.arange(1, n + 1))
    radius = 2.0 * np.max(tail) if n else 1.0
    radius = radius if radius > 0 else 1.0
    angles = 2 * np.pi * np.arange(n) / n + 0.4
    if rng is not None:
        angles = angles + rng.uniform(0, 2 * np.pi)
        radius *= rng.uniform(0.5, 1.5)
    return center + radius * np.exp(1j * angles)


def _aberth(c: np.ndarray, max_iter: int, rng=None) -> tuple[np.ndarray, bool]:
    n = len(c) - 1
    dc = np.polyder(c)
    absc = np.abs(c)
    z = _initial_guesses(c, rng)
    active = np.ones(n, dtype=bool)
    for _ in range(max_iter):
        pv = np.polyval(c, z)
        scale = np.polyval(absc, np.abs(z))
        done = np.abs(pv) <= 4 * n * _EPS * scale
        active &= ~done
        if not active.any():
            return z, True
        dp = np.polyval(dc, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        sums = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pv / dp
            step = ratio / (1.0 - ratio * sums)
        bad = ~np.isfinite(step)
        step[bad] = 1e-3 * (1 + np.abs(z[bad]))
        step[~active] = 0.0
        z = z - step
        small = np.abs(step) <= STEP_TOL * np.maximum(np.abs(z), 1e-300)
        active &= ~small
        if not active.any():
            return z, True
    return z, False


def _roots_simple(c: np.ndarray, max_iter: int, seed: int) -> np.ndarray:
    n = len(c) - 1
    if n == 0:
        return np.zeros(0, dtype=complex)
    if n == 1:
        return np.array([-c[1] / c[0]], dtype=complex)
    z, ok = _aberth(c, max_iter)
    rng = np.random.default_rng(seed)
    attempts = 0
    while not ok and attempts < 3:
        z, ok = _aberth(c, max_iter, rng)
        attempts += 1
    if not ok:
        raise RootFindingFailed(f"Aberth iteration did not converge in {max_iter} steps", best=z)
    return z


def _inclusion_radii(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Newton inclusion radii ``n |p(z) / p'(z)|``; each disk holds a true zero."""
    n = len(c) - 1
    with np.errstate(divide="ignore", invalid="ignore"):
        r = n * np.abs(np.polyval(c, z) / np.polyval(np.polyder(c), z))
    r[~np.isfinite(r)] = 0.0
    return r


def _cluster(z: np.ndarray, tol: float, radii=None) -> list[tuple[complex, int, float]]:
    n = len(z)
    parent = list(range(n))
    if radii is None:
        radii = np.zeros(n)

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            reach = max(tol * max(1.0, abs(z[i])), radii[i] + radii[j])
            if abs(z[i] - z[j]) <= reach:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return [(complex(np.mean(z[idx])), len(idx), float(np.max(radii[idx]))) for idx in groups.values()]


def _refine_cluster(c: np.ndarray, z0: complex, k: int) -> complex:
    """Newton on the (k-1)-th derivative, where a k-fold zero is simple."""
    f = c
    for _ in range(k - 1):
        f = np.polyder(f)
    df = np.polyder(f)
    z = z0
    last = np.inf
    for _ in range(50):
        d = np.polyval(df, z)
        if d == 0:
            break
        step = np.polyval(f, z) / d
        if not np.isfinite(step) or abs(step) >= last:
            break
        z = z - step
        last = abs(step)
        if last <= _EPS * max(1.0, abs(z)):
            break
    return complex(z) if abs(z - z0) < 1e-2 * max(1.0, abs(z0)) else z0


def _symmetrize(pairs: list[tuple[complex, int]], tol: float, radii=None) -> list[tuple[complex, int]]:
    """Snap near-real zeros to the axis and make conjugates exact mirrors.

    A zero is taken as real when its imaginary part is below ``tol`` relative
    or inside its Newton inclusion radius (``radii``, aligned with ``pairs``).
    """
    out = []
    upper = []
    lower = []
    radii = [0.0] * len(pairs) if radii is None else radii
    for (z, m), rad in zip(pairs, radii):
        if abs(z.imag) <= max(tol * max(1.0, abs(z)), rad):
            out.append((complex(z.real, 0.0), m))
        elif z.imag > 0:
            upper.append((z, m))
        else:
            lower.append((z, m))
    used = [False] * len(lower)
    for z, m in upper:
        best, best_d = None, np.inf
        for k, (w, mw) in enumerate(lower):
            if not used[k] and mw == m and abs(w - z.conjugate()) < best_d:
                best, best_d = k, abs(w - z.conjugate())
        if best is None:
            raise RootFindingFailed("zeros of a real polynomial failed conjugate pairing")
        used[best] = True
        w = lower[best][0]
        avg = complex((z.real + w.real) / 2, (z.imag - w.imag) / 2)
        out.append((avg, m))
        out.append((avg.conjugate(), m))
    if not all(used):
        raise RootFindingFailed("zeros of a real polynomial failed conjugate pairing")
    return out


def square_free_factors(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's decomposition ``p = c * prod f_i**i`` for exact ``p``."""
    if p.degree < 1:
        return []
    a = p.monic()
    b = a.derivative()
    c = poly_gcd(a, b)
    w = exact_divide(a, c)
    y = exact_divide(b, c)
    z = y - w.derivative()
    out = []
    i = 1
    while w.degree > 0:
        g = poly_gcd(w, z) if not z.is_zero else w.monic()
        if g.degree > 0:
            out.append((g, i))
        w = exact_divide(w, g)
        y = exact_divide(z, g)
        z = y - w.derivative()
        i += 1
    return out


def _sort_key(zm):
    z, _ = zm
    return (round(z.real, 12), round(z.imag, 12))


def find_roots(p: Polynomial, *, cluster_tol: float = CLUSTER_TOL,
               max_iter: int = MAX_ITER, seed: int = 0) -> RootSet:
    """All complex zeros of ``p`` with multiplicities.

    Raises
    ------
    DegreeTooSmall
        For constants and the zero polynomial.
    RootFindingFailed
        When the iteration does not converge after random restarts.
    """
    if p.degree < 1:
        raise DegreeTooSmall("root finding needs degree >= 1")
    if p.degree > 64:
        raise PreconditionFailed("root finding is limited to degree 64")
    core, k0 = p.deflate_origin()
    pairs: list[tuple[complex, int]] = []
    if k0:
        pairs.append((0j, k0))
    if core.degree >= 1:
        if core.is_exact:
            for factor, mult in square_free_factors(core):
                c = factor.to_float().as_array()
                z = _roots_simple(c, max_iter, seed)
                pairs.extend(_symmetrize([(complex(v), mult) for v in z], 1e-12,
                                         list(_inclusion_radii(c, z))))
        else:
            c = core.as_array()
            z = _roots_simple(c, max_iter, seed)
            groups = _cluster(z, cluster_tol, _inclusion_radii(c, z))
            clusters = [(_refine_cluster(c, w, m) if m > 1 else w, m) for w, m, _ in groups]
            pairs.extend(_symmetrize(clusters, 1e-12, [rad for _, _, rad in groups]))
    pairs.sort(key=_sort_key)
    c = p.as_array()
    absc = np.abs(c)
    resid = 0.0
    for z, _ in pairs:
        scale = np.polyval(absc, abs(z))
        if scale > 0:
            resid = max(resid, abs(np.polyval(c, z)) / scale)
    return RootSet(tuple(pairs), float(resid))
