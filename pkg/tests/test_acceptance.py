"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the verdict lines are
repeated in the terminal summary, or shown inline with ``-s``.
"""

import math
import random
import time

from hurwitz_tn.classification import STABLE, classify
from hurwitz_tn.hurwitz_matrices import (
    finite_hurwitz,
    verify_factorization,
    verify_hurwitz_factorization,
)
from hurwitz_tn.polya_frequency import is_pf_r, pf_boundary_quadratic
from hurwitz_tn.polynomial import Polynomial, find_roots
from hurwitz_tn.sector_analysis import (
    check_zero_free_sector,
    necessary_sector_halfangle,
    sharp_necessary_example,
    sharp_sufficient_counterexample,
    sufficient_sector_halfangle,
)
from hurwitz_tn.spectral import rank_of, spectral_analysis
from hurwitz_tn.tnn_checker import eta_minors, hurwitz_minors, is_totally_nonnegative

import _corpus
import _gen
from _acceptance_log import record

P = Polynomial
S2 = math.sqrt(2)

# transcribed displays
H5_DISPLAYED = [
    [1, 0, 1, 0, 0],
    [1, 0, 1, 0, 0],
    [0, 1, 0, 1, 0],
    [0, 1, 0, 1, 0],
    [0, 0, 1, 0, 1],
]
QUINTIC = P([1.0, 2 + S2, S2, 2 + 2 * S2, 1.0, 2 + S2])


def _tn(p):
    return is_totally_nonnegative(finite_hurwitz(p)).is_tn


def test_criterion_01_asner_example():
    t0 = time.perf_counter()
    p = P([1, 0, 198, 0, 10201])
    tnn = is_totally_nonnegative(finite_hurwitz(p))
    rep = classify(p)
    elapsed = time.perf_counter() - t0
    expected = [complex(a, b) for a in (1, -1) for b in (10, -10)]
    got = rep.roots.values()
    root_err = max(min(abs(z - e) for z in got) for e in expected)
    ok = (tnn.verdict == "TotallyNonnegative" and rep.stability_class == "NotQuasiStable"
          and len(got) == 4 and root_err <= 1e-9 and rep.stability_index == 0
          and rep.rank == 2 and elapsed < 1.0)
    record(1, ok, f"TN={tnn.is_tn} class={rep.stability_class} m={rep.stability_index} "
                  f"rank={rep.rank} root_err={root_err:.1e} t={elapsed:.3f}s")
    assert ok


def test_criterion_02_non_tn_quintic():
    t0 = time.perf_counter()
    p = P([1, 1]) * P([1, 0, 0, 0, 1])
    H = finite_hurwitz(p)
    same = H.entries.tolist() == H5_DISPLAYED
    tnn = is_totally_nonnegative(H)
    d = hurwitz_minors(p).values
    elapsed = time.perf_counter() - t0
    w = tnn.witness
    witness_ok = w is not None and w.value < 0 and \
        _gen.brute_det(H.submatrix(list(w.rows), list(w.cols)).entries.tolist()) == w.value
    ok = same and tnn.verdict == "NotTN" and witness_ok and d[0] == 1 and d[1] == 0 and elapsed < 1.0
    record(2, ok, f"H5 matches={same} verdict={tnn.verdict} witness=rows{w.rows} cols{w.cols} "
                  f"value={w.value} Delta1={d[0]} Delta2={d[1]} t={elapsed:.3f}s")
    assert ok


def test_criterion_03_quintic_spectrum():
    t0 = time.perf_counter()
    rep = spectral_analysis(QUINTIC)
    elapsed = time.perf_counter() - t0

    def alg(value):
        return sum(k for z, k in rep.eigenvalues if abs(z - value) <= 1e-8)

    counts = (alg(3 + 3 * S2), alg(2 + S2), alg(0))
    geo_a = rep.p0_eigen.geometric if rep.p0_eigen else None
    ok = (counts == (1, 2, 2) and sum(k for _, k in rep.eigenvalues) == 5 and rep.rank == 3
          and geo_a == 1 and rep.zero_geometric_mult == 2 and elapsed < 1.0)
    record(3, ok, f"alg(3+3r2, 2+r2, 0)={counts} geo(2+r2)={geo_a} "
                  f"geo(0)={rep.zero_geometric_mult} rank={rep.rank} t={elapsed:.3f}s")
    assert ok


def test_criterion_04_hurwitz_equivalence():
    rng = random.Random(404)
    bad = []
    for _ in range(200):
        p, _ = _gen.stable_poly(rng, rng.randint(1, 8))
        rep = classify(p)
        if set(rep.criteria_agreement.values()) != {STABLE} or rep.discrepancies:
            bad.append(("stable", p))
    for _ in range(200):
        p, _ = _gen.unstable_poly(rng, rng.randint(1, 8))
        rep = classify(p)
        if STABLE in rep.criteria_agreement.values() or rep.discrepancies:
            bad.append(("unstable", p))
    ok = not bad
    record(4, ok, f"200 stable + 200 unstable, degree <= 8: {len(bad)} disagreements")
    assert ok, bad[:3]


def _eta_pattern_holds(p, m, l):
    signs = eta_minors(p, p.degree + 2 * l + 2).signs()
    return all(s == 1 for s in signs[:m + 1]) and all(s == 0 for s in signs[m + 1:])


def test_criterion_05_quasi_stability_equivalence():
    rng = random.Random(505)
    fails = []
    forward = backward = 0
    for _ in range(100):
        m, l = rng.randint(0, 4), rng.randint(0, 2)
        if m + l == 0:
            m = 1
        p, _, _ = _gen.quasi_stable_poly(rng, m, l)
        n = p.degree
        d = hurwitz_minors(p).values
        if not (all(v > 0 for v in d[:m]) and all(v == 0 for v in d[m:])):
            fails.append(("delta", p))
        if not _eta_pattern_holds(p, m, l):
            fails.append(("eta", p))
        if n >= 3:
            lhs = _tn(p) and d[n - 3] != 0
            if lhs != (m >= n - 2):
                fails.append(("index >= n-2", p))
            forward += lhs
    for _ in range(100):
        n = rng.randint(3, 7)
        p, _ = _gen.unstable_poly(rng, n)
        d = hurwitz_minors(p).values
        if _tn(p) and d[n - 3] != 0:
            fails.append(("index >= n-2 converse", p))
        backward += 1
    ok = not fails
    record(5, ok, f"100 quasi-stable (exact): Delta/eta patterns and index>=n-2 biconditional; "
                  f"{forward} positive, {backward} non-quasi-stable controls; {len(fails)} failures")
    assert ok, fails[:3]


def test_criterion_06_rank_law():
    rng = random.Random(606)
    fails = 0
    for _ in range(100):
        m = rng.randint(0, 5)
        q, _ = _gen.stable_poly(rng, m)
        g = P([1] + [_gen.rat(rng, -5, 5) for _ in range(rng.randint(1, 3))])
        if g.coeff(g.degree) == 0:
            g = g + P([1])
        p = q * g.of_square()
        fails += rank_of(finite_hurwitz(p)) != (p.degree + m) // 2
    ok = fails == 0
    record(6, ok, f"100 products q*g(z^2): {fails} rank mismatches")
    assert ok


def test_criterion_07_sector_necessity():
    corpus = _corpus.tn_corpus()
    violations = []
    for name, p, m in corpus:
        n = p.degree
        if n < 2:
            continue
        half = math.pi / 2 if m > n - 2 else necessary_sector_halfangle(n, m)
        inside = [z for z in find_roots(p.to_float()).values()
                  if z != 0 and abs(math.atan2(z.imag, z.real)) < half - 1e-8]
        if inside:
            violations.append(name)
    sharp_bad = []
    for n in range(2, 9):
        for m in range(n % 2, n - 1, 2):
            p = sharp_necessary_example(n, m)
            half = necessary_sector_halfangle(n, m)
            v = check_zero_free_sector(p, half)
            on_boundary = sum(k for _, k in v.roots_on_boundary)
            if half >= math.pi / 2:
                # boundary is the imaginary axis: count zeros with Re = 0
                on_boundary = sum(k for z, k in find_roots(p.to_float()) if abs(z.real) < 1e-8)
            if not (_tn(p) and v.ok and on_boundary >= 2):
                sharp_bad.append((n, m))
    ok = not violations and not sharp_bad
    record(7, ok, f"{len(corpus)} TN corpus entries, {len(violations)} sector violations; "
                  f"sharp necessary family n<=8: {len(sharp_bad)} failures")
    assert ok, (violations, sharp_bad)


def _sector_respecting_product(rng):
    from fractions import Fraction

    m = rng.randint(0, 2)
    q, _ = _gen.stable_poly(rng, m)
    lg = rng.randint(2, 3)
    k = (2 * m + 2 * lg) // 2
    cmin = math.cos(math.pi / (k + 1))
    g = P([1])
    while g.degree < lg:
        if lg - g.degree >= 2 and rng.random() < 0.7:
            c = Fraction(rng.randint(math.ceil(cmin * 100), 100), 100)
            rho = _gen.pos(rng)
            g = g * P([1, 2 * rho * c, rho * rho])
        else:
            g = g * P([1, _gen.pos(rng)])
    return q * g.of_square(), m


def test_criterion_08_sector_sufficiency():
    rng = random.Random(808)
    fails = []
    for _ in range(100):
        p, m = _sector_respecting_product(rng)
        n = p.degree
        free = check_zero_free_sector(p, sufficient_sector_halfangle(n, m), angle_tol=1e-7).ok
        d = hurwitz_minors(p).values
        pattern = (m == 0 or d[m - 1] != 0) and d[m] == 0
        if not (free and _tn(p) and pattern):
            fails.append(p)
    counter = {n: _tn(sharp_sufficient_counterexample(n, n - 4, 0.01)) for n in (4, 5, 6)}
    ok = not fails and not any(counter.values())
    record(8, ok, f"100 sector-free reflection products: {len(fails)} failures; "
                  f"counterexamples (n, m=n-4, eps=0.01) TN? {counter}")
    assert ok


def test_criterion_09_pf_machinery():
    k = 3
    edge = math.pi / (k + 1)
    lo, hi = edge - 0.1, edge + 0.1
    assert is_pf_r(pf_boundary_quadratic(lo), k) and not is_pf_r(pf_boundary_quadratic(hi), k)
    while hi - lo > 1e-14:
        mid = (lo + hi) / 2
        if is_pf_r(pf_boundary_quadratic(mid), k):
            lo = mid
        else:
            hi = mid
    flip_err = abs(lo - edge)
    closed = bool(is_pf_r(pf_boundary_quadratic(edge), k))

    rng = random.Random(909)
    disagree = 0
    for _ in range(100):
        g = P([1] + [_gen.rat(rng, -3, 9) for _ in range(rng.randint(1, 4))])
        if g.coeff(g.degree) == 0:
            g = g + P([1])
        r = rng.randint(1, 5)
        disagree += is_pf_r(g, r).verdict != is_pf_r(g, r, mode="all").verdict
    ok = flip_err <= 1e-10 and closed and disagree == 0
    record(9, ok, f"PF_3 flip at theta - pi/4 = {lo - edge:.1e} (closed at boundary: {closed}); "
                  f"order-r vs all-orders disagreements: {disagree}/100")
    assert ok


def test_criterion_10_factorization_identities():
    rng = random.Random(1010)
    fails = rank_fail = rank_checked = 0
    for i in range(100):
        n = rng.randint(1, 5)
        p = P([_gen.pos(rng)] + [_gen.rat(rng, -5, 5) for _ in range(n)])
        dq = rng.randint(0, n) if i % 3 == 0 else rng.choice([n - 1, n])
        q = P([_gen.pos(rng)] + [_gen.rat(rng, -5, 5) for _ in range(dq)])
        g = P([1] + [_gen.rat(rng, -4, 4) for _ in range(rng.randint(0, 3))])
        chk = verify_factorization(p, q, g)
        fails += not (chk.infinite_window and chk.finite)
        rank_fail += chk.rank_claim is False
        rank_checked += chk.rank_claim is not None
        qs, _ = _gen.stable_poly(rng, rng.randint(1, 5))
        fails += not verify_hurwitz_factorization(qs, g)
    ok = fails == 0 and rank_fail == 0 and rank_checked >= 30
    record(10, ok, f"100 random (q, g) pairs (exact): {fails} entrywise failures, "
                   f"{rank_fail}/{rank_checked} rank-claim failures")
    assert ok


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q", "-s"]))
