import cmath
import math
import random
from fractions import Fraction

import pytest

from hurwitz_tn.errors import PreconditionFailed
from hurwitz_tn.hurwitz_matrices import toeplitz_of
from hurwitz_tn.polya_frequency import (
    ALL_ORDERS,
    ORDER_R,
    is_pf_r,
    pf_boundary_quadratic,
    schoenberg_sharp_polynomial,
)
from hurwitz_tn.polynomial import Polynomial, find_roots
from hurwitz_tn.tnn_checker import is_totally_nonnegative

import _gen

P = Polynomial


def _pair(rho, c):
    """Zeros ``rho * (-c +- i sqrt(1-c^2))``, i.e. ``u^2 + 2 rho c u + rho^2``."""
    return P([1, 2 * rho * c, rho * rho])


# -- examples ------------------------------------------------------------------


@pytest.mark.parametrize("l", [1, 2, 3, 5])
@pytest.mark.parametrize("r", [1, 2, 4])
def test_negative_root_binomial(l, r):
    g = P([1, 1]) ** l
    assert is_pf_r(g, r).verdict
    assert is_pf_r(g, r, mode="all").verdict


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_theta_boundary_float(k):
    edge = math.pi / (k + 1)
    assert is_pf_r(pf_boundary_quadratic(edge), k)
    assert not is_pf_r(pf_boundary_quadratic(edge + 0.01), k)


def test_theta_boundary_flip_k3_tight():
    edge = math.pi / 4
    assert is_pf_r(pf_boundary_quadratic(edge - 1e-9), 3)
    assert is_pf_r(pf_boundary_quadratic(edge), 3)
    assert not is_pf_r(pf_boundary_quadratic(edge + 1e-9), 3)


def test_theta_boundary_exact_k2():
    # theta = pi/3 has cos = 1/2, so the boundary quadratic is rational
    assert is_pf_r(P([1, 1, 1]), 2)
    assert not is_pf_r(P([1, 1, 1]), 3)
    assert not is_pf_r(P([1, Fraction(99, 100), 1]), 2)


def test_asner_g_is_pf2():
    rep = is_pf_r(P([1, 198, 10201]), 2)
    assert rep.verdict and rep.reduction_used == ORDER_R and rep.witness is None


def test_witness_present_on_failure():
    rep = is_pf_r(P([1, 0, 1]), 2)
    assert not rep.verdict and rep.witness is not None and rep.witness.value < 0
    rep = is_pf_r(P([1, 0, 1]), 2, mode="all")
    assert not rep.verdict and rep.reduction_used == ALL_ORDERS
    assert rep.witness.value < 0


def test_preconditions():
    with pytest.raises(PreconditionFailed):
        is_pf_r(P([0]), 2)
    with pytest.raises(PreconditionFailed):
        is_pf_r(P([1, 1]), 0)
    with pytest.raises(PreconditionFailed):
        is_pf_r(P([1, 1]), 2, mode="fast")


def test_negative_leading_rejected_by_order_r():
    assert not is_pf_r(P([-1, -1]), 1)
    assert not is_pf_r(P([-1, -1]), 1, mode="all")


# -- sharp polynomials -----------------------------------------------------------


def test_sharp_examples():
    assert schoenberg_sharp_polynomial(1, 5) == P([1, 1])
    assert schoenberg_sharp_polynomial(2, 2) == P([1, 1, 1])
    g = schoenberg_sharp_polynomial(3, 2)
    assert all(isinstance(c, (int, float, Fraction)) for c in g.coeffs)
    assert g.to_float().allclose(P([1.0, 1.0, 1.0, 1.0]), 1e-12)


@pytest.mark.parametrize("r", [2, 3, 4, 5])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_sharp_is_pf_k_not_k_plus_1(r, k):
    g = schoenberg_sharp_polynomial(r, k)
    assert is_pf_r(g, k)
    assert not is_pf_r(g, k + 1)
    theta = math.pi / (r + k - 1)
    target = -cmath.exp(1j * theta * (r - 1))
    assert min(abs(z - target) for z in find_roots(g.to_float()).values()) < 1e-8


def test_sharp_preconditions():
    with pytest.raises(PreconditionFailed):
        schoenberg_sharp_polynomial(0, 1)


# -- negative zeros <=> TN Toeplitz --------------------------------------------------


def _random_g_with_nonneg_re_zero(rng):
    """Degree <= 4, ``g(0) != 0``, at least one zero in the closed right half-plane."""
    if rng.random() < 0.5:
        bad = P([1, -_gen.pos(rng, 6)])
    else:
        bad = _pair(_gen.pos(rng), -_gen.rat(rng, 0, 4, den=4) / 4)
    rest = _gen.negative_root_poly(rng, rng.randint(0, 4 - bad.degree))
    return bad * rest


def test_negative_zeros_iff_tn_toeplitz():
    rng = random.Random(41)
    for _ in range(30):
        g = _gen.negative_root_poly(rng, rng.randint(1, 4))
        assert is_totally_nonnegative(toeplitz_of(g, g.degree + rng.randint(1, 6))).is_tn
    for _ in range(30):
        g = _random_g_with_nonneg_re_zero(rng)
        assert not is_totally_nonnegative(toeplitz_of(g, g.degree + 6)).is_tn, g


# -- PF_k forbids zeros in a sector about the positive axis -------------------------


def _random_mixed_g(rng):
    g = P([1])
    while g.degree < rng.randint(1, 4):
        if g.degree <= 2 and rng.random() < 0.7:
            c = Fraction(rng.randint(-10, 10), 10)
            g = g * _pair(_gen.pos(rng), c)
        else:
            g = g * P([1, _gen.pos(rng)])
    return g


def test_pf_forbids_sector_zeros():
    rng = random.Random(42)
    checked = 0
    while checked < 100:
        g = _random_mixed_g(rng)
        k = rng.randint(1, 4)
        if not is_pf_r(g, k):
            continue
        checked += 1
        sector = math.pi * k / (g.degree + k - 1)
        for z in find_roots(g.to_float()).values():
            assert abs(cmath.phase(z)) >= sector - 1e-8


# -- zeros near the negative axis => PF_k -------------------------------------------


def test_zeros_near_negative_axis_give_pf():
    rng = random.Random(43)
    for _ in range(60):
        k = rng.randint(1, 4)
        cmin = math.cos(math.pi / (k + 1))
        g = P([1])
        for _ in range(rng.randint(1, 2)):
            c = Fraction(rng.randint(math.ceil(cmin * 100), 100), 100)
            g = g * _pair(_gen.pos(rng), c)
        g = g * _gen.negative_root_poly(rng, rng.randint(0, 1))
        assert is_pf_r(g, k), (g, k)


# -- order-r reduction ----------------------------------------------------------------


def test_order_r_agrees_with_all_orders():
    rng = random.Random(44)
    verdicts = set()
    for _ in range(100):
        g = _random_mixed_g(rng)
        r = rng.randint(1, 5)
        a = is_pf_r(g, r).verdict
        b = is_pf_r(g, r, mode="all").verdict
        assert a == b, (g, r)
        verdicts.add(a)
    assert verdicts == {True, False}
