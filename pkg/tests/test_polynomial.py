import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hurwitz_tn.errors import DegreeTooSmall, GcdUnreliable, PreconditionFailed
from hurwitz_tn.polynomial import (
    Backend,
    Polynomial,
    associated_function_poles,
    find_roots,
    gcd_even_odd,
    kleptsyn_sufficient,
    kleptsyn_sum,
    poly_gcd,
    r_function_criterion,
    split_even_odd,
    square_free_factors,
)

import _gen

ints = st.integers(min_value=-9, max_value=9)
coeff_lists = st.lists(ints, min_size=2, max_size=8).filter(lambda c: c[0] != 0)


# -- construction ------------------------------------------------------------------


def test_backend_inference():
    assert Polynomial([1, 2, 3]).backend is Backend.EXACT
    assert Polynomial(["1/2", "3"]).backend is Backend.EXACT
    assert Polynomial([1, 0.5]).backend is Backend.FLOAT
    assert Polynomial(["1", "2.5"]).backend is Backend.FLOAT
    assert Polynomial(["1e-3", "1"]).backend is Backend.FLOAT


def test_leading_zeros_stripped_and_zero_polynomial():
    p = Polynomial([0, 0, 1, 2])
    assert p.coeffs == (1, 2) and p.degree == 1
    z = Polynomial([0, 0])
    assert z.is_zero and z.degree == -1


def test_immutable():
    p = Polynomial([1, 1])
    with pytest.raises(AttributeError):
        p.coeffs = (2,)


def test_coeff_padding_and_evaluation():
    p = Polynomial([1, 0, 198, 0, 10201])
    assert p.coeff(0) == 1 and p.coeff(2) == 198 and p.coeff(7) == 0
    assert p(Fraction(1)) == 10400
    assert abs(p(1 + 10j)) < 1e-9


def test_of_square():
    assert Polynomial([1, 198, 10201]).of_square() == Polynomial([1, 0, 198, 0, 10201])


def test_pretty():
    assert str(Polynomial([1, 0, 198, 0, 10201])) == "z^4 + 198 z^2 + 10201"
    assert Polynomial([1, -1]).pretty("u") == "u - 1"


@given(coeff_lists, coeff_lists)
def test_exact_division_roundtrip(a, b):
    pa, pb = Polynomial(a), Polynomial(b)
    q, r = divmod(pa * pb + Polynomial([1]), pb)
    assert q * pb + r == pa * pb + Polynomial([1])
    assert r.degree < pb.degree


# -- even / odd parts ------------------------------------------------------------------


@pytest.mark.parametrize("coeffs, p0, p1", [
    ([1, 0, 198, 0, 10201], [1, 198, 10201], [0]),
    ([1, 1], [1], [1]),
    ([1, 1, 0, 0, 1, 1], [1, 0, 1], [1, 0, 1]),
])
def test_split_even_odd_examples(coeffs, p0, p1):
    parts = split_even_odd(Polynomial(coeffs))
    assert parts.p0 == Polynomial(p0)
    assert parts.p1 == Polynomial(p1)


def test_split_constant_rejected():
    with pytest.raises(DegreeTooSmall):
        split_even_odd(Polynomial([3]))


@given(st.lists(ints, min_size=2, max_size=11).filter(lambda c: c[0] != 0))
def test_split_identities(c):
    p = Polynomial(c)
    parts = split_even_odd(p)
    assert parts.recombine() == p
    minus = Polynomial([(-1) ** (p.degree - k) * a for k, a in enumerate(p.coeffs)])  # p(-z)
    z = Polynomial([1, 0])
    assert (p + minus).scaled(Fraction(1, 2)) == parts.p0.of_square()
    assert (p - minus).scaled(Fraction(1, 2)) == z * parts.p1.of_square()


def test_float_split_recombines():
    rng = np.random.default_rng(3)
    for _ in range(50):
        c = rng.normal(size=rng.integers(2, 11))
        c[0] = 1.0
        p = Polynomial(c.tolist())
        assert split_even_odd(p).recombine().allclose(p, 1e-10)


# -- gcd ---------------------------------------------------------------------------


@pytest.mark.parametrize("coeffs, expected", [
    ([1, 0, 198, 0, 10201], [1, 198, 10201]),
    ([1, 1, 0, 0, 1, 1], [1, 0, 1]),
])
def test_gcd_examples(coeffs, expected):
    assert gcd_even_odd(split_even_odd(Polynomial(coeffs))) == Polynomial(expected)


def test_gcd_hand_euclid():
    a = Polynomial([1, 3, 2])   # (u+1)(u+2)
    b = Polynomial([1, 4, 3])   # (u+1)(u+3)
    assert poly_gcd(a, b) == Polynomial([1, 1])


def test_gcd_random_common_factor_exact():
    rng = random.Random(11)
    for _ in range(40):
        g = _gen.negative_root_poly(rng, rng.randint(0, 3))
        h0 = Polynomial([1, rng.randint(-5, 5), rng.randint(1, 6)])
        h1 = Polynomial([rng.randint(1, 4), rng.randint(-5, 5)])
        if poly_gcd(h0, h1).degree > 0:
            continue
        got = poly_gcd(g * h0, g * h1)
        assert got == g.monic()


def test_gcd_float_recovers_factor():
    p = Polynomial([1.0, 1.0, 1.0, 1.0])  # (z+1)(z^2+1)
    g = gcd_even_odd(split_even_odd(p))
    assert g.allclose(Polynomial([1.0, 1.0]), 1e-9)


def test_gcd_float_with_pinned_degree_rejects_bad_residual():
    parts = split_even_odd(Polynomial([1.0, 2.0, 3.0, 5.0]))  # coprime parts
    with pytest.raises(GcdUnreliable):
        gcd_even_odd(parts, degree=1)


# -- roots -------------------------------------------------------------------------


def _close_multiset(got, expected, tol):
    got = sorted(got, key=lambda z: (round(z.real, 6), round(z.imag, 6)))
    expected = sorted(expected, key=lambda z: (round(z.real, 6), round(z.imag, 6)))
    return len(got) == len(expected) and all(abs(a - b) <= tol for a, b in zip(got, expected))


def test_roots_examples():
    assert _close_multiset(find_roots(Polynomial([1, 0, 1])).values(), [1j, -1j], 1e-12)
    asner = find_roots(Polynomial([1, 0, 198, 0, 10201])).values()
    assert _close_multiset(asner, [1 + 10j, 1 - 10j, -1 + 10j, -1 - 10j], 1e-9)
    triple = find_roots(Polynomial([1, 3, 3, 1]))
    assert len(triple) == 1 and triple.roots[0][1] == 3 and abs(triple.roots[0][0] + 1) < 1e-12


def test_float_triple_root_clusters():
    rs = find_roots(Polynomial([1.0, 3.0, 3.0, 1.0]))
    assert [m for _, m in rs] == [3]
    assert abs(rs.roots[0][0] + 1) < 1e-6


def test_roots_at_origin_deflated():
    rs = find_roots(Polynomial([1, 1, 0, 0]))
    assert dict((complex(z), m) for z, m in rs)[0j] == 2


def test_constant_has_no_roots():
    with pytest.raises(DegreeTooSmall):
        find_roots(Polynomial([5]))


def test_square_free_factors():
    p = Polynomial([1, 1]) ** 3 * Polynomial([1, 0, 1]) * Polynomial([1, 2])
    fac = {m: f for f, m in square_free_factors(p)}
    assert fac[3] == Polynomial([1, 1])
    assert fac[1] == Polynomial([1, 0, 1]) * Polynomial([1, 2])


def test_roots_reconstruct_random():
    rng = random.Random(5)
    for _ in range(60):
        p, roots = _gen.stable_poly(rng, rng.randint(1, 8))
        rs = find_roots(p.to_float())
        rebuilt = Polynomial.from_roots(rs.values())
        assert rebuilt.allclose(p.to_float(), 1e-7)
        # conjugate symmetry
        vals = rs.values()
        assert _close_multiset(vals, [z.conjugate() for z in vals], 1e-9)
        assert rs.residual_bound < 1e-10


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6))
def test_roots_integer_zeros(zs):
    p = Polynomial([1])
    for z in zs:
        p = p * Polynomial([1, -z])
    got = find_roots(p)
    assert got.degree == len(zs)
    assert _close_multiset(got.values(), [complex(z) for z in zs], 1e-9)


# -- associated function and the R-function test -------------------------------------


def test_poles_quadratic():
    poles = associated_function_poles(split_even_odd(Polynomial([1, 3, 2])))
    assert len(poles) == 1
    assert abs(poles[0].location + 2) < 1e-12 and poles[0].residue_sign == 1
    assert abs(poles[0].residue - 3) < 1e-12


def test_poles_zero_numerator():
    assert associated_function_poles(split_even_odd(Polynomial([1, 0, -1]))) == []
    assert not r_function_criterion(Polynomial([1, 0, -1]))


def test_poles_cubic():
    poles = associated_function_poles(split_even_odd(Polynomial([1, 2, 2, 1])))
    assert len(poles) == 1
    assert abs(poles[0].location + 0.5) < 1e-12
    assert abs(poles[0].residue - 0.75) < 1e-12 and poles[0].residue_sign == 1


def test_r_function_forward_direction():
    rng = random.Random(21)
    for _ in range(60):
        p, _ = _gen.stable_poly(rng, rng.randint(1, 8))
        assert r_function_criterion(p)


def test_r_function_rejects_unstable():
    rng = random.Random(22)
    rejected = 0
    for _ in range(60):
        p, _ = _gen.unstable_poly(rng, rng.randint(1, 8))
        rejected += not r_function_criterion(p)
    assert rejected == 60


# -- ratio-sum sufficient test -----------------------------------------------------


@pytest.mark.parametrize("coeffs, total, verdict", [
    ([1, 10, 10, 1], Fraction(1, 100), True),
    ([1, 1, 1, 1], Fraction(1), False),
    ([1, 3, 3, 1], Fraction(1, 9), True),
])
def test_kleptsyn_examples(coeffs, total, verdict):
    p = Polynomial(coeffs)
    assert kleptsyn_sum(p) == total
    assert kleptsyn_sufficient(p) is verdict


def test_kleptsyn_preconditions():
    with pytest.raises(PreconditionFailed):
        kleptsyn_sum(Polynomial([1, -1, 1, 1]))
    with pytest.raises(PreconditionFailed):
        kleptsyn_sum(Polynomial([1, 1]))


def test_kleptsyn_implies_stable():
    from hurwitz_tn.classification import classify

    rng = random.Random(8)
    hits = 0
    for _ in range(200):
        n = rng.randint(3, 8)
        p = Polynomial([1] + [_gen.pos(rng, 30) for _ in range(n)])
        if kleptsyn_sufficient(p):
            hits += 1
            assert classify(p).stability_class == "Stable"
    assert hits > 10
