"""Unit tests for truncated power series and basic hypergeometric expansion."""

import random
from fractions import Fraction

import pytest

from qrs.fps import (PhiSpec, TruncSeries, cauchy_expand, cauchy_series,
                     euler_expand, euler_inv_expand, euler_inv_series,
                     euler_series, phi_series, phi_sum, poch_series,
                     series_inv)
from qrs.qcore import MultiPoly, qfac, qpoch
from qrs.quadrature import qpoch_inf

RNG_SEED = 77103


def rand_series(rng, variables, order, unit=False) -> TruncSeries:
    coeffs = {}
    nvars = len(variables)
    for _ in range(rng.randint(1, 2 * order + 2)):
        idx = tuple(rng.randint(0, order) for _ in range(nvars))
        coeffs[idx] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    if unit:
        coeffs[(0,) * nvars] = Fraction(rng.choice([1, -1, 2, 3]))
    return TruncSeries(variables, order, coeffs)


def brute_mul(f: TruncSeries, g: TruncSeries) -> dict:
    out = {}
    for i1, c1 in f.coeffs.items():
        for i2, c2 in g.coeffs.items():
            idx = tuple(a + b for a, b in zip(i1, i2))
            if sum(idx) <= min(f.order, g.order):
                out[idx] = out.get(idx, Fraction(0)) + c1 * c2
    return {k: v for k, v in out.items() if v}


def test_mul_matches_brute_force_convolution():
    rng = random.Random(RNG_SEED)
    for variables in (("t",), ("s", "t")):
        for _ in range(25):
            f = rand_series(rng, variables, rng.randint(1, 6))
            g = rand_series(rng, variables, f.order)
            assert (f * g).coeffs == brute_mul(f, g)


def test_order_propagates_as_minimum():
    t = TruncSeries.variable(("t",), 7, "t")
    g = (1 + t).truncate(4)
    assert ((1 + t) * g).order == 4
    assert ((1 + t) + g).order == 4


def test_series_inverse_round_trip():
    rng = random.Random(RNG_SEED + 1)
    for variables in (("t",), ("s", "t")):
        for _ in range(15):
            f = rand_series(rng, variables, rng.randint(1, 6), unit=True)
            assert f * series_inv(f) == TruncSeries.one(variables, f.order)


def test_series_inverse_needs_invertible_constant():
    t = TruncSeries.variable(("t",), 4, "t")
    with pytest.raises((ValueError, ZeroDivisionError)):
        series_inv(t)


def test_euler_expansion_frozen_coefficients():
    # (t; q)_oo and 1/(t; q)_oo at q = 1/2, through order 2
    e = euler_expand(1, Fraction(1, 2), 2)
    assert e.coefficient((0,)) == 1
    assert e.coefficient((1,)) == Fraction(-2)
    assert e.coefficient((2,)) == Fraction(4, 3)
    ei = euler_inv_expand(1, Fraction(1, 2), 2)
    assert ei.coefficient((1,)) == Fraction(2)
    assert ei.coefficient((2,)) == Fraction(8, 3)


def test_euler_product_times_inverse_is_one():
    rng = random.Random(RNG_SEED + 2)
    for _ in range(10):
        q = Fraction(rng.randint(1, 5), rng.randint(6, 9))
        order = rng.randint(2, 7)
        z = TruncSeries.variable(("t",), order, "t").scale(
            Fraction(rng.randint(1, 3), rng.randint(1, 3)))
        prod = euler_series(z, q) * euler_inv_series(z, q)
        assert prod == TruncSeries.one(("t",), order)


def test_euler_inverse_functional_equation():
    # 1/(z;q)_oo == 1/(1-z) * 1/(zq;q)_oo
    q = Fraction(2, 5)
    order = 8
    z = TruncSeries.variable(("t",), order, "t")
    lhs = euler_inv_series(z, q)
    rhs = series_inv(TruncSeries.one(("t",), order) - z) \
        * euler_inv_series(z.scale(q), q)
    assert lhs == rhs


def test_cauchy_series_is_quotient_of_euler_products():
    # (az; q)_oo / (z; q)_oo
    q = Fraction(1, 3)
    order = 7
    z = TruncSeries.variable(("t",), order, "t")
    a = Fraction(3, 4)
    lhs = cauchy_series(a, z, q)
    rhs = euler_series(z.scale(a), q) * series_inv(euler_series(z, q))
    assert lhs == rhs


def test_cauchy_expand_q_binomial_theorem_coefficients():
    # sum_n (a;q)_n / (q;q)_n t^n
    q = Fraction(1, 2)
    a = Fraction(1, 5)
    s = cauchy_expand(a, 1, q, 6)
    for n in range(7):
        assert s.coefficient((n,)) == qpoch(a, q, n) / qfac(q, n)


def test_poch_series_finite_product():
    q = Fraction(1, 2)
    order = 6
    t = TruncSeries.variable(("t",), order, "t")
    x = MultiPoly.var("x")
    s = poch_series(t.scale(x), q, 3, ("t",), order)
    expect = TruncSeries.one(("t",), order)
    for k in range(3):
        expect = expect * (TruncSeries.one(("t",), order) - t.scale(x * q ** k))
    assert s == expect


def test_phi_series_one_phi_zero_is_cauchy_kernel():
    # 1phi0(a; -; q, z) = (az;q)_oo / (z;q)_oo
    q = Fraction(1, 3)
    order = 8
    z = TruncSeries.variable(("t",), order, "t")
    a = Fraction(2, 7)
    lhs = phi_series(PhiSpec(upper=(a,), lower=(), q=q, argument=z))
    rhs = cauchy_series(a, z, q)
    assert lhs == rhs


def test_phi_series_matches_direct_pochhammer_sum():
    # 2phi1 with scalar parameters against a hand-rolled term sum
    q = Fraction(2, 5)
    order = 7
    a, b, c = Fraction(1, 2), Fraction(-1, 3), Fraction(1, 7)
    z = TruncSeries.variable(("t",), order, "t")
    got = phi_series(PhiSpec(upper=(a, b), lower=(c,), q=q, argument=z))
    for n in range(order + 1):
        expect = (qpoch(a, q, n) * qpoch(b, q, n)
                  / (qfac(q, n) * qpoch(c, q, n)))
        assert got.coefficient((n,)) == expect


def test_phi_series_ratio_mechanism_matches_plain_parameter():
    # a ratio pair (num, den) with argument pre-divided by den must equal
    # the plain parameter num/den at the true argument
    q = Fraction(1, 2)
    order = 7
    num, den = Fraction(1, 3), Fraction(2, 3)
    other = Fraction(1, 5)
    lower = Fraction(1, 7)
    z = TruncSeries.variable(("t",), order, "t")
    via_ratio = phi_series(PhiSpec(
        upper=(other,), ratio_upper=((num, den),), lower=(lower,),
        q=q, argument=z))
    plain = phi_series(PhiSpec(
        upper=(other, num / den), lower=(lower,),
        q=q, argument=z.scale(den)))
    assert via_ratio == plain


def test_phi_series_ratio_mechanism_zero_denominator():
    # (num/den; q)_j den^j at den=0 degenerates to (-num)^j q^(j(j-1)/2);
    # the engine must stay finite and exact
    q = Fraction(1, 2)
    order = 6
    num = Fraction(1, 4)
    z = TruncSeries.variable(("t",), order, "t")
    got = phi_series(PhiSpec(upper=(), ratio_upper=((num, Fraction(0)),),
                             lower=(), q=q, argument=z))
    for j in range(order + 1):
        expect = (-num) ** j * q ** (j * (j - 1) // 2) / qfac(q, j)
        assert got.coefficient((j,)) == expect


def test_phi_series_with_series_parameters():
    # upper parameter x*t: (xt;q)_n enters each term exactly
    q = Fraction(1, 2)
    order = 6
    x = MultiPoly.var("x")
    t = TruncSeries.variable(("t",), order, "t")
    got = phi_series(PhiSpec(upper=(t.scale(x),), lower=(), q=q, argument=t))
    expect = TruncSeries.zero(("t",), order)
    for n in range(order + 1):
        term = poch_series(t.scale(x), q, n, ("t",), order) \
            .shift((n,)).scale(Fraction(1) / qfac(q, n))
        expect = expect + term
    assert got == expect


def test_phi_sum_against_infinite_products():
    # numeric 1phi0(a; -; q, z) = (az;q)_oo/(z;q)_oo
    rng = random.Random(RNG_SEED + 3)
    for _ in range(10):
        q = rng.uniform(0.1, 0.6)
        a = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.3, 0.3))
        z = complex(rng.uniform(-0.4, 0.4), rng.uniform(-0.3, 0.3))
        got = phi_sum([a], [], q, z)
        expect = qpoch_inf(a * z, q) / qpoch_inf(z, q)
        assert abs(got - expect) < 1e-11


def test_phi_sum_rejects_divergent_argument():
    with pytest.raises(ValueError):
        phi_sum([0.5], [0.25], 0.3, 1.2)


def test_diff_witness_reports_first_lexicographic_difference():
    f = TruncSeries(("s", "t"), 3, {(0, 0): Fraction(1), (1, 1): Fraction(2)})
    g = TruncSeries(("s", "t"), 3, {(0, 0): Fraction(1), (1, 1): Fraction(3),
                                    (0, 2): Fraction(5)})
    idx, delta = f.diff_witness(g)
    assert idx == (0, 2)
    assert delta == Fraction(-5)
    assert f.diff_witness(f) is None


def test_series_json_round_trip():
    rng = random.Random(RNG_SEED + 4)
    x = MultiPoly.var("x")
    f = TruncSeries(("t",), 4, {(k,): x ** k * Fraction(k + 1) for k in range(5)})
    assert TruncSeries.from_json_dict(f.to_json_dict()) == f
    g = rand_series(rng, ("s", "t"), 5)
    assert TruncSeries.from_json_dict(g.to_json_dict()) == g
