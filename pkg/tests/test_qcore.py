"""Unit tests for the exact polynomial kernel."""

import math
import random
from fractions import Fraction

import pytest

from qrs.qcore import (LaurentPoly, MultiPoly, chebyshev_t, frac, poly_eval,
                       qbinom, qfac, qpoch, tri)

RNG_SEED = 20240811


def rand_poly(rng, variables=("x", "y"), max_deg=3, max_terms=5) -> MultiPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exp = tuple(rng.randint(0, max_deg) for _ in variables)
        terms[exp] = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
    return MultiPoly(variables, terms)


def rand_q(rng) -> Fraction:
    den = rng.randint(2, 9)
    num = rng.randint(1, den - 1)
    return Fraction(num, den)


def test_frac_accepts_exact_rejects_float():
    assert frac(3) == Fraction(3)
    assert frac("2/7") == Fraction(2, 7)
    assert frac(Fraction(-1, 3)) == Fraction(-1, 3)
    with pytest.raises((TypeError, ValueError)):
        frac(0.5)


def test_tri_triangular_numbers():
    assert [tri(k) for k in range(6)] == [0, 0, 1, 3, 6, 10]


def test_multipoly_ring_laws():
    rng = random.Random(RNG_SEED)
    for _ in range(40):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == MultiPoly.const(0)
        assert a * 1 == a and 1 * a == a
        assert (a * 0).is_zero()


def test_multipoly_scalar_coercion_and_pow():
    x = MultiPoly.var("x")
    assert 2 * x - x == x
    assert (x + 1) ** 2 == x * x + 2 * x + 1
    assert x ** 0 == MultiPoly.const(1, ("x",))
    assert Fraction(1, 2) * (x + x) == x


def test_multipoly_substitute_matches_eval():
    rng = random.Random(RNG_SEED + 1)
    for _ in range(25):
        p = rand_poly(rng)
        bx, by = Fraction(rng.randint(-4, 4), 3), Fraction(rng.randint(-4, 4), 5)
        sub = p.substitute({"x": bx, "y": by})
        assert sub.is_constant()
        assert sub.constant_value() == poly_eval(p, {"x": bx, "y": by})


def test_multipoly_substitute_polynomial_composition():
    x, y = MultiPoly.var("x"), MultiPoly.var("y")
    p = x * x - y
    assert p.substitute({"x": y + 1}) == (y + 1) * (y + 1) - y
    # untouched variables stay symbolic
    assert p.substitute({"y": Fraction(0)}) == x * x


def test_partial_coefficient_and_univariate_view_agree():
    rng = random.Random(RNG_SEED + 2)
    for _ in range(20):
        p = rand_poly(rng)
        by_deg = p.as_univariate("x")
        rebuilt = MultiPoly.const(0)
        x = MultiPoly.var("x")
        for d, coef in by_deg.items():
            assert coef == p.partial_coefficient({"x": d})
            rebuilt = rebuilt + x ** d * coef
        assert rebuilt == p


def test_multipoly_json_round_trip():
    rng = random.Random(RNG_SEED + 3)
    for _ in range(10):
        p = rand_poly(rng)
        assert MultiPoly.from_json_dict(p.to_json_dict()) == p


def test_multipoly_immutable():
    p = MultiPoly.var("x")
    with pytest.raises(AttributeError):
        p.terms = {}


def test_chebyshev_cosine_property():
    rng = random.Random(RNG_SEED + 4)
    for k in range(8):
        t = rng.uniform(0.1, 3.0)
        val = poly_eval(chebyshev_t(k), {"x": math.cos(t)})
        assert abs(val - math.cos(k * t)) < 1e-12


def test_laurent_fold_matches_circle_eval():
    rng = random.Random(RNG_SEED + 5)
    for _ in range(15):
        half = {k: Fraction(rng.randint(-5, 5)) for k in range(rng.randint(1, 5))}
        terms = dict(half)
        for k, c in half.items():
            if k:
                terms[-k] = c
        lp = LaurentPoly(terms)
        assert lp.is_symmetric()
        theta = rng.uniform(0.0, math.pi)
        z = complex(math.cos(theta), math.sin(theta))
        direct = lp.eval(z)
        folded = poly_eval(lp.to_x_poly(), {"x": math.cos(theta)})
        assert abs(direct - folded) < 1e-12


def test_laurent_asymmetric_fold_rejected():
    lp = LaurentPoly({1: MultiPoly.const(1)})
    assert not lp.is_symmetric()
    with pytest.raises(ValueError):
        lp.to_x_poly()


def test_qfac_frozen_values():
    q = Fraction(1, 2)
    assert qfac(q, 0) == 1
    assert qfac(q, 1) == Fraction(1, 2)
    assert qfac(q, 2) == Fraction(3, 8)
    assert qfac(q, 3) == Fraction(21, 64)


def test_qpoch_matches_product_definition():
    rng = random.Random(RNG_SEED + 6)
    for _ in range(20):
        q = rand_q(rng)
        a = Fraction(rng.randint(-3, 3), rng.randint(1, 4))
        n = rng.randint(0, 6)
        prod = Fraction(1)
        for k in range(n):
            prod *= 1 - a * q ** k
        assert qpoch(a, q, n) == prod


def test_qpoch_negative_index_convention():
    # (a; q)_{-n} * (a q^{-n}; q)_n == 1
    rng = random.Random(RNG_SEED + 7)
    for _ in range(15):
        q = rand_q(rng)
        a = Fraction(rng.randint(1, 5), 7)
        n = rng.randint(1, 4)
        try:
            left = qpoch(a, q, -n)
        except ZeroDivisionError:
            continue
        assert left * qpoch(a * q ** -n, q, n) == 1


def test_qbinom_polynomial_witness():
    q = MultiPoly.var("q")
    expect = 1 + q + 2 * q ** 2 + q ** 3 + q ** 4
    assert qbinom(4, 2, q) == expect


def test_qbinom_out_of_range_is_zero():
    q = Fraction(1, 3)
    assert qbinom(3, 5, q) == 0
    assert qbinom(3, -1, q) == 0
    assert qbinom(-2, 0, q) == 0
    assert qbinom(0, 0, q) == 1


def test_qbinom_pascal_recurrences():
    rng = random.Random(RNG_SEED + 8)
    for _ in range(30):
        q = rand_q(rng)
        n = rng.randint(1, 8)
        k = rng.randint(0, n)
        assert qbinom(n, k, q) == qbinom(n - 1, k - 1, q) + q ** k * qbinom(n - 1, k, q)
        assert qbinom(n, k, q) == q ** (n - k) * qbinom(n - 1, k - 1, q) + qbinom(n - 1, k, q)


def test_qbinom_symmetry():
    rng = random.Random(RNG_SEED + 9)
    for _ in range(20):
        q = rand_q(rng)
        n = rng.randint(0, 9)
        k = rng.randint(0, n)
        assert qbinom(n, k, q) == qbinom(n, n - k, q)


def test_poly_eval_numeric_and_exact_paths():
    x, y = MultiPoly.var("x"), MultiPoly.var("y")
    p = x * y + 2 * x
    assert poly_eval(p, {"x": Fraction(1, 2), "y": Fraction(3)}) == Fraction(5, 2)
    assert abs(poly_eval(p, {"x": 0.5, "y": 3.0}) - 2.5) < 1e-15
    with pytest.raises(ValueError):
        poly_eval(p, {"x": 1})
