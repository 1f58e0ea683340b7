"""Unit tests for infinite products and adaptive quadrature."""

import math
import random

import pytest

from qrs.quadrature import (IntegralSpec, ProductSpec, QuadratureError,
                            askey_wilson_check, askey_wilson_closed,
                            askey_wilson_quad, aw_integrand,
                            closed_forms_suite, inf_product, integrate,
                            jhi_eval, ortho_check, ortho_integrand, qpoch_inf,
                            qpoch_n)

RNG_SEED = 131071


def test_qq_infinite_product_frozen_value():
    # (1/2; 1/2)_oo, computed independently from the raw partial product
    # with an explicit tail bound below 1e-12
    got = qpoch_inf(0.5, 0.5).real
    partial = 1.0
    for k in range(60):
        partial *= 1 - 0.5 ** (k + 1)
    assert abs(got - partial) < 1e-12
    assert abs(got - 0.2887880951) < 1e-9


def test_infinite_product_edge_cases():
    assert qpoch_inf(0.0, 0.3) == 1.0
    assert qpoch_inf(0.4, 0.0) == pytest.approx(0.6)  # only the k=0 factor
    with pytest.raises(ValueError):
        inf_product(ProductSpec(((0.5, 1.0),)))
    with pytest.raises(ValueError):
        qpoch_inf(0.5, 1.2)


def test_telescoping_quotient():
    # (c; q)_oo / (c q; q)_oo == 1 - c
    rng = random.Random(RNG_SEED)
    for _ in range(10):
        q = rng.uniform(0.05, 0.8)
        c = complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.3, 0.3))
        got = qpoch_inf(c, q) / qpoch_inf(c * q, q)
        assert abs(got - (1 - c)) < 1e-12


def test_qpoch_n_matches_finite_product():
    rng = random.Random(RNG_SEED + 1)
    for _ in range(10):
        q = rng.uniform(0.1, 0.7)
        c = rng.uniform(-0.8, 0.8)
        n = rng.randint(0, 6)
        prod = 1.0
        for k in range(n):
            prod *= 1 - c * q ** k
        assert abs(qpoch_n(c, q, n) - prod) < 1e-13
    # the factorial-style special value used by the orthogonality check
    q = 0.4
    assert qpoch_n(q, q, 3).real == pytest.approx(0.6 * 0.84 * 0.936, abs=1e-15)


def test_integrate_known_integrals():
    val, err = integrate(lambda t: 1.0, 0.0, math.pi, 1e-12)
    assert abs(val - math.pi) < 1e-12
    val, _ = integrate(lambda t: math.cos(t) ** 2, 0.0, math.pi, 1e-12)
    assert abs(val - math.pi / 2) < 1e-12
    # a sharply peaked integrand exercises adaptive splitting
    val, _ = integrate(lambda t: 1.0 / (1e-4 + t * t), -1.0, 1.0, 1e-10)
    expect = 2.0 / 1e-2 * math.atan(1.0 / 1e-2)
    assert abs(val - expect) < 1e-6 * expect


def test_integrate_accepts_spec_and_enforces_budget():
    spec = IntegralSpec(integrand=lambda t: math.sin(t), lo=0.0, hi=math.pi,
                        tol=1e-12)
    val, err = integrate(spec)
    assert abs(val - 2.0) < 1e-12
    with pytest.raises(QuadratureError):
        integrate(lambda t: 1.0 / (1e-9 + t * t), -1.0, 1.0, 1e-14, budget=60)


def test_integrand_cross_check_against_scipy():
    # scipy is a test-only oracle for the weight integrand
    from scipy.integrate import quad as scipy_quad
    f = aw_integrand(0.3, 0.25, 0.2, 0.1, 0.5)
    ours, _ = integrate(f, 0.0, math.pi, 1e-11)
    ref, ref_err = scipy_quad(f, 0.0, math.pi, epsabs=1e-12, epsrel=1e-12)
    assert abs(ours - ref) < 1e-9


def test_weight_integral_zero_parameters_normalizes_to_one():
    got = askey_wilson_quad(0.0, 0.0, 0.0, 0.0, 0.5)
    assert abs(got - 1.0) < 1e-10
    assert askey_wilson_closed(0.0, 0.0, 0.0, 0.0, 0.5) == pytest.approx(1.0)


def test_weight_integral_matches_closed_product():
    rep = askey_wilson_check(0.3, 0.25, 0.2, 0.1, 0.5)
    assert rep.passed()
    assert rep.residual is not None and rep.residual <= 1e-8
    # three-parameter reduction: d = 0 drops every d-pair from the product
    rep0 = askey_wilson_check(0.3, 0.25, 0.2, 0.0, 0.5)
    assert rep0.passed()
    # negative parameter stays inside the unit disk and still matches
    repn = askey_wilson_check(-0.35, 0.25, 0.2, 0.1, 0.4)
    assert repn.passed()


def test_weight_integral_rejects_out_of_domain():
    with pytest.raises(ValueError):
        askey_wilson_check(1.1, 0.2, 0.2, 0.1, 0.5)


def test_orthogonality_matrix_witnesses():
    q, a = 0.4, 0.3
    rep = ortho_check(0, 0, 0.0, q)
    assert rep.passed()
    rep = ortho_check(2, 3, a, q)
    assert rep.passed() and rep.residual <= 1e-8
    rep = ortho_check(3, 3, a, q)
    assert rep.passed()
    val, _ = integrate(ortho_integrand(3, 3, a, q), 0.0, math.pi, 1e-12)
    moment = qpoch_inf(q, q).real / (2 * math.pi) * val
    assert moment == pytest.approx(0.6 * 0.84 * 0.936, abs=1e-8)


def test_jhi_same_base_reduction_is_one():
    # at p = q the J and I integrals normalize exactly to 1
    for kind in ("J", "I"):
        got = jhi_eval(kind, 0.3, 0.3, 0.1, 0.2)
        assert abs(got - 1.0) < 1e-10, kind


def test_jhi_h_at_t_zero_is_one():
    assert abs(jhi_eval("H", 0.09, 0.3, 0.1, 0.0) - 1.0) < 1e-10


def test_jhi_rejects_bad_kind():
    with pytest.raises(ValueError):
        jhi_eval("Q", 0.3, 0.3, 0.1, 0.2)


def test_closed_forms_suite_all_pass():
    reports = closed_forms_suite(0.3, 0.1, 0.2)
    assert len(reports) == 4
    ids = [r.id for r in reports]
    assert ids == ["closed-H-qq", "closed-H-mqq", "closed-H-q2q",
                   "closed-H-q2q3"]
    for r in reports:
        assert r.passed(), r.id
        assert r.residual <= 1e-7
