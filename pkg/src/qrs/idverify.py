"""The identity registry: every checked identity is a named case that runs in
one of four modes.

exact-series   both sides built as truncated power series over polynomial
               coefficients; equality is coefficientwise and exact.
exact-poly     both sides are polynomials for each (n, m) in a sweep range;
               equality is exact.
numeric-complex  both sides evaluated at seeded complex parameter draws
               inside the convergence guards, with tail-bounded partial sums.
quadrature     one side is an adaptive integral, the other a closed product.

Each case states which symbols stay symbolic and which are bound; exact
modes ignore analytic magnitude constraints (polynomial coefficient
identities need none), numeric modes enforce them.
"""

from __future__ import annotations

import cmath
import hashlib
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .families import (big_qhermite_laurent, big_qhermite_poly, brs_poly,
                       cauchy_poly, change_base_big, change_base_c,
                       h_to_bivariate, qhermite_eval, qhermite_laurent,
                       qhermite_poly, rs_poly)
from .fps import (PhiSpec, TruncSeries, euler_inv_series, euler_series,
                  phi_series, phi_sum, poch_series, series_inv)
from .qcore import MultiPoly, frac, qbinom, qfac, qpoch, tri
from .qops import cauchy_operand, e_op_apply, t_op_graded, t_op_product_sides
from .quadrature import (askey_wilson_closed, askey_wilson_quad, integrate,
                         jhi_eval, ortho_integrand, qpoch_inf, qpoch_n)
from .reporting import IdentityReport, clip_witness

NUMERIC_TOL = 1e-10
QUAD_TOL = 1e-8
CLOSED_TOL = 1e-7
NUMERIC_DRAWS = 5


@dataclass(frozen=True)
class IdentityCase:
    """One registered identity check."""

    id: str
    description: str
    mode: str
    default_order: int
    symbols: str
    domain: str
    defaults: dict = field(default_factory=dict)
    runner: object = None


_REGISTRY: dict = {}


def _case(id, description, mode, default_order, symbols, domain, defaults=None):
    def wrap(fn):
        _REGISTRY[id] = IdentityCase(
            id=id, description=description, mode=mode,
            default_order=default_order, symbols=symbols, domain=domain,
            defaults=dict(defaults or {}), runner=fn)
        return fn
    return wrap


def registry() -> list:
    """All registered cases, in registration order."""
    return list(_REGISTRY.values())


def get_case(case_id: str) -> IdentityCase:
    case = _REGISTRY.get(case_id)
    if case is None:
        raise ValueError(f"unknown identity id: {case_id!r}")
    return case


def verify(case_id: str, order: int | None = None, params: dict | None = None,
           seed: int = 0, perturb: bool = False) -> IdentityReport:
    """Run one identity check and return its report.

    order defaults to the case's registered order (exact modes only; numeric
    and quadrature modes ignore it). params override the case defaults;
    unknown parameter names are rejected. seed fixes the parameter draws of
    numeric modes. perturb injects a deliberate error into the left side, as
    a negative control that the comparison actually bites.
    """
    case = get_case(case_id)
    merged = dict(case.defaults)
    for key, value in (params or {}).items():
        if key not in case.defaults:
            raise ValueError(f"{case_id} does not take a parameter {key!r}")
        merged[key] = value
    run_order = case.default_order if order is None else int(order)
    if run_order < 0:
        raise ValueError("order must be nonnegative")
    rng = _rng_for(case_id, seed)
    exact = case.mode in ("exact-series", "exact-poly")
    if case.mode == "numeric-complex":
        merged["seed"] = seed
    report = IdentityReport(
        id=case.id, mode=case.mode,
        order=run_order if exact else None,
        params=merged, description=case.description)
    started = time.perf_counter()
    status, residual, witness = case.runner(run_order, merged, rng, perturb)
    report.status = status
    report.residual = residual
    report.witness = witness
    report.elapsed_ms = (time.perf_counter() - started) * 1000
    return report


def verify_all(order: int | None = None, seed: int = 0,
               ids: list | None = None, perturb: bool = False) -> list:
    """Run every registered case (or the given ids) in registry order."""
    targets = [get_case(i).id for i in ids] if ids is not None else list(_REGISTRY)
    return [verify(i, order=order, seed=seed, perturb=perturb) for i in targets]


# -- shared machinery ---------------------------------------------------------


def _rng_for(case_id: str, seed: int) -> random.Random:
    digest = hashlib.sha256(f"{case_id}:{seed}".encode()).digest()
    return random.Random(int.from_bytes(digest, "big"))


def _draw_complex(rng, rmin: float, rmax: float) -> complex:
    r = rmin + (rmax - rmin) * rng.random()
    return r * cmath.exp(2j * math.pi * rng.random())


def _exact_q(params, key="q") -> Fraction:
    q = frac(params[key])
    if not 0 < abs(q) < 1:
        raise ValueError(f"{key} must be a nonzero rational with |{key}| < 1")
    return q


def _series_sweep(triples, perturb: bool):
    """Verdict over (label, lhs, rhs) series triples; exact comparison."""
    first = True
    for label, lhs, rhs in triples:
        if perturb and first:
            lhs = lhs + TruncSeries.const(Fraction(1), lhs.vars, lhs.order)
        first = False
        d = lhs.diff_witness(rhs)
        if d is not None:
            idx, delta = d
            where = " ".join(f"{v}^{e}" for v, e in zip(lhs.vars, idx)) or "1"
            lab = f"{label}: " if label else ""
            return "fail", None, clip_witness(f"{lab}coefficient of {where}: {delta}")
    return "exact-pass", None, None


def _poly_sweep(triples, perturb: bool):
    """Verdict over (label, lhs, rhs) polynomial triples; exact comparison."""
    first = True
    for label, lhs, rhs in triples:
        if perturb and first:
            lhs = lhs + 1
        first = False
        if lhs != rhs:
            return "fail", None, clip_witness(f"{label}: difference {lhs - rhs}")
    return "exact-pass", None, None


def _numeric_verdict(rows, tol: float, perturb: bool):
    """Verdict over (label, [values...]) rows: all values in a row must agree."""
    worst = 0.0
    worst_label = None
    for i, (label, values) in enumerate(rows):
        base = values[0] + (1e-3 if perturb and i == 0 else 0.0)
        for other in values[1:]:
            err = abs(base - other)
            if err > worst:
                worst, worst_label = err, label
    status = "pass" if worst <= tol else "fail"
    witness = None if status == "pass" else clip_witness(
        f"{worst_label}: |difference| = {worst:.6e}")
    return status, worst, witness


def _sum_terms(gen, ratio: float, tol: float, max_terms: int = 500) -> complex:
    """Sum a term generator until three consecutive terms clear the
    geometric tail bound for the given magnitude ratio."""
    tail = max(ratio / (1.0 - ratio), 1.0)
    total = 0j
    small = 0
    for n, term in enumerate(gen):
        total += term
        if abs(term) * tail < tol:
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
        if n >= max_terms:
            raise RuntimeError("numeric series did not settle within the term cap")
    return total


def _tvar(order: int) -> TruncSeries:
    return TruncSeries.variable(("t",), order, "t")


def _stvars(order: int):
    return (TruncSeries.variable(("s", "t"), order, "s"),
            TruncSeries.variable(("s", "t"), order, "t"))


_X, _Y, _U, _V = (MultiPoly.var(n) for n in "xyuv")


def _inv_qfac(q: Fraction, n: int) -> Fraction:
    return Fraction(1) / qfac(q, n)


# -- exact series: Poisson-kernel (Mehler-type) and Rogers-type families ------


@_case("mehler-rs",
       "Poisson kernel for h_n(x|q): the h_n(x)h_n(y) sum equals the "
       "four-factor Euler product with an (xyt^2;q)_oo numerator",
       "exact-series", 8,
       "x, y symbolic; q bound rational; t series variable",
       "0 < |q| < 1",
       defaults={"q": Fraction(1, 2)})
def _run_mehler_rs(order, params, rng, perturb):
    q = _exact_q(params)
    t1 = _tvar(order)
    lhs = TruncSeries(("t",), order, {
        (n,): rs_poly(n, q) * rs_poly(n, q, "y") * _inv_qfac(q, n)
        for n in range(order + 1)})
    rhs = euler_series(TruncSeries.monomial(("t",), order, (2,), _X * _Y), q)
    for c in (Fraction(1), _X, _Y, _X * _Y):
        rhs = rhs * euler_inv_series(t1.scale(c), q)
    return _series_sweep([("", lhs, rhs)], perturb)


@_case("rogers-rs",
       "Rogers formula for h_n(x|q): the h_(n+m) double sum equals "
       "(xst;q)_oo times the h_n h_m double sum",
       "exact-series", 8,
       "x symbolic; q bound rational; t, s series variables",
       "0 < |q| < 1",
       defaults={"q": Fraction(1, 2)})
def _run_rogers_rs(order, params, rng, perturb):
    q = _exact_q(params)
    lhs = TruncSeries(("s", "t"), order, {
        (i, j): rs_poly(i + j, q) * (_inv_qfac(q, i) * _inv_qfac(q, j))
        for i in range(order + 1) for j in range(order + 1 - i)})
    dbl = TruncSeries(("s", "t"), order, {
        (i, j): rs_poly(i, q) * rs_poly(j, q) * (_inv_qfac(q, i) * _inv_qfac(q, j))
        for i in range(order + 1) for j in range(order + 1 - i)})
    rhs = euler_series(TruncSeries.monomial(("s", "t"), order, (1, 1), _X), q) * dbl
    return _series_sweep([("", lhs, rhs)], perturb)


@_case("mehler-brs",
       "Poisson kernel for h_n(x,y|q): the h_n(x,y)h_n(u,v) sum equals the "
       "Euler-product prefactor times a 3phi2 in argument ut",
       "exact-series", 8,
       "x, y, u, v symbolic; q bound rational; t series variable",
       "0 < |q| < 1",
       defaults={"q": Fraction(1, 2)})
def _run_mehler_brs(order, params, rng, perturb):
    q = _exact_q(params)
    t1 = _tvar(order)
    lhs = TruncSeries(("t",), order, {
        (n,): brs_poly(n, q) * brs_poly(n, q, "u", "v") * _inv_qfac(q, n)
        for n in range(order + 1)})
    pre = euler_series(t1.scale(_Y), q) * euler_series(t1.scale(_V * _X), q) \
        * euler_inv_series(t1, q) * euler_inv_series(t1.scale(_X), q) \
        * euler_inv_series(t1.scale(_U * _X), q)
    spec = PhiSpec(
        upper=(_Y, t1.scale(_X)),
        ratio_upper=((_V, _U),),
        lower=(t1.scale(_Y), t1.scale(_V * _X)),
        q=q, argument=t1)
    rhs = pre * phi_series(spec)
    return _series_sweep([("", lhs, rhs)], perturb)


@_case("mehler-reduction",
       "specializing the bivariate Poisson kernel at y=0, v=0, u->y "
       "reproduces the classical h_n(x|q) Poisson-kernel product",
       "exact-series", 8,
       "x, y symbolic; q bound rational; t series variable",
       "0 < |q| < 1",
       defaults={"q": Fraction(1, 2)})
def _run_mehler_reduction(order, params, rng, perturb):
    q = _exact_q(params)
    t1 = _tvar(order)
    pre = euler_inv_series(t1, q) * euler_inv_series(t1.scale(_X), q) \
        * euler_inv_series(t1.scale(_Y * _X), q)
    spec = PhiSpec(
        upper=(t1.scale(_X),),
        ratio_upper=((Fraction(0), _Y),),
        q=q, argument=t1)
    lhs = pre * phi_series(spec)
    rhs = euler_series(TruncSeries.monomial(("t",), order, (2,), _X * _Y), q)
    for c in (Fraction(1), _X, _Y, _X * _Y):
        rhs = rhs * euler_inv_series(t1.scale(c), q)
    return _series_sweep([("", lhs, rhs)], perturb)


@_case("rogers-brs",
       "Rogers formula for h_n(x,y|q): the h_(n+m) double sum equals the "
       "Euler prefactor times a 2phi1 in argument t",
       "exact-series", 8,
       "x, y symbolic; q bound rational; t, s series variables",
       "0 < |q| < 1",
       defaults={"q": Fraction(1, 2)})
def _run_rogers_brs(order, params, rng, perturb):
    q = _exact_q(params)
    s1, t1 = _stvars(order)
    lhs = TruncSeries(("s", "t"), order, {
        (i, j): brs_poly(i + j, q) * (_inv_qfac(q, i) * _inv_qfac(q, j))
        for i in range(order + 1) for j in range(order + 1 - i)})
    pre = euler_series(s1.scale(_Y), q) * euler_inv_series(s1, q) \
        * euler_inv_series(s1.scale(_X), q) * euler_inv_series(t1.scale(_X), q)
    spec = PhiSpec(upper=(_Y, s1.scale(_X)), lower=(s1.scale(_Y),),
                   q=q, argument=t1)
    rhs = pre * phi_series(spec)
    return _series_sweep([("", lhs, rhs)], perturb)


@_case("rogers2-brs",
       "second Rogers-type formula: the y-alternating triple sum over "
       "h_(n+m-k) equals (xst;q)_oo times the h_n h_m double sum",
       "exact-series", 7,
       "x, y symbolic; q bound rational; t, s series variables",
       "0 < |q| < 1",
       defaults={"q": Fraction(1, 2)})
def _run_rogers2_brs(order, params, rng, perturb):
    q = _exact_q(params)
    yv = _Y
    coeffs = {}
    for i in range(order + 1):
        for j in range(order + 1 - i):
            total = MultiPoly.const(0)
            for k in range(min(i, j) + 1):
                w = Fraction((-1) ** k) * q ** tri(k) * _inv_qfac(q, k) \
                    * _inv_qfac(q, i - k) * _inv_qfac(q, j - k)
                total = total + yv ** k * brs_poly(i + j - k, q) * w
            coeffs[(i, j)] = total
    lhs = TruncSeries(("s", "t"), order, coeffs)
    dbl = TruncSeries(("s", "t"), order, {
        (i, j): brs_poly(i, q) * brs_poly(j, q) * (_inv_qfac(q, i) * _inv_qfac(q, j))
        for i in range(order + 1) for j in range(order + 1 - i)})
    rhs = euler_series(TruncSeries.monomial(("s", "t"), order, (1, 1), _X), q) * dbl
    return _series_sweep([("", lhs, rhs)], perturb)


# -- exact series: operator lemmas --------------------------------------------


@_case("lemma-2.2",
       "q-exponential operator on a two-pole Euler kernel: T(bD_q) image "
       "equals the closed product times a 2phi1 in argument at",
       "exact-series", 8,
       "a, b graded series variables; s, t, v, q bound rationals",
       "0 < |q| < 1; t nonzero (it divides the v/t parameter)",
       defaults={"s": Fraction(1, 3), "t": Fraction(1, 4), "v": Fraction(1, 5),
                 "q": Fraction(1, 2)})
def _run_lemma_22(order, params, rng, perturb):
    q = _exact_q(params)
    s, t, v = frac(params["s"]), frac(params["t"]), frac(params["v"])
    if t == 0:
        raise ValueError("t must be nonzero")
    a1 = TruncSeries.variable(("a",), order, "a")
    operand = euler_series(a1.scale(v), q) * euler_inv_series(a1.scale(s), q) \
        * euler_inv_series(a1.scale(t), q)
    lhs = t_op_graded(operand, q, bvar="b")
    av = TruncSeries.variable(("a", "b"), order, "a")
    bv = TruncSeries.variable(("a", "b"), order, "b")
    pre = euler_series(bv.scale(v), q) * euler_inv_series(av.scale(s), q) \
        * euler_inv_series(bv.scale(s), q) * euler_inv_series(bv.scale(t), q)
    spec = PhiSpec(upper=(v / t, bv.scale(s)), lower=(bv.scale(v),),
                   q=q, argument=av.scale(t))
    rhs = pre * phi_series(spec)
    return _series_sweep([("", lhs, rhs)], perturb)


@_case("zhang-wang",
       "q-exponential operator on a three-pole Euler kernel: T(bD_q) image "
       "equals the closed product times a 3phi2 in argument abstw/v",
       "exact-series", 8,
       "a, b graded series variables; s, t, v, w, q bound rationals",
       "0 < |q| < 1; |s|,|t|,|v|,|w|,|b| < 1; v nonzero; w = 0 allowed",
       defaults={"b": Fraction(1, 7), "s": Fraction(1, 3), "t": Fraction(1, 4),
                 "v": Fraction(1, 5), "w": Fraction(1, 6), "q": Fraction(1, 2)})
def _run_zhang_wang(order, params, rng, perturb):
    q = _exact_q(params)
    vals = {k: frac(params[k]) for k in ("b", "s", "t", "v", "w")}
    for name, val in vals.items():
        if not abs(val) < 1:
            raise ValueError(f"parameter {name} must lie in (-1, 1)")
    lhs, rhs = t_op_product_sides(vals["s"], vals["t"], vals["v"], vals["w"],
                                  q, order)
    return _series_sweep([("", lhs, rhs)], perturb)


@_case("lemma-2.3",
       "homogeneous shift operator on the Cauchy kernel times "
       "P_n/(yt;q)_n: the image equals the h-generating prefactor times a "
       "finite (y,xt;q)_k/(yt;q)_k sum",
       "exact-series", 8,
       "x, y symbolic; q bound rational; t series variable; n swept to nmax",
       "0 < |q| < 1; nmax >= 0",
       defaults={"q": Fraction(1, 2), "nmax": 6})
def _run_lemma_23(order, params, rng, perturb):
    q = _exact_q(params)
    nmax = int(params["nmax"])
    t1 = _tvar(order)
    kernel = euler_series(t1.scale(_Y), q) * euler_inv_series(t1.scale(_X), q)
    pre = euler_series(t1.scale(_Y), q) * euler_inv_series(t1, q) \
        * euler_inv_series(t1.scale(_X), q)
    triples = []
    for n in range(nmax + 1):
        op = kernel * series_inv(poch_series(t1.scale(_Y), q, n, ("t",), order))
        op = op.scale(cauchy_poly(n, q))
        lhs = e_op_apply(cauchy_operand(dict(op.coeffs), q, order), route="basis")
        ksum = TruncSeries.zero(("t",), order)
        for k in range(n + 1):
            ratio = poch_series(t1.scale(_X), q, k, ("t",), order) \
                * series_inv(poch_series(t1.scale(_Y), q, k, ("t",), order))
            coef = qbinom(n, k, q) * qpoch(_Y, q, k) * _X ** (n - k)
            ksum = ksum + ratio.scale(coef)
        rhs = pre * ksum
        triples.append((f"n={n}", lhs, rhs))
    return _series_sweep(triples, perturb)


# -- exact polynomial sweeps ---------------------------------------------------


@_case("linear-rs",
       "linearization of h_n(x|q)h_m(x|q) into single h polynomials with "
       "[n,k][m,k](q;q)_k x^k weights",
       "exact-poly", 6,
       "x symbolic; q bound rational; n, m swept to the order bound",
       "0 < |q| < 1",
       defaults={"q": Fraction(1, 2)})
def _run_linear_rs(order, params, rng, perturb):
    q = _exact_q(params)
    triples = []
    for n in range(order + 1):
        for m in range(order + 1):
            lhs = rs_poly(n, q) * rs_poly(m, q)
            rhs = MultiPoly.const(0)
            for k in range(min(n, m) + 1):
                w = qbinom(n, k, q) * qbinom(m, k, q) * qfac(q, k)
                rhs = rhs + _X ** k * rs_poly(n + m - 2 * k, q) * w
            triples.append((f"n={n}, m={m}", lhs, rhs))
    return _poly_sweep(triples, perturb)


@_case("linear-brs-double",
       "double-sum linearization for h_n(x,y|q): the (y;q)_k P_l weights "
       "balance h_(n+m-k-l) against h_(n-k) h_(m-l) products",
       "exact-poly", 6,
       "x, y symbolic; q bound rational; n, m swept to the order bound",
       "0 < |q| < 1",
       defaults={"q": Fraction(1, 2)})
def _run_linear_brs_double(order, params, rng, perturb):
    q = _exact_q(params)
    triples = []
    for n in range(order + 1):
        for m in range(order + 1):
            lhs = MultiPoly.const(0)
            rhs = MultiPoly.const(0)
            for k in range(n + 1):
                wk = qbinom(n, k, q) * qpoch(_Y, q, k)
                for l in range(m + 1):
                    w = wk * qbinom(m, l, q)
                    pl = cauchy_poly(l, q)
                    lhs = lhs + pl * brs_poly(n + m - k - l, q) * w
                    rhs = rhs + pl * brs_poly(n - k, q) * brs_poly(m - l, q) \
                        * (w * q ** (k * l))
            triples.append((f"n={n}, m={m}", lhs, rhs))
    return _poly_sweep(triples, perturb)


@_case("linear-brs-simple",
       "simpler linearization for h_n(x,y|q): the x^l y^k alternating "
       "double sum reproduces h_n h_m",
       "exact-poly", 6,
       "x, y symbolic; q bound rational; n, m swept to the order bound",
       "0 < |q| < 1",
       defaults={"q": Fraction(1, 2)})
def _run_linear_brs_simple(order, params, rng, perturb):
    q = _exact_q(params)
    triples = []
    for n in range(order + 1):
        for m in range(order + 1):
            lhs = brs_poly(n, q) * brs_poly(m, q)
            rhs = MultiPoly.const(0)
            top = min(n, m)
            for l in range(top + 1):
                wl = qbinom(m, l, q) * qbinom(n, l, q) * qfac(q, l)
                for k in range(top + 1):
                    w = wl * qbinom(m - l, k, q) * qbinom(n - l, k, q) \
                        * qfac(q, k) * Fraction((-1) ** k) * q ** tri(k)
                    if not w:
                        continue
                    rhs = rhs + _X ** l * _Y ** k \
                        * brs_poly(n + m - 2 * l - k, q) * w
            triples.append((f"n={n}, m={m}", lhs, rhs))
    return _poly_sweep(triples, perturb)


@_case("hlm-relation",
       "alternating x^k h_(n-k)h_(m-k) vs y^k h_(n+m-k) combination "
       "vanishes identically for h_n(x,y|q)",
       "exact-poly", 8,
       "x, y symbolic; q bound rational; n, m swept to the order bound",
       "0 < |q| < 1",
       defaults={"q": Fraction(1, 2)})
def _run_hlm(order, params, rng, perturb):
    q = _exact_q(params)
    triples = []
    for n in range(order + 1):
        for m in range(order + 1):
            lhs = MultiPoly.const(0)
            for k in range(min(n, m) + 1):
                w = qbinom(n, k, q) * qbinom(m, k, q) * qfac(q, k) \
                    * Fraction((-1) ** k) * q ** tri(k)
                lhs = lhs + (_X ** k * brs_poly(n - k, q) * brs_poly(m - k, q)
                             - _Y ** k * brs_poly(n + m - k, q)) * w
            triples.append((f"n={n}, m={m}", lhs, MultiPoly.const(0)))
    return _poly_sweep(triples, perturb)


@_case("linear-mixed",
       "the [n,k][m,k](q;q)_k x^k h_(n+m-2k)(x|q) sum factors into two "
       "y-binomial h(x,y|q) transforms",
       "exact-poly", 6,
       "x, y symbolic; q bound rational; n, m swept to the order bound",
       "0 < |q| < 1",
       defaults={"q": Fraction(1, 2)})
def _run_linear_mixed(order, params, rng, perturb):
    q = _exact_q(params)
    triples = []
    for n in range(order + 1):
        for m in range(order + 1):
            lhs = MultiPoly.const(0)
            for k in range(min(n, m) + 1):
                w = qbinom(n, k, q) * qbinom(m, k, q) * qfac(q, k)
                lhs = lhs + _X ** k * rs_poly(n + m - 2 * k, q) * w
            rhs = _ybinom_transform(n, q) * _ybinom_transform(m, q)
            triples.append((f"n={n}, m={m}", lhs, rhs))
    return _poly_sweep(triples, perturb)


def _ybinom_transform(n: int, q: Fraction) -> MultiPoly:
    """sum_k [n,k] y^k h_(n-k)(x,y|q)."""
    out = MultiPoly.const(0)
    for k in range(n + 1):
        out = out + _Y ** k * brs_poly(n - k, q) * qbinom(n, k, q)
    return out


@_case("awilson-special",
       "h_n(x|q) expands as the y-binomial sum over h_(n-k)(x,y|q)",
       "exact-poly", 8,
       "x, y symbolic; q bound rational; n swept to the order bound",
       "0 < |q| < 1",
       defaults={"q": Fraction(1, 2)})
def _run_awilson_special(order, params, rng, perturb):
    q = _exact_q(params)
    triples = []
    for n in range(order + 1):
        (lhs, rhs), _ = h_to_bivariate(n, q)
        triples.append((f"n={n}", lhs, rhs))
    return _poly_sweep(triples, perturb)


@_case("its-inverse",
       "h_n(x,y|q) expands as the alternating q-power y-binomial sum over "
       "h_(n-k)(x|q)",
       "exact-poly", 8,
       "x, y symbolic; q bound rational; n swept to the order bound",
       "0 < |q| < 1",
       defaults={"q": Fraction(1, 2)})
def _run_its_inverse(order, params, rng, perturb):
    q = _exact_q(params)
    triples = []
    for n in range(order + 1):
        _, (lhs, rhs) = h_to_bivariate(n, q)
        triples.append((f"n={n}", lhs, rhs))
    return _poly_sweep(triples, perturb)


def _mixed_sides(n: int, m: int, q: Fraction):
    """Both sides of the mixed alternating identity linking h(x|q) and
    h(x,y|q) products."""
    lhs = MultiPoly.const(0)
    for j in range(n + 1):
        wj = qbinom(n, j, q) * q ** tri(j)
        for k in range(m + 1):
            w = wj * qbinom(m, k, q) * q ** tri(k) * Fraction((-1) ** (j + k))
            lhs = lhs + _Y ** (j + k) * rs_poly(n + m - j - k, q) * w
    rhs = MultiPoly.const(0)
    for k in range(min(n, m) + 1):
        w = qbinom(n, k, q) * qbinom(m, k, q) * qfac(q, k) * q ** tri(k) \
            * Fraction((-1) ** k)
        rhs = rhs + _X ** k * brs_poly(n - k, q) * brs_poly(m - k, q) * w
    return lhs, rhs


@_case("mixed-identity",
       "alternating (-y)^(j+k) h_(n+m-j-k)(x|q) double sum equals the "
       "alternating (-x)^k h_(n-k)(x,y)h_(m-k)(x,y) sum",
       "exact-poly", 6,
       "x, y symbolic; q bound rational; n, m swept to the order bound",
       "0 < |q| < 1",
       defaults={"q": Fraction(1, 2)})
def _run_mixed_identity(order, params, rng, perturb):
    q = _exact_q(params)
    triples = []
    for n in range(order + 1):
        for m in range(order + 1):
            lhs, rhs = _mixed_sides(n, m, q)
            triples.append((f"n={n}, m={m}", lhs, rhs))
    return _poly_sweep(triples, perturb)


@_case("askey-ismail",
       "inverse linearization: h_(m+n)(x|q) as the alternating (-x)^k "
       "h_(n-k)h_(m-k) sum; also the y=0 shadow of the mixed identity",
       "exact-poly", 6,
       "x symbolic; q bound rational; n, m swept to the order bound",
       "0 < |q| < 1",
       defaults={"q": Fraction(1, 2)})
def _run_askey_ismail(order, params, rng, perturb):
    q = _exact_q(params)
    zero = Fraction(0)
    triples = []
    for n in range(order + 1):
        for m in range(order + 1):
            lhs = rs_poly(n + m, q)
            rhs = MultiPoly.const(0)
            for k in range(min(n, m) + 1):
                w = qbinom(n, k, q) * qbinom(m, k, q) * qfac(q, k) \
                    * q ** tri(k) * Fraction((-1) ** k)
                rhs = rhs + _X ** k * rs_poly(n - k, q) * rs_poly(m - k, q) * w
            triples.append((f"n={n}, m={m}", lhs, rhs))
            ml, mr = _mixed_sides(n, m, q)
            triples.append((f"n={n}, m={m} (y=0 shadow, left)",
                            ml.substitute({"y": zero}), lhs))
            triples.append((f"n={n}, m={m} (y=0 shadow, right)",
                            mr.substitute({"y": zero}), rhs))
    return _poly_sweep(triples, perturb)


# -- exact: q-Hermite connections ----------------------------------------------


@_case("hxa-hx",
       "the shift-parameter q-Hermite expands over plain q-Hermite "
       "polynomials with alternating q-power a-binomial weights",
       "exact-poly", 8,
       "a symbolic; q bound rational; z Laurent variable; n swept",
       "0 < |q| < 1",
       defaults={"q": Fraction(1, 2)})
def _run_hxa_hx(order, params, rng, perturb):
    q = _exact_q(params)
    av = MultiPoly.var("a")
    triples = []
    for n in range(order + 1):
        lhs = big_qhermite_laurent(n, "a", q).to_x_poly()
        rhs = MultiPoly.const(0)
        for k in range(n + 1):
            w = qbinom(n, k, q) * Fraction((-1) ** k) * q ** tri(k)
            rhs = rhs + av ** k * qhermite_laurent(n - k, q).to_x_poly() * w
        triples.append((f"n={n}", lhs, rhs))
    return _poly_sweep(triples, perturb)


@_case("hx-hxa",
       "plain q-Hermite expands over shift-parameter q-Hermite polynomials "
       "with a-binomial weights",
       "exact-poly", 8,
       "a symbolic; q bound rational; z Laurent variable; n swept",
       "0 < |q| < 1",
       defaults={"q": Fraction(1, 2)})
def _run_hx_hxa(order, params, rng, perturb):
    q = _exact_q(params)
    av = MultiPoly.var("a")
    triples = []
    for n in range(order + 1):
        lhs = qhermite_laurent(n, q).to_x_poly()
        rhs = MultiPoly.const(0)
        for k in range(n + 1):
            rhs = rhs + av ** k * big_qhermite_laurent(n - k, "a", q).to_x_poly() \
                * qbinom(n, k, q)
        triples.append((f"n={n}", lhs, rhs))
    return _poly_sweep(triples, perturb)


@_case("cb-hermite",
       "q-Hermite change of base: H_n(x|p) equals the c_(n,n-2j)(p,q) "
       "combination of H_(n-2j)(x|q)",
       "exact-poly", 8,
       "x symbolic; p, q bound rationals; n swept to the order bound",
       "0 < |p| < 1, 0 < |q| < 1",
       defaults={"p": Fraction(1, 3), "q": Fraction(1, 2)})
def _run_cb_hermite(order, params, rng, perturb):
    q = _exact_q(params)
    p = _exact_q(params, "p")
    triples = []
    for n in range(order + 1):
        lhs = qhermite_poly(n, p)
        rhs = MultiPoly.const(0)
        for j in range(n // 2 + 1):
            rhs = rhs + qhermite_poly(n - 2 * j, q) * change_base_c(n, j, p, q)
        triples.append((f"n={n}", lhs, rhs))
    return _poly_sweep(triples, perturb)


@_case("cb-big",
       "change of base for the shift-parameter q-Hermite family via the "
       "three-step composition of expansions",
       "exact-poly", 6,
       "x symbolic; a, p, q bound rationals; n swept to the order bound",
       "0 < |p| < 1, 0 < |q| < 1",
       defaults={"a": Fraction(1, 4), "p": Fraction(1, 3), "q": Fraction(1, 2)})
def _run_cb_big(order, params, rng, perturb):
    q = _exact_q(params)
    p = _exact_q(params, "p")
    a = frac(params["a"])
    triples = []
    for n in range(order + 1):
        lhs = big_qhermite_poly(n, a, p)
        rhs = MultiPoly.const(0)
        for m, e in change_base_big(n, a, p, q):
            if e:
                rhs = rhs + big_qhermite_poly(m, a, q) * e
        triples.append((f"n={n}", lhs, rhs))
    return _poly_sweep(triples, perturb)


# -- numeric-complex checks ----------------------------------------------------


@_case("phi32-transform",
       "three-term transformation of a 3phi2 at argument de/(abc) into one "
       "at argument e/a with an infinite-product prefactor",
       "numeric-complex", 0,
       "a, b, c, d, e drawn complex; q bound",
       "|q| < 1; draw guards keep both arguments below 0.9",
       defaults={"q": 0.3, "tol": NUMERIC_TOL})
def _run_phi32(order, params, rng, perturb):
    q = float(params["q"])
    tol = float(params["tol"])
    rows = []
    for i in range(NUMERIC_DRAWS):
        a = _draw_complex(rng, 0.6, 0.9)
        b = _draw_complex(rng, 0.6, 0.9)
        c = _draw_complex(rng, 0.6, 0.9)
        d = _draw_complex(rng, 0.1, 0.25)
        e = _draw_complex(rng, 0.1, 0.25)
        z1 = d * e / (a * b * c)
        lhs = phi_sum([a, b, c], [d, e], q, z1)
        pref = qpoch_inf(e / a, q) * qpoch_inf(d * e / (b * c), q) \
            / (qpoch_inf(e, q) * qpoch_inf(z1, q))
        rhs = pref * phi_sum([a, d / b, d / c], [d, d * e / (b * c)], q, e / a)
        rows.append((f"draw {i}: a={a:.4f} b={b:.4f} c={c:.4f} d={d:.4f} e={e:.4f}",
                     [lhs, rhs]))
    return _numeric_verdict(rows, tol, perturb)


@_case("nonsym-poisson",
       "nonsymmetric Poisson kernel for the shift-parameter q-Hermite "
       "family: H_n(x;a)H_n(y;b) sum vs its 3phi2 product form, and vs the "
       "circle substitution into the bivariate kernel formula",
       "numeric-complex", 0,
       "theta, beta, a, b, t drawn; q bound",
       "|q| < 1; |t| <= 0.4; 0.05 <= |a|,|b| <= 0.5",
       defaults={"q": 0.3, "tol": NUMERIC_TOL})
def _run_nonsym_poisson(order, params, rng, perturb):
    q = float(params["q"])
    tol = float(params["tol"])
    rows = []
    for i in range(NUMERIC_DRAWS):
        theta = 0.3 + 2.5 * rng.random()
        beta = 0.3 + 2.5 * rng.random()
        a = _draw_complex(rng, 0.05, 0.5)
        b = _draw_complex(rng, 0.1, 0.5)
        t = _draw_complex(rng, 0.05, 0.4)
        zt = cmath.exp(1j * theta)
        zb = cmath.exp(1j * beta)

        def lhs_terms():
            qq = 1.0
            tn = 1.0 + 0j
            n = 0
            while True:
                if n:
                    qq *= 1 - q ** n
                    tn *= t
                yield qhermite_eval(n, a, q, theta) \
                    * qhermite_eval(n, b, q, beta) * tn / qq
                n += 1

        lhs = _sum_terms(lhs_terms(), abs(t), tol / 10)
        pref = qpoch_inf(a * t * zb, q) * qpoch_inf(b / zb, q) * qpoch_inf(t * t, q) \
            / (qpoch_inf(t * zt * zb, q) * qpoch_inf(t * zt / zb, q)
               * qpoch_inf(t / (zt * zb), q) * qpoch_inf(t * zb / zt, q))
        rhs1 = pref * phi_sum([t * zt * zb, t * zb / zt, a * t / b],
                              [a * t * zb, t * t], q, b / zb)
        xs, ys, us, vs = zt ** -2, a / zt, zb ** -2, b / zb
        ts = t * zt * zb
        pref2 = qpoch_inf(ys * ts, q) * qpoch_inf(vs * xs * ts, q) \
            / (qpoch_inf(ts, q) * qpoch_inf(xs * ts, q) * qpoch_inf(us * xs * ts, q))
        rhs2 = pref2 * phi_sum([ys, xs * ts, vs / us],
                               [ys * ts, vs * xs * ts], q, us * ts)
        rows.append((f"draw {i}: theta={theta:.4f} beta={beta:.4f} "
                     f"a={a:.4f} b={b:.4f} t={t:.4f}", [lhs, rhs1, rhs2]))
    return _numeric_verdict(rows, tol, perturb)


@_case("rogers-big",
       "Rogers formula on the circle: the H_(n+m)(x;a|q) double sum equals "
       "the (as;q)_oo prefactor times a 2phi1 in argument t e^(i theta)",
       "numeric-complex", 0,
       "theta, a, s, t drawn; q bound",
       "|q| < 1; |s|,|t| <= 0.4; |a| <= 0.5",
       defaults={"q": 0.3, "tol": NUMERIC_TOL})
def _run_rogers_big(order, params, rng, perturb):
    q = float(params["q"])
    tol = float(params["tol"])
    rows = []
    for i in range(NUMERIC_DRAWS):
        theta = 0.3 + 2.5 * rng.random()
        a = _draw_complex(rng, 0.05, 0.5)
        s = _draw_complex(rng, 0.05, 0.4)
        t = _draw_complex(rng, 0.05, 0.4)
        z = cmath.exp(1j * theta)
        qq = [1.0]

        def lhs_terms():
            big = 0
            while True:
                while len(qq) <= big:
                    qq.append(qq[-1] * (1 - q ** len(qq)))
                w = sum(t ** n * s ** (big - n) / (qq[n] * qq[big - n])
                        for n in range(big + 1))
                yield qhermite_eval(big, a, q, theta) * w
                big += 1

        lhs = _sum_terms(lhs_terms(), max(abs(s), abs(t)), tol / 10)
        rhs = qpoch_inf(a * s, q) \
            / (qpoch_inf(s * z, q) * qpoch_inf(s / z, q) * qpoch_inf(t / z, q)) \
            * phi_sum([a / z, s / z], [a * s], q, t * z)
        rows.append((f"draw {i}: theta={theta:.4f} a={a:.4f} s={s:.4f} t={t:.4f}",
                     [lhs, rhs]))
    return _numeric_verdict(rows, tol, perturb)


@_case("gf-its-1",
       "even-index q-Hermite generating function: H_(2n) sum with base-q^2 "
       "factorials equals (-t;q)_oo over the (te^(2i theta);q^2) pair",
       "numeric-complex", 0,
       "theta, t drawn; q bound",
       "|q| < 1; |t| <= 0.4",
       defaults={"q": 0.3, "tol": NUMERIC_TOL})
def _run_gf_its_1(order, params, rng, perturb):
    q = float(params["q"])
    tol = float(params["tol"])
    q2 = q * q
    rows = []
    for i in range(NUMERIC_DRAWS):
        theta = 0.3 + 2.5 * rng.random()
        t = _draw_complex(rng, 0.05, 0.4)
        z2 = cmath.exp(2j * theta)

        def lhs_terms():
            qq = 1.0
            tn = 1.0 + 0j
            n = 0
            while True:
                if n:
                    qq *= 1 - q2 ** n
                    tn *= t
                yield qhermite_eval(2 * n, 0.0, q, theta) * tn / qq
                n += 1

        lhs = _sum_terms(lhs_terms(), abs(t), tol / 10)
        rhs = qpoch_inf(-t, q) / (qpoch_inf(t * z2, q2) * qpoch_inf(t / z2, q2))
        rows.append((f"draw {i}: theta={theta:.4f} t={t:.4f}", [lhs, rhs]))
    return _numeric_verdict(rows, tol, perturb)


@_case("gf-its-2",
       "base-q^2 q-Hermite generating function: H_n(x|q^2) sum with base-q "
       "factorials equals (qt^2;q^2)_oo over the (te^(i theta);q) pair",
       "numeric-complex", 0,
       "theta, t drawn; q bound",
       "|q| < 1; |t| <= 0.4",
       defaults={"q": 0.3, "tol": NUMERIC_TOL})
def _run_gf_its_2(order, params, rng, perturb):
    q = float(params["q"])
    tol = float(params["tol"])
    q2 = q * q
    rows = []
    for i in range(NUMERIC_DRAWS):
        theta = 0.3 + 2.5 * rng.random()
        t = _draw_complex(rng, 0.05, 0.4)
        z = cmath.exp(1j * theta)

        def lhs_terms():
            qq = 1.0
            tn = 1.0 + 0j
            n = 0
            while True:
                if n:
                    qq *= 1 - q ** n
                    tn *= t
                yield qhermite_eval(n, 0.0, q2, theta) * tn / qq
                n += 1

        lhs = _sum_terms(lhs_terms(), abs(t), tol / 10)
        rhs = qpoch_inf(q * t * t, q2) / (qpoch_inf(t * z, q) * qpoch_inf(t / z, q))
        rows.append((f"draw {i}: theta={theta:.4f} t={t:.4f}", [lhs, rhs]))
    return _numeric_verdict(rows, tol, perturb)


@_case("gen-big-1",
       "even-type generating identity for the shift-parameter family: the "
       "a^(n-2k) t^(n-k) coefficient sum against H_n(x;a|q) equals the "
       "(a^2 t;q^2)(-t;q) product over the (te^(2i theta);q^2) pair",
       "numeric-complex", 0,
       "theta, a, t drawn; q bound",
       "|q| < 1; |t| <= 0.4; |a| <= 0.5",
       defaults={"q": 0.3, "tol": NUMERIC_TOL})
def _run_gen_big_1(order, params, rng, perturb):
    q = float(params["q"])
    tol = float(params["tol"])
    q2 = q * q
    rows = []
    for i in range(NUMERIC_DRAWS):
        theta = 0.3 + 2.5 * rng.random()
        a = _draw_complex(rng, 0.05, 0.5)
        t = _draw_complex(rng, 0.05, 0.4)
        z2 = cmath.exp(2j * theta)
        qq, qq2 = [1.0], [1.0]

        def coef(n):
            while len(qq) <= n:
                qq.append(qq[-1] * (1 - q ** len(qq)))
            while len(qq2) <= n:
                qq2.append(qq2[-1] * (1 - q2 ** len(qq2)))
            return sum(q ** tri(n - 2 * k) * a ** (n - 2 * k) * t ** (n - k)
                       / (qq2[k] * qq[n - 2 * k]) for k in range(n // 2 + 1))

        lhs = _sum_terms((coef(n) * qhermite_eval(n, a, q, theta)
                          for n in range(10 ** 9)),
                         math.sqrt(abs(t)), tol / 10)
        rhs = qpoch_inf(a * a * t, q2) * qpoch_inf(-t, q) \
            / (qpoch_inf(t * z2, q2) * qpoch_inf(t / z2, q2))
        rows.append((f"draw {i}: theta={theta:.4f} a={a:.4f} t={t:.4f}",
                     [lhs, rhs]))
    return _numeric_verdict(rows, tol, perturb)


@_case("gen-big-2",
       "odd-type generating identity: the (-1)^k q^(k^2) a^k t^(n+k) "
       "coefficient sum against H_n(x;a|q^2) equals the (at;q)(qt^2;q^2) "
       "product over the (te^(i theta);q) pair",
       "numeric-complex", 0,
       "theta, a, t drawn; q bound",
       "|q| < 1; |t| <= 0.4; |a| <= 0.5",
       defaults={"q": 0.3, "tol": NUMERIC_TOL})
def _run_gen_big_2(order, params, rng, perturb):
    q = float(params["q"])
    tol = float(params["tol"])
    q2 = q * q
    rows = []
    for i in range(NUMERIC_DRAWS):
        theta = 0.3 + 2.5 * rng.random()
        a = _draw_complex(rng, 0.05, 0.5)
        t = _draw_complex(rng, 0.05, 0.4)
        z = cmath.exp(1j * theta)
        qq, qq2 = [1.0], [1.0]

        def coef(n):
            while len(qq) <= n:
                qq.append(qq[-1] * (1 - q ** len(qq)))
            while len(qq2) <= n:
                qq2.append(qq2[-1] * (1 - q2 ** len(qq2)))
            return sum((-1) ** k * q ** (k * k) * a ** k * t ** (n + k)
                       / (qq2[k] * qq[n - k]) for k in range(n + 1))

        lhs = _sum_terms((coef(n) * qhermite_eval(n, a, q2, theta)
                          for n in range(10 ** 9)),
                         abs(t), tol / 10)
        rhs = qpoch_inf(a * t, q) * qpoch_inf(q * t * t, q2) \
            / (qpoch_inf(t * z, q) * qpoch_inf(t / z, q))
        rows.append((f"draw {i}: theta={theta:.4f} a={a:.4f} t={t:.4f}",
                     [lhs, rhs]))
    return _numeric_verdict(rows, tol, perturb)


@_case("gf-big",
       "generating function of the shift-parameter q-Hermite family: the "
       "H_n(x;a|q) sum equals (at;q)_oo over the (te^(i theta);q) pair",
       "numeric-complex", 0,
       "theta, a, t drawn; q bound",
       "|q| < 1; |t| <= 0.4; |a| <= 0.5",
       defaults={"q": 0.3, "tol": NUMERIC_TOL})
def _run_gf_big(order, params, rng, perturb):
    q = float(params["q"])
    tol = float(params["tol"])
    rows = []
    for i in range(NUMERIC_DRAWS):
        theta = 0.3 + 2.5 * rng.random()
        a = _draw_complex(rng, 0.05, 0.5)
        t = _draw_complex(rng, 0.05, 0.4)
        z = cmath.exp(1j * theta)

        def lhs_terms():
            qq = 1.0
            tn = 1.0 + 0j
            n = 0
            while True:
                if n:
                    qq *= 1 - q ** n
                    tn *= t
                yield qhermite_eval(n, a, q, theta) * tn / qq
                n += 1

        lhs = _sum_terms(lhs_terms(), abs(t), tol / 10)
        rhs = qpoch_inf(a * t, q) / (qpoch_inf(t * z, q) * qpoch_inf(t / z, q))
        rows.append((f"draw {i}: theta={theta:.4f} a={a:.4f} t={t:.4f}",
                     [lhs, rhs]))
    return _numeric_verdict(rows, tol, perturb)


# -- quadrature checks ----------------------------------------------------------


@_case("askey-wilson",
       "four-parameter circle weight integral against its closed "
       "(abcd;q)_oo over pairwise-products form",
       "quadrature", 0,
       "a, b, c, d, q bound floats",
       "|a|,|b|,|c|,|d|,|q| < 1",
       defaults={"a": 0.3, "b": 0.25, "c": 0.2, "d": 0.1, "q": 0.5,
                 "tol": QUAD_TOL})
def _run_askey_wilson(order, params, rng, perturb):
    a, b, c, d, q = (float(params[k]) for k in "abcdq")
    tol = float(params["tol"])
    for name in "abcdq":
        if not abs(float(params[name])) < 1:
            raise ValueError(f"parameter {name} must satisfy |{name}| < 1")
    lhs = askey_wilson_quad(a, b, c, d, q, tol=min(tol * 1e-2, 1e-10))
    if perturb:
        lhs += 1e-3
    rhs = askey_wilson_closed(a, b, c, d, q)
    resid = abs(lhs - rhs) / max(abs(rhs), 1e-300)
    if resid <= tol:
        return "pass", resid, None
    return "fail", resid, clip_witness(f"integral {lhs!r} vs product {rhs!r}")


@_case("ortho-big",
       "orthogonality of the shift-parameter q-Hermite family: the "
       "weighted moment integral equals (q;q)_n on the diagonal, 0 off it",
       "quadrature", 0,
       "n, m, a, q bound",
       "n, m <= 8; |a| < 1; |q| < 1",
       defaults={"n": 3, "m": 3, "a": 0.3, "q": 0.4, "tol": QUAD_TOL})
def _run_ortho_big(order, params, rng, perturb):
    n, m = int(params["n"]), int(params["m"])
    a, q = float(params["a"]), float(params["q"])
    tol = float(params["tol"])
    if not (abs(a) < 1 and abs(q) < 1):
        raise ValueError("need |a| < 1 and |q| < 1")
    val, _ = integrate(ortho_integrand(n, m, a, q), 0.0, math.pi,
                       min(tol * 1e-2, 1e-10))
    lhs = qpoch_inf(q, q).real / (2 * math.pi) * val
    if perturb:
        lhs += 1e-3
    rhs = qpoch_n(q, q, n).real if n == m else 0.0
    resid = abs(lhs - rhs)
    if resid <= tol:
        return "pass", resid, None
    return "fail", resid, clip_witness(f"moment({n},{m}) = {lhs!r}, expected {rhs!r}")


def _run_closed_h(variant):
    def run(order, params, rng, perturb):
        q, a, t = float(params["q"]), float(params["a"]), float(params["t"])
        tol = float(params["tol"])
        if not (abs(q) < 1 and abs(a) < 1 and abs(t) < 1):
            raise ValueError("need |q|, |a|, |t| < 1")
        if variant == "qq":
            p, sub, rhs = q, q, 1.0
        elif variant == "mqq":
            p, sub, rhs = -q, q, 1.0
        elif variant == "q2q":
            p, sub = q * q, q
            rhs = qpoch_inf(q * q * t * t, q ** 4).real
        else:
            p, sub = q * q, q ** 3
            rhs = (qpoch_inf(a * t ** 3 * q ** 6, q ** 6)
                   / qpoch_inf(t * t * q ** 4, q ** 4)).real
        lhs = jhi_eval("H", p, sub, a, t, tol=min(tol * 1e-2, 1e-10))
        if perturb:
            lhs += 1e-3
        resid = abs(lhs - rhs) / max(abs(rhs), 1e-300)
        if resid <= tol:
            return "pass", resid, None
        return "fail", resid, clip_witness(f"integral {lhs!r} vs product {rhs!r}")
    return run


for _variant, _blurb in (
        ("qq", "equal bases: the mixed-base moment integral collapses to 1"),
        ("mqq", "negated base: the mixed-base moment integral collapses to 1"),
        ("q2q", "squared base: the moment integral equals (q^2 t^2; q^4)_oo"),
        ("q2q3", "squared/cubed bases: the moment integral equals "
                 "(at^3 q^6;q^6)_oo / (t^2 q^4;q^4)_oo")):
    _REGISTRY[f"closed-H-{_variant}"] = IdentityCase(
        id=f"closed-H-{_variant}", description=_blurb, mode="quadrature",
        default_order=0, symbols="a, t, q bound floats",
        domain="|q|, |a|, |t| < 1",
        defaults={"q": 0.3, "a": 0.1, "t": 0.2, "tol": CLOSED_TOL},
        runner=_run_closed_h(_variant))
