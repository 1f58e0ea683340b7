"""Numeric infinite products and deterministic adaptive quadrature for the
weight-function integrals attached to the q-Hermite families.

The integrator is a Gauss-Kronrod 7/15 embedded pair with interval halving:
the worst panel (largest error estimate) is split until the error budget or
the evaluation budget is met, and the final sum runs over panels sorted by
left endpoint so results are reproducible run to run.
"""

from __future__ import annotations

import heapq
import math
import time
from dataclasses import dataclass

from .families import qhermite_eval
from .reporting import IdentityReport

EVAL_BUDGET = 2_000_000
_PROD_EPS = 1e-17

# 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


@dataclass(frozen=True)
class ProductSpec:
    """Product of q-shifted factorials: prod over (c, base) of (c; base)_oo."""

    factors: tuple

    def value(self) -> complex:
        return inf_product(self)


def inf_product(spec) -> complex:
    """Numeric (c1; b1)_oo (c2; b2)_oo ... for |b_i| < 1.

    Each factor is truncated at K = ceil(log(eps)/log(max |base|)) + 8
    terms, past which the remaining factors differ from 1 by less than
    eps = 1e-17 relative.
    """
    factors = spec.factors if isinstance(spec, ProductSpec) else tuple(spec)
    if not factors:
        return 1.0 + 0j
    maxbase = max(abs(b) for _, b in factors)
    if maxbase >= 1:
        raise ValueError("inf_product needs |base| < 1")
    if maxbase == 0:
        K = 1
    else:
        K = math.ceil(math.log(_PROD_EPS) / math.log(maxbase)) + 8
    total = 1.0 + 0j
    for c, base in factors:
        c = complex(c)
        bk = 1.0
        for _ in range(K):
            total *= 1 - c * bk
            bk *= base
    return total


def qpoch_inf(c, base) -> complex:
    """Single infinite factor (c; base)_oo."""
    return inf_product(((c, base),))


def qpoch_n(c, base, n: int) -> complex:
    """Finite numeric (c; base)_n."""
    total = 1.0 + 0j
    bk = 1.0
    for _ in range(n):
        total *= 1 - complex(c) * bk
        bk *= base
    return total


class QuadratureError(RuntimeError):
    pass


@dataclass
class IntegralSpec:
    """An integral of a smooth real integrand over [lo, hi]."""

    integrand: object
    lo: float = 0.0
    hi: float = math.pi
    prefactor: float = 1.0
    tol: float = 1e-10
    budget: int = EVAL_BUDGET


def _gk15(f, a: float, b: float):
    """Gauss-Kronrod 7/15 on [a, b]: (kronrod, |kronrod - gauss|)."""
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = f(mid)
    kron = _WGK[7] * fc
    gauss = _WG[3] * fc
    for i in range(7):
        dx = half * _XGK[i]
        fsum = f(mid - dx) + f(mid + dx)
        kron += _WGK[i] * fsum
        if i % 2 == 1:
            gauss += _WG[i // 2] * fsum
    kron *= half
    gauss *= half
    return kron, abs(kron - gauss)


def integrate(spec, lo: float | None = None, hi: float | None = None,
              tol: float | None = None, budget: int | None = None):
    """Adaptive integral of a callable or an IntegralSpec.

    Returns (value, error_estimate). Panels are split worst-first; the
    final value sums panels ordered by left endpoint. Raises
    QuadratureError if the tolerance cannot be met inside the evaluation
    budget.
    """
    if isinstance(spec, IntegralSpec):
        f, lo, hi = spec.integrand, spec.lo, spec.hi
        tol = spec.tol if tol is None else tol
        budget = spec.budget if budget is None else budget
        pref = spec.prefactor
    else:
        f = spec
        lo = 0.0 if lo is None else lo
        hi = math.pi if hi is None else hi
        tol = 1e-10 if tol is None else tol
        budget = EVAL_BUDGET if budget is None else budget
        pref = 1.0
    evals = 0
    counter = 0
    val, err = _gk15(f, lo, hi)
    evals += 15
    heap = [(-err, counter, lo, hi, val, err)]
    total_err = err
    while total_err > tol:
        if evals + 30 > budget:
            raise QuadratureError(
                f"evaluation budget {budget} exhausted: error {total_err:.3e} > tol {tol:.3e} "
                f"with {len(heap)} panels")
        nerr, _, a, b, v, e = heapq.heappop(heap)
        m = 0.5 * (a + b)
        v1, e1 = _gk15(f, a, m)
        v2, e2 = _gk15(f, m, b)
        evals += 30
        total_err += e1 + e2 - e
        counter += 1
        heapq.heappush(heap, (-e1, counter, a, m, v1, e1))
        counter += 1
        heapq.heappush(heap, (-e2, counter, m, b, v2, e2))
    panels = sorted((a, v) for _, _, a, _, v, _ in heap)
    total = math.fsum(v for _, v in panels)
    return pref * total, total_err


# -- Askey-Wilson integral ----------------------------------------------------


def _aw_weight(theta: float, q: float) -> float:
    """(e^{2i t}, e^{-2i t}; q)_oo, the free weight of the circle measure."""
    z2 = complex(math.cos(2 * theta), math.sin(2 * theta))
    return (qpoch_inf(z2, q) * qpoch_inf(z2.conjugate(), q)).real


def _param_factor(theta: float, c: complex, base: float) -> complex:
    """(c e^{i t}; base)_oo (c e^{-i t}; base)_oo."""
    z = complex(math.cos(theta), math.sin(theta))
    return qpoch_inf(c * z, base) * qpoch_inf(c * z.conjugate(), base)


def aw_integrand(a: float, b: float, c: float, d: float, q: float):
    def f(theta: float) -> float:
        w = _aw_weight(theta, q)
        den = 1.0 + 0j
        for p in (a, b, c, d):
            if p:
                den *= _param_factor(theta, p, q)
        return (w / den).real
    return f


def askey_wilson_quad(a: float, b: float, c: float, d: float, q: float,
                      tol: float = 1e-10) -> float:
    """Left side: (q;q)_oo/(2 pi) times the weight integral over [0, pi]."""
    val, _ = integrate(aw_integrand(a, b, c, d, q), 0.0, math.pi, tol)
    return qpoch_inf(q, q).real / (2 * math.pi) * val


def askey_wilson_closed(a: float, b: float, c: float, d: float, q: float) -> float:
    num = qpoch_inf(a * b * c * d, q)
    den = 1.0 + 0j
    for u, v in ((a, b), (a, c), (a, d), (b, c), (b, d), (c, d)):
        den *= qpoch_inf(u * v, q)
    return (num / den).real


def askey_wilson_check(a: float, b: float, c: float, d: float, q: float,
                       tol: float = 1e-8) -> IdentityReport:
    """Quadrature vs closed product for the Askey-Wilson integral."""
    started = time.perf_counter()
    for name, p in (("a", a), ("b", b), ("c", c), ("d", d), ("q", q)):
        if abs(p) >= 1:
            raise ValueError(f"parameter {name} must satisfy |{name}| < 1")
    lhs = askey_wilson_quad(a, b, c, d, q, tol=min(tol * 1e-2, 1e-10))
    rhs = askey_wilson_closed(a, b, c, d, q)
    resid = abs(lhs - rhs) / max(abs(rhs), 1e-300)
    report = IdentityReport(
        id="askey-wilson", mode="quadrature", order=None,
        params={"a": a, "b": b, "c": c, "d": d, "q": q},
        status="pass" if resid <= tol else "fail",
        residual=resid,
        description="Askey-Wilson integral against its closed product form",
    )
    if not report.passed():
        report.witness = f"quad {lhs!r} vs closed {rhs!r}"
    report.elapsed_ms = (time.perf_counter() - started) * 1000
    return report


# -- big q-Hermite orthogonality ---------------------------------------------


def ortho_integrand(n: int, m: int, a: float, q: float):
    def f(theta: float) -> float:
        w = _aw_weight(theta, q)
        den = _param_factor(theta, a, q) if a else 1.0
        hn = qhermite_eval(n, a, q, theta)
        hm = qhermite_eval(m, a, q, theta)
        return (w / den * hn * hm).real
    return f


def ortho_check(n: int, m: int, a: float, q: float, tol: float = 1e-8) -> IdentityReport:
    """Orthogonality of H_n(x;a|q): the weighted moment is (q;q)_n delta_nm."""
    started = time.perf_counter()
    val, _ = integrate(ortho_integrand(n, m, a, q), 0.0, math.pi, min(tol * 1e-2, 1e-10))
    lhs = qpoch_inf(q, q).real / (2 * math.pi) * val
    rhs = float(abs(qpoch_n(q, q, n))) if n == m else 0.0
    resid = abs(lhs - rhs)
    report = IdentityReport(
        id="ortho-big", mode="quadrature", order=None,
        params={"n": n, "m": m, "a": a, "q": q},
        status="pass" if resid <= tol else "fail",
        residual=resid,
        description="orthogonality of the big q-Hermite family on [0, pi]",
    )
    if not report.passed():
        report.witness = f"moment({n},{m}) = {lhs!r}, expected {rhs!r}"
    report.elapsed_ms = (time.perf_counter() - started) * 1000
    return report


# -- mixed-base integrals and their closed forms ------------------------------


def jhi_eval(kind: str, p: float, q: float, a: float, t: float,
             tol: float = 1e-10) -> float:
    """The three mixed-base weight integrals.

    J: weight base q, poles (a e^{+-i t}; q), (t e^{+-2i t}; p^2),
       prefactor (q;q)_oo (a^2 t; p^2)_oo (-t; p)_oo / 2 pi.
    H: weight base q^2, poles (a e^{+-i t}; q^2), (t e^{+-i t}; p),
       prefactor (q^2;q^2)_oo (a t; p)_oo (p t^2; p^2)_oo / 2 pi.
    I: weight base q, poles (a e^{+-i t}; q), (t e^{+-i t}; p),
       prefactor (q;q)_oo (a t; p)_oo / 2 pi.
    """
    if kind == "J":
        wbase, abase, tpair, tbase = q, q, 2, p * p
        pref = (qpoch_inf(q, q) * qpoch_inf(a * a * t, p * p) * qpoch_inf(-t, p)).real
    elif kind == "H":
        wbase, abase, tpair, tbase = q * q, q * q, 1, p
        pref = (qpoch_inf(q * q, q * q) * qpoch_inf(a * t, p) * qpoch_inf(p * t * t, p * p)).real
    elif kind == "I":
        wbase, abase, tpair, tbase = q, q, 1, p
        pref = (qpoch_inf(q, q) * qpoch_inf(a * t, p)).real
    else:
        raise ValueError(f"unknown integral kind {kind!r}")

    def f(theta: float) -> float:
        w = _aw_weight(theta, wbase)
        den = _param_factor(theta, a, abase) if a else 1.0
        den *= _param_factor(tpair * theta, t, tbase) if tpair == 1 \
            else _param_factor(2 * theta, t, tbase)
        return (w / den).real

    val, _ = integrate(f, 0.0, math.pi, tol)
    return pref / (2 * math.pi) * val


def closed_forms_suite(q: float, a: float, t: float, tol: float = 1e-7) -> list:
    """The four H-kind integrals that collapse to products.

    H_(q,q) = 1, H_(-q,q) = 1, H_(q^2,q) = (q^2 t^2; q^4)_oo and
    H_(q^2,q^3) = (a t^3 q^6; q^6)_oo / (t^2 q^4; q^4)_oo. Each pair below
    is (computed integral, closed product).
    """
    cases = [
        ("closed-H-qq", dict(p=q, q=q), lambda: 1.0),
        ("closed-H-mqq", dict(p=-q, q=q), lambda: 1.0),
        ("closed-H-q2q", dict(p=q * q, q=q),
         lambda: qpoch_inf(q * q * t * t, q ** 4).real),
        ("closed-H-q2q3", dict(p=q * q, q=q ** 3),
         lambda: (qpoch_inf(a * t ** 3 * q ** 6, q ** 6) / qpoch_inf(t * t * q ** 4, q ** 4)).real),
    ]
    reports = []
    for cid, bases, closed in cases:
        started = time.perf_counter()
        val = jhi_eval("H", bases["p"], bases["q"], a, t, tol=min(tol * 1e-2, 1e-10))
        want = closed()
        resid = abs(val - want) / max(abs(want), 1e-300)
        rep = IdentityReport(
            id=cid, mode="quadrature", order=None,
            params={"q": q, "a": a, "t": t, **{k: float(v) for k, v in bases.items()}},
            status="pass" if resid <= tol else "fail",
            residual=resid,
            description="mixed-base q-Hermite moment integral with a closed product value",
        )
        if not rep.passed():
            rep.witness = f"integral {val!r} vs product {want!r}"
        rep.elapsed_ms = (time.perf_counter() - started) * 1000
        reports.append(rep)
    return reports
