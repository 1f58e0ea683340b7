"""q-operator calculus: the q-derivative D_q, the exponential-type operator
T(b D_q), the Cauchy-basis divided difference D_xy, and E(D_xy).

Operators act on truncated series (D_q in the series variable a) or on
Cauchy-basis expansions (D_xy). Both are degree lowering, so on truncated
or finite operands every operator sum below is finite and introduces no
truncation error of its own.
"""

from __future__ import annotations

import time
from fractions import Fraction

from .families import CauchyExpansion, brs_poly
from .fps import (PhiSpec, TruncSeries, euler_inv_series, euler_series,
                  phi_series)
from .qcore import MultiPoly, frac, qfac
from .reporting import IdentityReport, clip_witness


def dq_apply(f: TruncSeries, q: Fraction, var: str | None = None) -> TruncSeries:
    """q-derivative in the series variable: a^n -> (1 - q^n) a^(n-1).

    Equals (f(a) - f(aq))/a. One order of knowledge is consumed: the output
    order drops by one, because the input's missing tail would have fed the
    top coefficient.
    """
    q = frac(q)
    if len(f.vars) != 1 and var is None:
        raise ValueError("dq_apply needs the variable name for bivariate series")
    pos = 0 if var is None else f.vars.index(var)
    if f.order == 0:
        raise ValueError("cannot lower the order of an order-0 series")
    out = {}
    for idx, c in f.coeffs.items():
        n = idx[pos]
        if n == 0:
            continue
        new = list(idx)
        new[pos] = n - 1
        out[tuple(new)] = c * (1 - q ** n)
    return TruncSeries(f.vars, f.order - 1, out)


def t_op_apply(b, f: TruncSeries, q: Fraction, terms: int | None = None) -> TruncSeries:
    """T(b D_q) f = sum_n (b D_q)^n f / (q;q)_n on a univariate series.

    b is a ring element. The coefficient of a^m keeps contributions from
    operator terms n <= f.order - m, which is every nonzero one when f is an
    exact polynomial padded to at least twice its degree; for genuine
    truncations it is the graded reading (b counted as degree 1).
    """
    q = frac(q)
    n_max = f.order if terms is None else min(terms, f.order)
    acc = dict(f.coeffs)
    g = f
    bpow = b
    for n in range(1, n_max + 1):
        g = dq_apply(g, q)
        w = Fraction(1) / qfac(q, n)
        for idx, c in g.coeffs.items():
            add = c * w * bpow
            acc[idx] = acc[idx] + add if idx in acc else add
        bpow = bpow * b
    return TruncSeries(f.vars, f.order, acc)


def t_op_graded(f: TruncSeries, q: Fraction, bvar: str = "b") -> TruncSeries:
    """T(b D_q) f with b tracked as a second series variable.

    The image's (a^m, b^n) coefficient is exact whenever m + n <= f.order,
    so the result is a bivariate series truncated at total degree f.order.
    This is the exactifiable form of the operator on infinite operands.
    """
    q = frac(q)
    avar = f.vars[0]
    if len(f.vars) != 1:
        raise ValueError("t_op_graded expects a univariate series")
    variables = tuple(sorted((avar, bvar)))
    apos = variables.index(avar)
    out = {}
    g = f
    for n in range(f.order + 1):
        if n > 0:
            g = dq_apply(g, q)
        w = Fraction(1) / qfac(q, n)
        for (m,), c in g.coeffs.items():
            idx = [0, 0]
            idx[apos] = m
            idx[1 - apos] = n
            out[tuple(idx)] = c * w
    return TruncSeries(variables, f.order, out)


# -- Cauchy-basis operators ---------------------------------------------------


def dxy_apply(f: CauchyExpansion) -> CauchyExpansion:
    """Divided difference on the Cauchy basis: P_n -> (1 - q^n) P_(n-1)."""
    q = f.q
    return CauchyExpansion(
        [f.coefficient(k + 1) * (1 - q ** (k + 1)) for k in range(len(f) - 1)], q)


def dxy_poly(f: MultiPoly, q: Fraction, x: str = "x", y: str = "y") -> MultiPoly:
    """The defining quotient (f(x, y/q) - f(qx, y)) / (x - y/q).

    Only defined on the span of the Cauchy basis, where the division is
    exact; anything else raises. Serves as the independent route for testing
    dxy_apply.
    """
    q = frac(q)
    numer = f.substitute({y: MultiPoly.var(y) * (Fraction(1) / q)}) \
        - f.substitute({x: MultiPoly.var(x) * q})
    return _divide_linear(numer, x, MultiPoly.var(y) * (Fraction(1) / q))


def _divide_linear(f: MultiPoly, x: str, beta: MultiPoly) -> MultiPoly:
    """Exact division of f by (x - beta) with beta free of x."""
    by_deg = f.as_univariate(x)
    d = max(by_deg, default=0)
    xv = MultiPoly.var(x)
    quot = MultiPoly.const(0)
    carry = MultiPoly.const(0)
    for i in range(d, 0, -1):
        coef = by_deg.get(i, MultiPoly.const(0)) + carry
        quot = quot + xv ** (i - 1) * coef
        carry = coef * beta
    rem = by_deg.get(0, MultiPoly.const(0)) + carry
    if not rem.is_zero():
        raise ValueError("division by (x - y/q) is not exact")
    return quot


def e_op_apply(operand: TruncSeries, route: str = "basis") -> TruncSeries:
    """E(D_xy) = sum_k D_xy^k/(q;q)_k on a series of Cauchy expansions.

    Each coefficient maps P_k -> h_k(x,y|q). route='basis' substitutes the
    bivariate Rogers-Szego polynomials directly; route='operator' applies
    the finite D_xy sum. The two agree, which the tests pin down.
    """
    out = {}
    for idx, c in operand.coeffs.items():
        if not isinstance(c, CauchyExpansion):
            raise TypeError("e_op_apply expects CauchyExpansion coefficients")
        out[idx] = e_apply_expansion(c, route)
    return TruncSeries(operand.vars, operand.order, out)


def e_apply_expansion(f: CauchyExpansion, route: str = "basis") -> MultiPoly:
    q = f.q
    if route == "basis":
        out = MultiPoly.const(0, ("x", "y"))
        for k, c in enumerate(f.coeffs):
            out = out + brs_poly(k, q) * c
        return out
    if route == "operator":
        out = MultiPoly.const(0, ("x", "y"))
        g = f
        j = 0
        while len(g):
            out = out + g.to_poly() * (Fraction(1) / qfac(q, j))
            g = dxy_apply(g)
            j += 1
        return out
    raise ValueError(f"unknown route {route!r}")


def cauchy_operand(polys: dict, q: Fraction, order: int, cap: int | None = None,
                   variables=("t",)) -> TruncSeries:
    """Build a series of CauchyExpansion coefficients from MultiPoly ones."""
    from .families import poly_to_cauchy
    lifted = {idx: p if isinstance(p, MultiPoly) else MultiPoly.const(p)
              for idx, p in polys.items()}
    return TruncSeries(variables, order,
                       {idx: poly_to_cauchy(p, q, cap) for idx, p in lifted.items()})


# -- the two-parameter operator product transformation -----------------------


def t_op_product_sides(s, t, v, w, q: Fraction, order: int):
    """Both sides of T(bD_q){(av;q)_oo / ((as,at,aw;q)_oo)} as exact
    bivariate series in (a, b), truncated at total degree `order`.

    w = 0 gives the two-denominator-factor special case. Every coefficient
    is rational: the operator side is the graded T action on the a-series
    operand; the closed side is Euler products times a 3phi2 whose v/w
    parameter is handled as a homogenized ratio, so w = 0 stays polynomial.
    """
    s, t, v, w, q = frac(s), frac(t), frac(v), frac(w), frac(q)
    if not v:
        raise ValueError("v must be nonzero (it divides the 3phi2 argument)")
    a1 = TruncSeries.variable(("a",), order, "a")
    operand = euler_series(a1.scale(v), q) \
        * euler_inv_series(a1.scale(s), q) \
        * euler_inv_series(a1.scale(t), q) \
        * euler_inv_series(a1.scale(w), q)
    lhs = t_op_graded(operand, q, bvar="b")

    ab = ("a", "b")
    av = TruncSeries.variable(ab, order, "a")
    bv = TruncSeries.variable(ab, order, "b")
    abm = TruncSeries.monomial(ab, order, (1, 1))
    closed = euler_series(av.scale(v), q) * euler_series(bv.scale(v), q) \
        * euler_series(abm.scale(s * t * w / v), q)
    for c in (s, t, w):
        closed = closed * euler_inv_series(av.scale(c), q) \
            * euler_inv_series(bv.scale(c), q)
    spec = PhiSpec(
        upper=(v / s, v / t),
        ratio_upper=((v, w),),
        lower=(av.scale(v), bv.scale(v)),
        q=q,
        argument=abm.scale(s * t / v),
    )
    rhs = closed * phi_series(spec)
    return lhs, rhs


def zhang_wang_check(b, s, t, v, w, q: Fraction, order: int = 8) -> IdentityReport:
    """Machine check of the three-factor operator product transformation.

    The identity is verified as an exact bivariate (a,b) series at the given
    total order; the supplied b is recorded (any bound value follows from
    the graded statement) and must sit in (-1, 1) like the other parameters.
    """
    started = time.perf_counter()
    params = {"b": frac(b), "s": frac(s), "t": frac(t), "v": frac(v),
              "w": frac(w), "q": frac(q)}
    for name, val in params.items():
        if not abs(val) < 1:
            raise ValueError(f"parameter {name} must lie in (-1, 1)")
    lhs, rhs = t_op_product_sides(s, t, v, w, q, order)
    diff = lhs.diff_witness(rhs)
    report = IdentityReport(
        id="zhang-wang", mode="exact-series", order=order, params=params,
        description="q-exponential operator product transformation, three factors",
    )
    if diff is None:
        report.status = "exact-pass"
    else:
        idx, delta = diff
        report.status = "fail"
        report.witness = clip_witness(f"a^{idx[0]} b^{idx[1]}: {delta}")
    report.elapsed_ms = (time.perf_counter() - started) * 1000
    return report
