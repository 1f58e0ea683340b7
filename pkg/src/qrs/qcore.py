"""Exact arithmetic kernel: rationals, multivariate polynomials, Laurent
polynomials, q-shifted factorials and Gaussian binomials.

All exact values are arbitrary-precision rationals (fractions.Fraction).
Polynomials are immutable once built; every operation returns a new object,
so cached values can be shared freely between threads and callers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

ExactScalar = Fraction


def frac(value) -> Fraction:
    """Coerce ints, Fractions or 'num/den' strings to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def tri(k: int) -> int:
    """Triangular exponent k(k-1)/2, as appears in q^(k choose 2) factors."""
    return k * (k - 1) // 2


def _is_scalar(v) -> bool:
    return isinstance(v, (int, Fraction))


class MultiPoly:
    """Multivariate polynomial with Fraction coefficients.

    Terms are stored sparsely as a dict from exponent tuples to nonzero
    coefficients. The variable list is sorted by name at construction and
    exponent tuples are dense with respect to it. Operations on polynomials
    over different variable sets promote both to the sorted union.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        order = tuple(sorted(variables))
        if order != variables:
            pos = [variables.index(v) for v in order]
            terms = {tuple(e[p] for p in pos): c for e, c in terms.items()}
        clean = {}
        for exp, coef in terms.items():
            coef = coef if isinstance(coef, Fraction) else Fraction(coef)
            if coef:
                clean[tuple(exp)] = coef
        object.__setattr__(self, "vars", order)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, c, variables=()) -> "MultiPoly":
        c = c if isinstance(c, Fraction) else Fraction(c)
        if not c:
            return cls(variables, {})
        return cls(variables, {(0,) * len(tuple(variables)): c})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls((name,), {(1,): Fraction(1)})

    @classmethod
    def monomial(cls, exps: dict, coef=1) -> "MultiPoly":
        names = tuple(sorted(exps))
        return cls(names, {tuple(exps[n] for n in names): Fraction(coef)})

    # -- alignment ----------------------------------------------------

    def _remap(self, newvars) -> "MultiPoly":
        if newvars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(newvars)}
        terms = {}
        for exp, c in self.terms.items():
            new = [0] * len(newvars)
            for v, e in zip(self.vars, exp):
                new[pos[v]] = e
            terms[tuple(new)] = c
        return MultiPoly(newvars, terms)

    @staticmethod
    def _aligned(a: "MultiPoly", b: "MultiPoly"):
        if a.vars == b.vars:
            return a, b
        union = tuple(sorted(set(a.vars) | set(b.vars)))
        return a._remap(union), b._remap(union)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if _is_scalar(other):
            return MultiPoly.const(other, self.vars)
        return None

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = MultiPoly._aligned(self, other)
        terms = dict(a.terms)
        for exp, c in b.terms.items():
            s = terms.get(exp, Fraction(0)) + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return MultiPoly(a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            other = Fraction(other)
            if not other:
                return MultiPoly(self.vars, {})
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = MultiPoly._aligned(self, other)
        if not a.terms or not b.terms:
            return MultiPoly(a.vars, {})
        acc = {}
        bitems = list(b.terms.items())
        for e1, c1 in a.terms.items():
            for e2, c2 in bitems:
                key = tuple(x + y for x, y in zip(e1, e2))
                s = acc.get(key)
                acc[key] = c1 * c2 if s is None else s + c1 * c2
        return MultiPoly(a.vars, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = MultiPoly._aligned(self, other)
        return a.terms == b.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.key())

    def __bool__(self):
        return bool(self.terms)

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return next(iter(self.terms.values()), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, var: str) -> int:
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max((e[i] for e in self.terms), default=0)

    def key(self):
        """Hashable canonical form (unused variables dropped)."""
        used = [i for i, v in enumerate(self.vars) if any(e[i] for e in self.terms)]
        names = tuple(self.vars[i] for i in used)
        items = tuple(sorted((tuple(e[i] for i in used), c) for e, c in self.terms.items()))
        return (names, items)

    def as_univariate(self, var: str) -> dict:
        """View as a polynomial in `var`: degree -> MultiPoly in the rest."""
        if var not in self.vars:
            return {0: self}
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        out = {}
        for exp, c in self.terms.items():
            d = exp[i]
            rexp = exp[:i] + exp[i + 1:]
            bucket = out.setdefault(d, {})
            bucket[rexp] = bucket.get(rexp, Fraction(0)) + c
        return {d: MultiPoly(rest, t) for d, t in sorted(out.items())}

    def partial_coefficient(self, fixed: dict) -> "MultiPoly":
        """Coefficient of prod var^e over `fixed`, a polynomial in the rest."""
        idx = []
        for v, e in fixed.items():
            if v in self.vars:
                idx.append((self.vars.index(v), e))
            elif e != 0:
                return MultiPoly((), {})
        keep = [i for i in range(len(self.vars)) if i not in {j for j, _ in idx}]
        out = {}
        for exp, c in self.terms.items():
            if all(exp[i] == e for i, e in idx):
                out[tuple(exp[i] for i in keep)] = c
        return MultiPoly(tuple(self.vars[i] for i in keep), out)

    def substitute(self, bindings: dict) -> "MultiPoly":
        """Replace variables by rationals or polynomials; others stay."""
        if not any(v in bindings for v in self.vars):
            return self
        acc = MultiPoly.const(0)
        for exp, c in self.terms.items():
            term = MultiPoly.const(c)
            for v, e in zip(self.vars, exp):
                if not e:
                    continue
                if v in bindings:
                    val = bindings[v]
                    val = MultiPoly.const(val) if _is_scalar(val) else val
                    term = term * val ** e
                else:
                    term = term * MultiPoly((v,), {(e,): Fraction(1)})
            acc = acc + term
        return acc

    # -- serialization / display --------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"exp": list(e), "coef": f"{c.numerator}/{c.denominator}"}
                for e, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "MultiPoly":
        return cls(tuple(d["vars"]),
                   {tuple(t["exp"]): Fraction(t["coef"]) for t in d["terms"]})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True):
            factors = []
            for v, e in zip(self.vars, exp):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self})"


ZERO = MultiPoly((), {})
ONE = MultiPoly.const(1)


class LaurentPoly:
    """Laurent polynomial in one variable with MultiPoly coefficients.

    Used for q-Hermite work on the unit circle: the variable z stands for
    e^(i*theta), and symmetric Laurent polynomials fold into ordinary
    polynomials in x = cos(theta) via z^k + z^-k = 2 T_k(x).
    """

    __slots__ = ("var", "terms")

    def __init__(self, terms: dict, var: str = "z"):
        clean = {}
        for k, c in terms.items():
            if _is_scalar(c):
                c = MultiPoly.const(c)
            if not c.is_zero():
                clean[int(k)] = c
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def const(cls, c, var: str = "z") -> "LaurentPoly":
        return cls({0: MultiPoly.const(c) if _is_scalar(c) else c}, var)

    def __add__(self, other):
        if _is_scalar(other) or isinstance(other, MultiPoly):
            other = LaurentPoly.const(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if other.var != self.var:
            raise ValueError("Laurent variable mismatch")
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, ZERO) + c
            if s.is_zero():
                terms.pop(k, None)
            else:
                terms[k] = s
        return LaurentPoly(terms, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if _is_scalar(other) or isinstance(other, MultiPoly):
            return LaurentPoly({k: c * other for k, c in self.terms.items()}, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if other.var != self.var:
            raise ValueError("Laurent variable mismatch")
        acc = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                prod = c1 * c2
                acc[k] = acc[k] + prod if k in acc else prod
        return LaurentPoly(acc, self.var)

    __rmul__ = __mul__

    def __eq__(self, other):
        if _is_scalar(other) or isinstance(other, MultiPoly):
            other = LaurentPoly.const(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.var == other.var and self.terms == other.terms

    def __hash__(self):
        return hash((self.var, tuple(sorted((k, c.key()) for k, c in self.terms.items()))))

    def is_symmetric(self) -> bool:
        return all(self.terms.get(-k, ZERO) == c for k, c in self.terms.items())

    def to_x_poly(self, xvar: str = "x") -> MultiPoly:
        """Fold a z <-> 1/z symmetric Laurent polynomial to x = (z + 1/z)/2."""
        if not self.is_symmetric():
            raise ValueError("Laurent polynomial is not symmetric under z -> 1/z")
        out = self.terms.get(0, ZERO)
        for k in sorted(self.terms):
            if k > 0:
                out = out + self.terms[k] * chebyshev_t(k, xvar) * 2
        return out

    def eval(self, z, bindings: dict | None = None):
        """Numeric value at a complex z, other symbols bound as needed."""
        bindings = bindings or {}
        total = 0j
        for k, c in self.terms.items():
            total += complex(poly_eval(c, bindings)) * z ** k
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{self.var}^{k}" for k, c in sorted(self.terms.items()))

    def __repr__(self):
        return f"LaurentPoly({self})"


@lru_cache(maxsize=None)
def chebyshev_t(k: int, xvar: str = "x") -> MultiPoly:
    """Chebyshev polynomial T_k, with T_k(cos t) = cos(k t)."""
    if k == 0:
        return MultiPoly.const(1, (xvar,))
    x = MultiPoly.var(xvar)
    if k == 1:
        return x
    return x * chebyshev_t(k - 1, xvar) * 2 - chebyshev_t(k - 2, xvar)


@lru_cache(maxsize=None)
def qfac(q: Fraction, n: int) -> Fraction:
    """(q; q)_n for rational q."""
    if n < 0:
        raise ValueError("qfac needs n >= 0")
    if n == 0:
        return Fraction(1)
    return qfac(q, n - 1) * (1 - q ** n)


def qpoch(a, q: Fraction, n: int):
    """q-shifted factorial (a; q)_n.

    a may be a rational or a MultiPoly. Negative n uses the standard
    convention (a; q)_{-n} = 1/(a q^{-n}; q)_n, which requires the shifted
    product to be a nonzero scalar.
    """
    q = frac(q)
    if n >= 0:
        if _is_scalar(a):
            a = Fraction(a)
            prod = Fraction(1)
            for k in range(n):
                prod *= 1 - a * q ** k
            return prod
        prod = MultiPoly.const(1, a.vars)
        for k in range(n):
            prod = prod * (MultiPoly.const(1, a.vars) - a * q ** k)
        return prod
    shifted = a * q ** n
    denom = qpoch(shifted, q, -n)
    if isinstance(denom, MultiPoly):
        if not denom.is_constant():
            raise ValueError("(a;q)_n with n < 0 needs a scalar denominator")
        denom = denom.constant_value()
    if denom == 0:
        raise ZeroDivisionError("(a;q)_n with n < 0 hit a vanishing factor")
    return Fraction(1) / denom


def qbinom(n: int, k: int, q):
    """Gaussian binomial [n choose k]_q.

    Out-of-range k (or negative n) gives 0, which keeps finite q-sums
    writable without explicit range guards. For rational q the quotient
    formula is used; a MultiPoly q goes through the Pascal recurrence so
    the result stays a polynomial with no division.
    """
    if isinstance(q, MultiPoly):
        if k < 0 or n < 0 or k > n:
            return MultiPoly.const(0, q.vars)
        return _qbinom_poly(n, k, q)
    q = frac(q)
    if k < 0 or n < 0 or k > n:
        return Fraction(0)
    return qfac(q, n) / (qfac(q, k) * qfac(q, n - k))


def _qbinom_poly(n: int, k: int, q: MultiPoly, _cache={}) -> MultiPoly:
    key = (n, k, q.key())
    hit = _cache.get(key)
    if hit is not None:
        return hit
    if k == 0 or k == n:
        out = MultiPoly.const(1, q.vars)
    else:
        out = _qbinom_poly(n - 1, k - 1, q) + q ** k * _qbinom_poly(n - 1, k, q)
    _cache[key] = out
    return out


def poly_eval(p: MultiPoly, bindings: dict):
    """Evaluate with every variable bound; exact iff all bindings are exact."""
    missing = [v for v in p.vars if v not in bindings]
    if missing:
        raise ValueError(f"unbound variables in poly_eval: {missing}")
    numeric = any(isinstance(bindings[v], (float, complex)) for v in p.vars)
    total = 0j if numeric else Fraction(0)
    for exp, c in p.terms.items():
        term = complex(c) if numeric else c
        for v, e in zip(p.vars, exp):
            if e:
                term *= bindings[v] ** e
        total += term
    return total
