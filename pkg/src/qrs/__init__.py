"""qrs: exact and numeric verification toolkit for q-series polynomial
identities.

The package has three layers: a small exact computer-algebra kernel
(multivariate polynomials, Laurent polynomials, truncated power series,
basic hypergeometric sums over Fraction coefficients), the polynomial
families built on it (Cauchy, Rogers-Szego in one and two variables,
q-Hermite with and without a shift parameter), and a registry of identity
checks that compare both sides of each identity either coefficientwise
(exact) or numerically (complex evaluation, adaptive quadrature).
"""

from .families import (big_qhermite_laurent, big_qhermite_poly, brs_poly,
                       cauchy_poly, change_base_big, change_base_c,
                       poly_to_cauchy, qhermite_eval, qhermite_laurent,
                       qhermite_poly, rs_poly)
from .fps import (PhiSpec, TruncSeries, euler_expand, euler_inv_expand,
                  euler_inv_series, euler_series, phi_series, phi_sum,
                  poch_series, series_inv)
from .idverify import IdentityCase, get_case, registry, verify, verify_all
from .qcore import LaurentPoly, MultiPoly, frac, qbinom, qfac, qpoch
from .qops import dq_apply, dxy_poly, e_op_apply, t_op_apply, t_op_graded
from .quadrature import (IntegralSpec, QuadratureError, askey_wilson_check,
                         askey_wilson_closed, askey_wilson_quad,
                         closed_forms_suite, inf_product, integrate, jhi_eval,
                         ortho_check, qpoch_inf, qpoch_n)
from .reporting import IdentityReport

__version__ = "0.1.0"

__all__ = [
    "IdentityCase", "IdentityReport", "IntegralSpec", "LaurentPoly",
    "MultiPoly", "PhiSpec", "QuadratureError", "TruncSeries",
    "askey_wilson_check", "askey_wilson_closed", "askey_wilson_quad",
    "big_qhermite_laurent", "big_qhermite_poly", "brs_poly", "cauchy_poly",
    "change_base_big", "change_base_c", "closed_forms_suite", "dq_apply",
    "dxy_poly", "e_op_apply", "euler_expand", "euler_inv_expand",
    "euler_inv_series", "euler_series", "frac", "get_case", "inf_product",
    "integrate", "jhi_eval", "ortho_check", "phi_series", "phi_sum",
    "poch_series", "poly_to_cauchy", "qbinom", "qfac", "qhermite_eval",
    "qhermite_laurent", "qhermite_poly", "qpoch", "qpoch_inf", "qpoch_n",
    "registry", "rs_poly", "series_inv", "t_op_apply", "t_op_graded",
    "verify", "verify_all",
]
