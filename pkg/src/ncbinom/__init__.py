"""Exact non-commutative binomial expansions with a numeric matrix backend.

The symbolic half works in a free associative algebra over named generators
with polynomial scalars over the rationals: derivation-driven power
expansions, q-deformed rewriting with Gaussian binomials, and identities in
a unit-adjoined algebra.  The numeric half mirrors the analytic statements
on complex matrices with certified truncation bounds: exponentials,
conjugation, and negative-power series behind a spectral-radius gate.
"""

from .errors import (ContextError, ConvergenceDomainError, DimensionError,
                     NcbinomError, NumericError, ParseError,
                     SingularMatrixError)
from .freealg import (AlgebraContext, CoefPoly, FreeElement, GeneratorId,
                      binomial, element_from_json, element_to_json,
                      format_element, format_poly, parse_element)
from .derivops import (DerivationOp, IdentityReport, application_identities,
                       commutator, compare, difference_of_powers_rhs,
                       double_sum_rhs, inner_derivation, nc_binomial_rhs,
                       power_via_derivation_rhs, verify_difference_of_powers,
                       verify_nc_binomial, verify_nc_binomial_double,
                       verify_power_via_derivation, verify_wyss, wyss_rhs)
from .qrewrite import (NormalForm, QRelation, benaoum_coefficient,
                       gaussian_binomial, normalize, q_bracket, q_pochhammer,
                       verify_q_binomial)
from .unitize import (Unitized, embed, u_delta, u_delta_power,
                      u_delta_power_closed, unit, verify_unitized_binomial,
                      verify_unitized_power)
from .numbanach import (GenBinom, NumericReport, SeriesResult, alpha_apply,
                        as_matrix, expm, frob_norm, gen_binom, lu_solve,
                        mat_add, mat_mul, mat_pow, mat_scale,
                        matrix_from_json, matrix_to_json, negpow_double_sum,
                        negpow_series, scalar_negpow_check,
                        spectral_radius_upper, suggest_lambda,
                        verify_exp_conjugation)

__version__ = "0.1.0"
