"""Special functions around Frobenius group determinants, Bessel and
hypergeometric functions, theta functions and the John transform, each
computed by at least two independent routes that are checked against
each other."""

__version__ = "0.1.0"

from .errors import (DegenerateInput, DomainError, FrobesselError, LatticePointError,
                     MismatchError, NonConvergence, NonFinite, OutsideDisc, PoleError,
                     RecurrenceInconsistent, SlowConvergence, TruncationTooShort)
from .kernels import BACKEND
from .numerics import (ContourSpec, QuadratureSpec, cauchy_derivative, finite_difference, gamma,
                       integrate_circle, integrate_halfline, integrate_line)
from .series import (TruncatedSeries, borel_resum, borel_transform, delta_power_apply,
                     exponential_polynomial, geometric_series, hilbert_coefficients, polylog)
from .frobenius import (CyclicGroupData, EigenProblemSpec, circulant_determinant, cyclotomic,
                        generalized_bessel, group_determinant, moebius, product_eigen_solution,
                        totient)
from .hypergeo import (HypergeometricParams, elliptic_K, euler_integral_2f1, gauss_2f1,
                       pfq, pochhammer)
from .bessel import (bessel_j, borel_ode_check, contour_orthogonality, elementary_bessel,
                     macdonald_k, neumann_expand, neumann_theta, product_2f3, rayleigh_j,
                     sonine_j)
from .theta import (ModularPoint, lambda_modular, tau_from_x, theta_eval,
                    weierstrass_consistency, wirtinger_2f1)
from .john import (ExponentTriple, LineSpec, ProjectivePoint, cross_ratio,
                   john_transform_numeric, john_xa_closed_form, john_xa_numeric,
                   regularized_moment, s3_orbit)
