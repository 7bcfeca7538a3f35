"""Numerics for the spherical representations of SL(2,R).

The package provides models of the principal and complementary series,
analytic continuation of the rotation-invariant vector across the positive
domain of complex quadratic forms, the associated norm asymptotics, certified
upper bounds for invariant norms through dyadic decomposition, synthetic
spectral bookkeeping, and Siegel-domain weight estimates for the modular
lattice.
"""

from .algebra import (ComplexGroupElement, GroupElement, UNIT_FORM, UnimodularForm,
                      ad_norm, compose, iwasawa, mobius, transform_form)
from .continuation import (BoundaryForm, boundary_argument, boundary_form,
                           boundary_modulus, line_restriction, norm_sq_oracle,
                           spherical_function, spherical_function_diagonal,
                           spherical_vector)
from .errors import (ConfigError, DomainError, InvariantViolation, Sl2RepError,
                     TruncationError)
from .geometry import (PointPair, diagonal_form, diagonalize_form, form_from_points,
                       is_positive_form)
from .invnorm import (BoundCertificate, HomogeneousFamily, dyadic_bound,
                      family_vector, invariant_norm_bound, orbit_upper_bound,
                      power_family, seminorm_inf)
from .norms import (casimir_calibration, casimir_check, complementary_norm,
                    l2_circle, l2_line, sobolev_circle_monomial, sobolev_fourier,
                    sobolev_line)
from .repmodels import (CircleVector, LineVector, SpectralParameter, act_circle,
                        act_line, circle_to_line, dilate, fourier_coeffs,
                        line_to_circle)
from .spectral import (SpectrumEntry, b_normalize, lower_bound_check,
                       norm_sweep, parseval_rhs, partial_sum, premise_constant,
                       propagate, weyl_spectrum)
from .cusp import (dw_bounded_scan, height, horocycle_diameter, in_siegel_domain,
                   mean_value_bound, siegel_samples, weight)

__version__ = "0.1.0"
