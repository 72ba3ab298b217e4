"""Relative spectral functions and zeta-regularized thermodynamics for
Schroedinger operators with one and two point interactions in flat 3-space."""

from .models import (BoundStateRegimeError, OnePointModel, ResolventPoint,
                     SingularPointError, SpectralMeasure, TwoPointModel,
                     WrongSheetError, one_point_resolvent_trace,
                     one_point_spectral_measure, resolvent_point,
                     spectral_measure, two_point_resolvent_trace,
                     two_point_spectral_measure)
from .quad import (IntegrandError, NonConvergenceError, QuadratureResult,
                   QuadratureSpec, integrate_finite, integrate_to_infinity)
from .specfun import (Accuracy, bessel_k_half, cosine_integral, erfc_scaled,
                      jacobi_theta_sum, log_gamma)
from .thermo import (ForceEstimate, PartitionReport, StepTooLargeError,
                     ThermalState, casimir_force, eta_series_check, log_eta,
                     one_point_log_eta_closed, one_point_log_z_closed,
                     one_point_partition, relative_partition,
                     two_point_partition)
from .zetareg import (ContinuationRequiredError, LaurentData,
                      ProbeInconsistencyError, ZetaPoleError, ZetaStrip,
                      numeric_laurent_probe, one_point_heat_trace_closed,
                      one_point_laurent, one_point_zeta_closed,
                      relative_heat_trace, relative_zeta_in_strip, strip_for,
                      two_point_laurent, two_point_laurent_parts)

__version__ = "0.1.0"
