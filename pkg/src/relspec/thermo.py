"""Partition function, vacuum energy and Casimir force.

For a spatial operator pair with spectral measure e(v) and Laurent data
(residue R1, finite part R0) at s = -1/2, the zeta-regularized partition
function at inverse temperature beta and renormalization scale ell is

    log Z = beta (log 2 ell - 1) R1 - (beta/2) R0 - log eta(beta),

    log eta(tau) = int_0^inf log(1 - exp(-tau v)) e(v) dv,

and the vacuum energy, which is the low-temperature slope of -log Z, is

    E_vac = -(log 2 ell - 1) R1 + R0 / 2.

E_vac is always assembled from the Laurent data; the formally equivalent
integral of v e(v) diverges and is never used.  The Casimir force between
the two centers of a two-point model is the derivative of E_vac in the
separation:

    force = - dE_vac/da        (attractive = negative).

The renormalization scale enters E_vac only through the a-independent
residue term, so the force is exactly ell-independent.
"""

import math
import warnings
from dataclasses import dataclass
from typing import Optional

from scipy.special import exp1 as _exp1

from .models import (OnePointModel, SpectralMeasure, TwoPointModel,
                     one_point_spectral_measure, two_point_spectral_measure)
from .quad import (QuadratureSpec, integrate_finite, integrate_to_infinity,
                   require_converged)
from .specfun import log_gamma
from .zetareg import LaurentData, one_point_laurent, two_point_laurent_parts

_TIGHT = QuadratureSpec(abs_tol=1e-12, rel_tol=1e-11)


class StepTooLargeError(ValueError):
    """A finite-difference stencil left the admissible parameter region."""


@dataclass(frozen=True)
class ThermalState:
    """Inverse temperature beta and renormalization scale ell (defaults 1).

    The associated thermal circle has radius r = beta / (2 pi).
    """

    beta: float
    ell: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.beta) and self.beta > 0):
            raise ValueError(f"beta must be > 0, got {self.beta!r}")
        if not (math.isfinite(self.ell) and self.ell > 0):
            raise ValueError(f"ell must be > 0, got {self.ell!r}")

    @property
    def r(self):
        return self.beta / (2.0 * math.pi)


@dataclass(frozen=True)
class PartitionReport:
    """Assembled thermodynamic output for one model and thermal state."""

    log_z: float
    vacuum_energy: float
    eta_log: float
    laurent: LaurentData
    model: str
    terms: Optional[dict] = None


@dataclass(frozen=True)
class ForceEstimate:
    """Casimir force value with a Richardson error estimate.

    coarse/fine are the central-difference estimates at steps h and h/2;
    value is their Richardson combination.
    """

    value: float
    error_estimate: float
    coarse: float
    fine: float


def log_eta(e: SpectralMeasure, tau, spec=None):
    """log eta(tau) = int_0^inf log(1 - exp(-tau v)) e(v) dv, tau > 0.

    Nonpositive whenever e >= 0.  The integrand has an integrable log
    singularity at v = 0; on (0, 1) the substitution u = exp(-tau v) is
    applied, the tail (1, inf) decays exponentially.
    """
    if not tau > 0:
        raise ValueError(f"log_eta needs tau > 0, got {tau!r}")
    if e.is_zero:
        return 0.0
    spec = spec or _TIGHT

    # (0, 1): v = -log(u)/tau
    def head(u):
        v = -math.log(u) / tau
        return math.log1p(-u) * e.eval(v) / (tau * u)

    res = integrate_finite(head, math.exp(-tau), 1.0, spec)
    head_val = require_converged(res, "log_eta head")

    period = e.oscillation_period
    tail_spec = spec if period is None else QuadratureSpec(
        spec.abs_tol, spec.rel_tol, spec.max_subdivisions,
        oscillation_period=period)

    def tail(v):
        x = tau * v
        if x > 745.0:
            return 0.0
        return math.log1p(-math.exp(-x)) * e.eval(v)

    res = integrate_to_infinity(tail, 1.0, tail_spec)
    tail_val = require_converged(res, "log_eta tail")
    return head_val + tail_val


def one_point_log_eta_closed(m: OnePointModel, tau):
    """Closed form of log eta for the one-point pair, via log Gamma.

    With z = 2 alpha tau,

        log eta = -( log Gamma(z) + (1/2) log z - z (log z - 1)
                     - (1/2) log 2 pi ).

    The bracket is Binet's remainder in Stirling's formula, which is the
    value of the defining integral up to sign; the overall sign here is
    fixed by that integral (log eta < 0, decaying like -1/(12 z)).
    """
    if not m.alpha > 0:
        raise ValueError("closed eta form needs alpha > 0")
    if not tau > 0:
        raise ValueError(f"log_eta needs tau > 0, got {tau!r}")
    z = 2.0 * m.alpha * tau
    binet = (log_gamma(z) + 0.5 * math.log(z) - z * (math.log(z) - 1.0)
             - 0.5 * math.log(2.0 * math.pi))
    return -binet


def eta_series_check(e: SpectralMeasure, tau, n_max, spec=None):
    """log eta through the thermal mode series, for cross-validation.

    Expanding the logarithm, log eta = -sum_{n>=1} (1/n) g(n tau) with
    g(p) = int_0^inf exp(-p v) e(v) dv.  The terms decay only like n^-2
    (the measure is finite at v = 0), so the sum through n_max is followed
    by an Euler-Maclaurin estimate of the remainder,

        sum_{n>N} f(n) ~ int_{N+1/2}^inf f(x) dx + f'(N + 1/2)/24,

    whose integral term reduces to int e(v) E1((N+1/2) tau v) dv.  The
    corrected value approaches log_eta as n_max grows and its residual
    stays below the first omitted term.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if not tau > 0:
        raise ValueError(f"eta series needs tau > 0, got {tau!r}")
    if e.is_zero:
        return 0.0
    spec = spec or _TIGHT

    def g(p):
        def f(v):
            x = p * v
            return 0.0 if x > 745.0 else math.exp(-x) * e.eval(v)
        return require_converged(
            integrate_to_infinity(f, 0.0, spec), f"eta series g({p:g})")

    def g_prime(p):
        def f(v):
            x = p * v
            return 0.0 if x > 745.0 else -v * math.exp(-x) * e.eval(v)
        return require_converged(
            integrate_to_infinity(f, 0.0, spec), f"eta series g'({p:g})")

    partial = -sum(g(n * tau) / n for n in range(1, n_max + 1))

    mid = n_max + 0.5

    def e1_integrand(v):
        x = mid * tau * v
        if x > 700.0:
            return 0.0
        return e.eval(v) * float(_exp1(x))

    integral = require_converged(
        integrate_to_infinity(e1_integrand, 0.0, spec), "eta series tail")
    gm = g(mid * tau)
    gpm = g_prime(mid * tau)
    f_prime = -gm / (mid * mid) + tau * gpm / mid
    tail = -(integral + f_prime / 24.0)
    return partial + tail


def relative_partition(e: SpectralMeasure, laurent: LaurentData,
                       th: ThermalState, spec=None) -> PartitionReport:
    """Assemble log Z and the vacuum energy from measure and Laurent data."""
    eta_log = log_eta(e, th.beta, spec)
    scale = math.log(2.0 * th.ell) - 1.0
    log_z = th.beta * scale * laurent.residue \
        - 0.5 * th.beta * laurent.finite_part - eta_log
    e_vac = -scale * laurent.residue + 0.5 * laurent.finite_part
    tag = e.model.describe() if e.model is not None else "custom"
    return PartitionReport(log_z=log_z, vacuum_energy=e_vac,
                           eta_log=eta_log, laurent=laurent, model=tag)


def one_point_partition(m: OnePointModel, th: ThermalState,
                        spec=None) -> PartitionReport:
    """Partition report for the one-point pair (generic assembly)."""
    return relative_partition(one_point_spectral_measure(m),
                              one_point_laurent(m) if m.alpha > 0
                              else LaurentData(0.0, 0.0), th, spec)


def one_point_log_z_closed(m: OnePointModel, th: ThermalState):
    """Closed form of the one-point log Z, for cross-checking the assembly.

    log Z = 2 alpha beta (log(8 pi alpha ell) - 1) + log Gamma(2 alpha beta)
            + (1/2) log(2 alpha beta) - 2 alpha beta (log(2 alpha beta) - 1)
            - (1/2) log 2 pi.

    This is the Laurent-data assembly with log eta in its Gamma-function
    form; the low-temperature slope is -E_vac = -2 alpha (1 - log(8 pi
    alpha ell)) as required by the vacuum-energy formula.
    """
    if m.alpha == 0.0:
        return 0.0
    z = 2.0 * m.alpha * th.beta
    scale_term = 2.0 * m.alpha * th.beta * (
        math.log(8.0 * math.pi * m.alpha * th.ell) - 1.0)
    binet = (log_gamma(z) + 0.5 * math.log(z) - z * (math.log(z) - 1.0)
             - 0.5 * math.log(2.0 * math.pi))
    return scale_term + binet


def two_point_partition(m: TwoPointModel, th: ThermalState,
                        spec=None) -> PartitionReport:
    """Partition report for the two-point pair, assembled term by term.

    The five contributions (scale term, head integral, subtracted tail,
    cosine-integral term, thermal eta) are reported in ``terms``; their sum
    is identical to the generic Laurent assembly.
    """
    parts = two_point_laurent_parts(m, spec)
    e = two_point_spectral_measure(m)
    eta_log = log_eta(e, th.beta, spec)
    scale = math.log(2.0 * th.ell) - 1.0
    terms = {
        "scale_term": th.beta * scale * parts["residue"],
        "head_term": -0.5 * th.beta * parts["zeta0"],
        "tail_term": -0.5 * th.beta * parts["z_a"],
        "cosine_term": -0.5 * th.beta * parts["ci_term"],
        "eta_term": -eta_log,
    }
    log_z = sum(terms.values())
    laurent = LaurentData(parts["residue"], parts["finite_part"])
    e_vac = -scale * laurent.residue + 0.5 * laurent.finite_part
    return PartitionReport(log_z=log_z, vacuum_energy=e_vac,
                           eta_log=eta_log, laurent=laurent,
                           model=m.describe(), terms=terms)


def two_point_vacuum_energy(m: TwoPointModel, th: ThermalState, spec=None):
    """E_vac from the Laurent data of the two-point pair."""
    return _vacuum_energy_with_error(m, th, spec)[0]


def _vacuum_energy_with_error(m, th, spec):
    parts = two_point_laurent_parts(m, spec)
    scale = math.log(2.0 * th.ell) - 1.0
    value = -scale * parts["residue"] + 0.5 * parts["finite_part"]
    return value, 0.5 * parts["quadrature_error"]


def casimir_force(m: TwoPointModel, th: ThermalState, h=1e-4, spec=None):
    """Casimir force -dE_vac/da by Richardson-refined central differences.

    Central stencils at relative steps h and h/2 are combined; the error
    estimate adds the Richardson defect |F(h/2) - F(h)| / 3 to the
    quadrature noise of the four vacuum-energy evaluations amplified by the
    difference quotients.  Raises StepTooLargeError when a stencil point
    violates the two-point constraint.
    """
    if not 0 < h < 0.5:
        raise ValueError(f"relative step h must be in (0, 0.5), got {h!r}")

    def evac(a):
        try:
            shifted = TwoPointModel(m.alpha0, m.alpha1, a)
        except ValueError as exc:
            raise StepTooLargeError(
                f"stencil point a = {a:g} leaves the admissible region "
                f"({exc}); retry with a smaller h") from exc
        return _vacuum_energy_with_error(shifted, th, spec)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # constraint-boundary warnings
        estimates = []
        noises = []
        for step in (h, 0.5 * h):
            da = m.a * step
            e_plus, err_plus = evac(m.a + da)
            e_minus, err_minus = evac(m.a - da)
            estimates.append(-(e_plus - e_minus) / (2.0 * da))
            noises.append((err_plus + err_minus) / (2.0 * da))
    coarse, fine = estimates
    value = (4.0 * fine - coarse) / 3.0
    error = (abs(fine - coarse) + 4.0 * noises[1] + noises[0]) / 3.0
    return ForceEstimate(value=value, error_estimate=error,
                         coarse=coarse, fine=fine)
