"""Point-interaction models: resolvent-trace differences and spectral measures.

The two implemented operator pairs are a single delta center of strength
``alpha`` against the free Laplacian in R^3, and two delta centers of
strengths ``alpha0``, ``alpha1`` separated by a distance ``a``.  Everything
downstream (heat traces, zeta functions, partition functions) is built from
the trace of the resolvent difference

    r(k) = Tr(R(k^2, L) - R(k^2, L0)),   Im k > 0,

and from the induced relative spectral measure e(v), the jump of r across
the continuous spectrum.

The two-point e(v) is coded as ``(2a/pi) * Re(N(v)/D(v))`` with N, D read
off the resolvent trace; the two rim contributions are complex conjugates,
so taking twice the real part performs the boundary-value limit exactly and
keeps e real by construction.
"""

import cmath
import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Optional, Union


class WrongSheetError(ValueError):
    """Resolvent requested off the physical sheet (Im k <= 0)."""


class BoundStateRegimeError(ValueError):
    """Model parameters admit negative eigenvalues; out of supported range."""


class SingularPointError(ArithmeticError):
    """Resolvent denominator vanished at the requested point."""


@dataclass(frozen=True)
class OnePointModel:
    """Single delta interaction of strength alpha >= 0 (units 1/length).

    alpha = 0 is the degenerate case: the pair coincides with the free
    Laplacian and every relative quantity vanishes.
    """

    alpha: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha >= 0):
            raise BoundStateRegimeError(
                f"one-point model needs alpha >= 0 (got {self.alpha!r}); "
                "negative alpha produces a bound state")

    def describe(self):
        return f"one-point(alpha={self.alpha:g})"


@dataclass(frozen=True)
class TwoPointModel:
    """Two delta interactions (alpha0, alpha1) at separation a > 0.

    The spectrum stays purely absolutely continuous iff
    4 pi^2 alpha0 alpha1 a^2 >= 1; construction enforces that constraint.
    Exact equality is admitted but sits on the edge of the allowed region,
    so a warning is emitted there.
    """

    alpha0: float
    alpha1: float
    a: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and self.a > 0):
            raise ValueError(f"separation a must be > 0, got {self.a!r}")
        if not (math.isfinite(self.alpha0) and math.isfinite(self.alpha1)
                and self.alpha0 > 0 and self.alpha1 > 0):
            raise BoundStateRegimeError(
                "two-point model needs alpha0 > 0 and alpha1 > 0, got "
                f"({self.alpha0!r}, {self.alpha1!r})")
        q = self.constraint_value()
        if q < 1.0:
            raise BoundStateRegimeError(
                "bound-state regime: 4 pi^2 alpha0 alpha1 a^2 = "
                f"{q:.6g} < 1")
        if q == 1.0:
            warnings.warn(
                "two-point model at the constraint boundary "
                "(4 pi^2 alpha0 alpha1 a^2 = 1); zero-energy threshold "
                "behaviour is not excluded", stacklevel=2)

    def constraint_value(self):
        return 4.0 * math.pi ** 2 * self.alpha0 * self.alpha1 * self.a ** 2

    def describe(self):
        return (f"two-point(alpha0={self.alpha0:g} "
                f"alpha1={self.alpha1:g} a={self.a:g})")


Model = Union[OnePointModel, TwoPointModel]


@dataclass(frozen=True)
class TailTerm:
    """One term of the large-v expansion: coeff * trig(freq*v) / v**power.

    kind is "const" (trig factor 1), "cos" or "sin".
    """

    coeff: float
    power: float
    kind: str = "const"
    freq: float = 0.0

    def __call__(self, v):
        base = self.coeff / v ** self.power
        if self.kind == "const":
            return base
        if self.kind == "cos":
            return base * math.cos(self.freq * v)
        if self.kind == "sin":
            return base * math.sin(self.freq * v)
        raise ValueError(f"unknown tail term kind {self.kind!r}")


@dataclass(frozen=True)
class SmallVProfile:
    """Leading behaviour e(v) ~ constant * v**exponent as v -> 0+."""

    constant: float
    exponent: float = 0.0

    def __call__(self, v):
        if self.exponent == 0.0:
            return self.constant
        return self.constant * v ** self.exponent


@dataclass(frozen=True)
class SpectralMeasure:
    """Pointwise-evaluable relative spectral measure with its asymptotics.

    eval(v) is finite and real for every v >= 0.  large_v lists the terms of
    the v -> infinity expansion through order v^-2; the remainder after
    subtracting them is O(v^-3).  model keeps a reference to the generating
    operator pair so that continuation code can exploit closed forms.
    """

    eval: Callable[[float], float]
    small_v: SmallVProfile
    large_v: tuple
    model: Optional[Model] = None

    def __call__(self, v):
        return self.eval(v)

    @property
    def is_zero(self):
        return self.small_v.constant == 0.0 and not self.large_v

    @property
    def oscillation_period(self):
        """Period of the trigonometric tail factor, or None if smooth."""
        freqs = [t.freq for t in self.large_v if t.kind in ("cos", "sin")]
        if not freqs:
            return None
        return 2.0 * math.pi / max(freqs)

    def tail_profile(self, v):
        """Value of the recorded large-v expansion at v."""
        return sum(term(v) for term in self.large_v)


@dataclass(frozen=True)
class ResolventPoint:
    """A resolvent-trace sample: spectral point k (Im k > 0) and the trace."""

    k: complex
    value: complex

    def __post_init__(self):
        if self.k.imag <= 0:
            raise WrongSheetError(f"Im k must be positive, got k = {self.k!r}")


def _require_upper_half(k):
    k = complex(k)
    if not (math.isfinite(k.real) and math.isfinite(k.imag)):
        raise WrongSheetError(f"k must be finite, got {k!r}")
    if k.imag <= 0:
        raise WrongSheetError(
            f"resolvent trace is defined for Im k > 0, got k = {k!r}")
    return k


def one_point_resolvent_trace(m: OnePointModel, k):
    """Tr(R(k^2, -Delta_alpha) - R(k^2, -Delta)) = 1/(2ik(4 pi alpha - ik))."""
    k = _require_upper_half(k)
    denom = 2j * k * (4.0 * math.pi * m.alpha - 1j * k)
    if denom == 0:
        raise SingularPointError(f"resolvent trace singular at k = {k!r}")
    return 1.0 / denom


def two_point_resolvent_trace(m: TwoPointModel, k):
    """Trace of the two-center resolvent difference at spectral point k.

    The trace is (a^2/(ika)) * N / D with

        N = 2 pi (alpha0 + alpha1) a - ika + exp(2ika)
        D = (4 pi alpha0 a - ika)(4 pi alpha1 a - ika) - exp(2ika)

    and is symmetric under alpha0 <-> alpha1.
    """
    k = _require_upper_half(k)
    a = m.a
    ika = 1j * k * a
    phase = cmath.exp(2j * k * a)
    num = 2.0 * math.pi * (m.alpha0 + m.alpha1) * a - ika + phase
    den = ((4.0 * math.pi * m.alpha0 * a - ika)
           * (4.0 * math.pi * m.alpha1 * a - ika) - phase)
    if den == 0:
        raise SingularPointError(f"resolvent trace singular at k = {k!r}")
    return (a * a / ika) * num / den


def resolvent_point(m: Model, k) -> ResolventPoint:
    """Evaluate the model's resolvent trace and package it with k."""
    if isinstance(m, OnePointModel):
        return ResolventPoint(complex(k), one_point_resolvent_trace(m, k))
    return ResolventPoint(complex(k), two_point_resolvent_trace(m, k))


def one_point_spectral_measure(m: OnePointModel) -> SpectralMeasure:
    """Relative spectral measure e(v) = 4 alpha / ((4 pi alpha)^2 + v^2).

    For alpha = 0 the measure is identically zero (the pair degenerates to
    two copies of the free Laplacian).
    """
    alpha = m.alpha
    if alpha == 0.0:
        return SpectralMeasure(
            eval=lambda v: 0.0,
            small_v=SmallVProfile(0.0, 0.0),
            large_v=(),
            model=m,
        )
    c = 4.0 * math.pi * alpha
    c2 = c * c

    def eval_one(v):
        return 4.0 * alpha / (c2 + v * v)

    return SpectralMeasure(
        eval=eval_one,
        small_v=SmallVProfile(4.0 * alpha / c2, 0.0),
        large_v=(TailTerm(4.0 * alpha, 2.0),),
        model=m,
    )


def two_point_spectral_measure(m: TwoPointModel) -> SpectralMeasure:
    """Relative spectral measure of the two-center pair.

    Derived from the resolvent trace by evaluating its boundary values on
    the two rims of the continuous spectrum; the rims are complex conjugate
    for real parameters, which collapses the jump to

        e(v) = (2a/pi) * Re( N(v) / D(v) ),

        N(v) = 2 pi (alpha0+alpha1) a - iva + exp(2iva),
        D(v) = (4 pi alpha0 a - iva)(4 pi alpha1 a - iva) - exp(2iva).

    Small-v limit: (a/pi)(4 pi (alpha0+alpha1) a + 2)/(16 pi^2 alpha0
    alpha1 a^2 - 1).  Large v: (4 pi (alpha0+alpha1) a - 2 cos(2av))
    / (pi a v^2) + O(v^-3).
    """
    a = m.a
    a0 = m.alpha0
    a1 = m.alpha1
    sigma = a0 + a1
    c0 = 4.0 * math.pi * a0 * a
    c1 = 4.0 * math.pi * a1 * a
    two_pi_sigma_a = 2.0 * math.pi * sigma * a
    coeff = 2.0 * a / math.pi

    def eval_two(v):
        iva = 1j * (v * a)
        phase = cmath.exp(2j * v * a)
        num = two_pi_sigma_a - iva + phase
        den = (c0 - iva) * (c1 - iva) - phase
        return coeff * (num / den).real

    small_const = (a / math.pi) * (4.0 * math.pi * sigma * a + 2.0) \
        / (16.0 * math.pi ** 2 * a0 * a1 * a * a - 1.0)
    large_v = (
        TailTerm(4.0 * sigma, 2.0),
        TailTerm(-2.0 / (math.pi * a), 2.0, "cos", 2.0 * a),
    )
    return SpectralMeasure(
        eval=eval_two,
        small_v=SmallVProfile(small_const, 0.0),
        large_v=large_v,
        model=m,
    )


def spectral_measure(m: Model) -> SpectralMeasure:
    """Measure for either model kind."""
    if isinstance(m, OnePointModel):
        return one_point_spectral_measure(m)
    return two_point_spectral_measure(m)


def two_rim_measure(m: Model, v, eps):
    """Relative spectral measure evaluated with an explicit rim offset.

    Computes (v/(pi i)) (r(k_lower) - r(k_upper)) with the spectral
    parameter rotated off the cut by +-eps/2; the exact measure is the
    eps -> 0 limit, approached linearly.  Used as a consistency check of
    the closed forms, not in production paths.
    """
    if v <= 0:
        raise ValueError("two_rim_measure needs v > 0")
    if not 0 < eps < math.pi:
        raise ValueError("eps must lie in (0, pi)")
    k_up = v * cmath.exp(0.5j * eps)
    k_low = v * cmath.exp(1j * (math.pi - 0.5 * eps))
    if isinstance(m, OnePointModel):
        r_up = one_point_resolvent_trace(m, k_up)
        r_low = one_point_resolvent_trace(m, k_low)
    else:
        r_up = two_point_resolvent_trace(m, k_up)
        r_low = two_point_resolvent_trace(m, k_low)
    return (v / (math.pi * 1j)) * (r_low - r_up)
