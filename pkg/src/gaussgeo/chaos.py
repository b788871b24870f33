"""Geodesic-spread chaos indicators: Jacobi fields and Lyapunov exponents.

On a maximally symmetric manifold the geodesic-deviation (Jacobi) equation
collapses to the scalar oscillator J'' + Q J = 0 with the constant

    Q = R ||v||^2 / (n(n-1)) = -A0^2,

using R = -3/2, n = 3 and the conserved squared velocity ||v||^2 = 4 A0^2
of the closed-form geodesics. Q < 0 makes the deviation grow like sinh, and
the growth-rate indicator (the Riemannian analogue of a Lyapunov exponent)
is lambda = 2 sqrt(-Q) = 2 A0 -- notably independent of the correlation r.

`lyapunov_estimate` evaluates the defining log-ratio at a finite horizon.
The raw value converges only like 1/tau (the limit sheds a constant inside
the log), so the reported estimate Richardson-extrapolates the last two
horizon doublings, which kills the 1/tau term and leaves an exponentially
small error.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import DomainError, RegimeWarning
from .geodesics import InitialConditions, amplitude_A0, geodesic_corr, geodesic_velocity
from .models import ModelParams, metric_corr3

#: Minimum A0 * tau_max for the asymptotic Lyapunov regime.
ASYMPTOTIC_MIN = 5.0


@dataclass(frozen=True)
class JacobiState:
    """Constants of the scalar Jacobi problem: Q = -A0^2 and the initial rate."""

    Q: float
    omega0: float
    A0: float

    def __post_init__(self):
        if not self.A0 > 0:
            raise DomainError(f"A0 must be positive, got {self.A0}")
        if not self.Q < 0:
            raise DomainError(f"Q must be negative, got {self.Q}")


@dataclass(frozen=True)
class LyapunovEstimate:
    """Finite-horizon Lyapunov evaluation.

    ``value`` is the extrapolated estimate, ``raw`` the plain finite-horizon
    log-ratio at tau_max.
    """

    value: float
    raw: float
    tau_max: float


def jlc_coefficient(A0: float) -> float:
    """Constant Q of the reduced Jacobi equation: -A0^2."""
    if not A0 > 0:
        raise DomainError(f"A0 must be positive, got {A0}")
    return -A0 * A0


def velocity_norm_squared(
    params: ModelParams, ic: InitialConditions, tau: float
) -> float:
    """Conserved squared velocity g_ab v^a v^b = 4 A0^2 along the geodesics."""
    A0 = amplitude_A0(ic)
    return 4.0 * A0 * A0


def velocity_norm_squared_contracted(
    params: ModelParams, ic: InitialConditions, tau: float
) -> float:
    """Direct contraction of the analytic velocity with the metric.

    Exists as the explicit counterpart of the constant value; agreement is
    asserted in the test suite.
    """
    state = geodesic_corr(tau, params, ic)
    v = geodesic_velocity(tau, params, ic)
    g = metric_corr3(state.sigma, params)
    return float(v @ g @ v)


def jacobi_intensity(tau: float, omega0: float, A0: float) -> float:
    """Jacobi-field intensity J(tau) = (omega0/A0) sinh(A0 tau)."""
    if not A0 > 0:
        raise DomainError(f"A0 must be positive, got {A0}")
    return omega0 / A0 * math.sinh(A0 * tau)


def jacobi_intensity_rate(tau: float, omega0: float, A0: float) -> float:
    """dJ/dtau = omega0 cosh(A0 tau) for the closed-form intensity."""
    return omega0 * math.cosh(A0 * tau)


def lyapunov_exponent(A0: float) -> float:
    """Asymptotic growth-rate indicator lambda = 2 A0; the same for every r."""
    if not A0 > 0:
        raise DomainError(f"A0 must be positive, got {A0}")
    return 2.0 * A0


def _log_ratio(tau: float, A0: float) -> float:
    # log[(J^2 + J'^2)/omega0^2] / tau; omega0 cancels exactly
    s, c = math.sinh(A0 * tau), math.cosh(A0 * tau)
    return math.log((s / A0) ** 2 + c**2) / tau


def lyapunov_estimate(omega0: float, A0: float, tau_max: float) -> LyapunovEstimate:
    """Finite-horizon Lyapunov estimate converging to 2 A0.

    The initial rate omega0 cancels in the log-ratio and is accepted only
    for signature symmetry with `jacobi_intensity`.
    """
    if not (A0 > 0 and tau_max > 0):
        raise DomainError("A0 and tau_max must be positive")
    if A0 * tau_max < ASYMPTOTIC_MIN:
        warnings.warn(
            f"A0*tau_max = {A0 * tau_max:.3g} < {ASYMPTOTIC_MIN}: estimate returned "
            "before the asymptotic regime",
            RegimeWarning,
            stacklevel=2,
        )
    raw = _log_ratio(tau_max, A0)
    extrapolated = 2.0 * raw - _log_ratio(tau_max / 2.0, A0)
    return LyapunovEstimate(value=extrapolated, raw=raw, tau_max=tau_max)
