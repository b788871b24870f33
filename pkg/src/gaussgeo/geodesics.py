"""Closed-form geodesics of the 3D Gaussian manifolds and their constants.

The geodesic equations for (mu1, mu2, sigma) decouple through a Riccati
reduction: mu' is proportional to sigma^2, which collapses the system to a
constant-coefficient Riccati equation with hyperbolic solutions. With the
boundary data (momenta +-p0, common spread sigma0 at affine time -tau0) the
trajectories are

    mu1(tau; r) = -sqrt((1-r)(p0^2 + 2 sigma0^2)) * tanh(A0 tau)
    mu2(tau; r) = -mu1(tau; r)
    sigma(tau; r) = sqrt(p0^2/2 + sigma0^2) / cosh(A0 tau)

with the rate constant

    A0 = (1/tau0) * asinh(p0 / (sqrt(2) sigma0)).

The non-correlated branch is r = 0. A collision history joins the two at
tau = 0: non-correlated before (tau < 0), correlated after (tau >= 0); all
three coordinates are continuous there.

A0 is always computed from the exact asinh form. The log-series expansion
in sigma0/p0 is provided only as a cross-check (`amplitude_A0_series`).

Hyperbolic arguments are clamped to |A0 tau| <= 700: beyond that cosh
overflows while the state is already saturated (tanh = +-1, sigma at the
underflow floor), so the clamped state is returned with a warning.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SaturationWarning
from .models import Macrostate3, ModelParams

#: Largest usable hyperbolic argument; cosh overflows near 710.
ARG_CLAMP = 700.0

#: Loosest admissible spread-to-momentum ratio for the well-localized regime.
LOCALIZATION_MAX = 0.1


@dataclass(frozen=True)
class InitialConditions:
    """Initial data (p0, sigma0, tau0, R0) of the collision history.

    Wave packets must be well localized in momentum: sigma0/p0 <= 0.1.
    R0 (initial separation) does not enter the geodesics themselves but is
    carried along for the scattering-side operations.
    """

    p0: float
    sigma0: float
    tau0: float = 1.0
    R0: float = 10.0

    def __post_init__(self):
        if not (self.p0 > 0 and self.sigma0 > 0 and self.tau0 > 0 and self.R0 > 0):
            raise DomainError(f"initial conditions must be positive: {self}")
        if self.sigma0 / self.p0 > LOCALIZATION_MAX:
            raise DomainError(
                f"sigma0/p0 = {self.sigma0 / self.p0:.4g} exceeds the "
                f"well-localized bound {LOCALIZATION_MAX}"
            )


@dataclass(frozen=True)
class RiccatiConstants:
    """Integration constants of the Riccati reduction.

    (C, E) belong to the non-correlated branch, (C_r, E_r) to the correlated
    one. They satisfy -E/C = p0^2/2 + sigma0^2, sqrt(-CE/2) = A0, share the
    ratio E/C = E_r/C_r across the junction, and obey the reality condition
    CE < 0. delta = 1 fixes the symmetric branch; gamma > 0 is the rate.
    """

    C: float
    E: float
    C_r: float
    E_r: float
    gamma: float
    delta: float = 1.0


def amplitude_A0(ic: InitialConditions) -> float:
    """Geodesic rate constant A0 = asinh(p0 / (sqrt(2) sigma0)) / tau0."""
    return math.asinh(ic.p0 / (math.sqrt(2.0) * ic.sigma0)) / ic.tau0


def amplitude_A0_series(ic: InitialConditions) -> float:
    """Asymptotic log-series for A0 in powers of sigma0/p0 (cross-check only)."""
    rat = ic.sigma0 / ic.p0
    return (
        math.log(math.sqrt(2.0) * ic.p0 / ic.sigma0)
        + 0.5 * rat**2
        - 0.375 * rat**4
    ) / ic.tau0


def _clamped(arg: float) -> float:
    if abs(arg) > ARG_CLAMP:
        warnings.warn(
            f"|A0*tau| = {abs(arg):.3g} clamped to {ARG_CLAMP}; state is saturated",
            SaturationWarning,
            stacklevel=3,
        )
        return math.copysign(ARG_CLAMP, arg)
    return arg


def _momentum_scale(ic: InitialConditions, r: float) -> float:
    return math.sqrt((1.0 - r) * (ic.p0**2 + 2.0 * ic.sigma0**2))


def _spread_scale(ic: InitialConditions) -> float:
    return math.sqrt(0.5 * ic.p0**2 + ic.sigma0**2)


def geodesic_corr(tau: float, params: ModelParams, ic: InitialConditions) -> Macrostate3:
    """Correlated-branch macrostate at affine time tau."""
    arg = _clamped(amplitude_A0(ic) * tau)
    m = _momentum_scale(ic, params.r)
    t = math.tanh(arg)
    return Macrostate3(-m * t, m * t, _spread_scale(ic) / math.cosh(arg))


def geodesic_noncorr(tau: float, ic: InitialConditions) -> Macrostate3:
    """Non-correlated macrostate at affine time tau; equals the r = 0 branch."""
    return geodesic_corr(tau, ModelParams(0.0), ic)


def geodesic_velocity(
    tau: float, params: ModelParams, ic: InitialConditions
) -> np.ndarray:
    """Analytic (dmu1, dmu2, dsigma)/dtau along the correlated branch."""
    A0 = amplitude_A0(ic)
    arg = _clamped(A0 * tau)
    m = _momentum_scale(ic, params.r)
    sech2 = 1.0 / math.cosh(arg) ** 2
    dsig = -_spread_scale(ic) * A0 * math.sinh(arg) / math.cosh(arg) ** 2
    return np.array([-m * A0 * sech2, m * A0 * sech2, dsig])


def geodesic_acceleration(
    tau: float, params: ModelParams, ic: InitialConditions
) -> np.ndarray:
    """Analytic second derivatives of the correlated branch."""
    A0 = amplitude_A0(ic)
    arg = _clamped(A0 * tau)
    m = _momentum_scale(ic, params.r)
    th, ch = math.tanh(arg), math.cosh(arg)
    ddmu = 2.0 * m * A0**2 * th / ch**2
    ddsig = _spread_scale(ic) * A0**2 * (2.0 * th**2 - 1.0) / ch
    return np.array([ddmu, -ddmu, ddsig])


@dataclass(frozen=True)
class GeodesicPath:
    """Piecewise collision history joined at tau = 0.

    Non-correlated branch before the collision (tau < 0), correlated branch
    after (tau >= 0); continuous in all three coordinates at the junction.
    """

    params: ModelParams
    ic: InitialConditions

    @property
    def A0(self) -> float:
        return amplitude_A0(self.ic)

    def branch(self, tau: float) -> str:
        return "before" if tau < 0 else "after"

    def state(self, tau: float) -> Macrostate3:
        if tau < 0:
            return geodesic_noncorr(tau, self.ic)
        return geodesic_corr(tau, self.params, self.ic)


def joined_path(tau: float, params: ModelParams, ic: InitialConditions) -> Macrostate3:
    """Macrostate on the joined (before/after) path at affine time tau."""
    return GeodesicPath(params, ic).state(tau)


def momentum_difference(tau: float, params: ModelParams, ic: InitialConditions) -> float:
    """Relative momentum <p(tau; r)> = (mu2 - mu1)/2 on the correlated branch."""
    arg = _clamped(amplitude_A0(ic) * tau)
    return _momentum_scale(ic, params.r) * math.tanh(arg)


def riccati_constants(params: ModelParams, ic: InitialConditions) -> RiccatiConstants:
    """Integration constants reproducing the closed-form trajectories.

    Solves -E/C = p0^2/2 + sigma0^2 together with sqrt(-CE/2) = A0 on the
    C < 0, E > 0 branch, and the correlated pair from the junction
    continuity E/C = E_r/C_r with gamma_r = A0.
    """
    A0 = amplitude_A0(ic)
    ratio = 0.5 * ic.p0**2 + ic.sigma0**2  # -E/C
    C = -math.sqrt(2.0) * A0 / math.sqrt(ratio)
    E = -C * ratio
    scale = math.sqrt(1.0 - params.r)
    return RiccatiConstants(C=C, E=E, C_r=scale * C, E_r=scale * E, gamma=A0)


def geodesic_from_constants(
    tau: float, params: ModelParams, const: RiccatiConstants
) -> Macrostate3:
    """Trajectory written directly in terms of (C_r, E_r); round-trip check."""
    r = params.r
    gamma = math.sqrt(const.C_r * const.E_r / (2.0 * (r - 1.0)))
    m = math.sqrt(2.0 * const.E_r * (r - 1.0) / const.C_r)
    s = math.sqrt(-const.E_r / const.C_r)
    arg = _clamped(gamma * tau)
    return Macrostate3(
        -m * math.tanh(arg), m * math.tanh(arg), s / math.cosh(arg)
    )


def geodesic_equations_lhs(
    state: np.ndarray, velocity: np.ndarray, accel: np.ndarray, r: float
) -> np.ndarray:
    """Left sides of the three geodesic equations for given derivatives."""
    mu1d, mu2d, sigd = velocity
    sig = state[2]
    d = r * r - 1.0
    lhs = np.empty(3)
    lhs[0] = accel[0] - 2.0 / sig * mu1d * sigd
    lhs[1] = accel[1] - 2.0 / sig * mu2d * sigd
    lhs[2] = (
        accel[2]
        - sigd**2 / sig
        - (mu1d**2 + mu2d**2) / (4.0 * sig * d)
        + r * mu1d * mu2d / (2.0 * sig * d)
    )
    return lhs


def geodesic_residual(
    params: ModelParams, ic: InitialConditions, tau_grid
) -> float:
    """Max norm of the geodesic-equation left sides along the closed form.

    Derivatives are taken by 5-point central differences with step
    h = 1e-4/A0 so the stencil truncation error sits well below the 1e-6
    verification target.
    """
    tau_grid = np.asarray(tau_grid, dtype=float)
    if tau_grid.size < 5:
        raise DomainError("tau grid needs at least 5 points")
    A0 = amplitude_A0(ic)
    h = 1e-4 / A0

    def coords(t):
        s = geodesic_corr(t, params, ic)
        return s.as_array()

    worst = 0.0
    for t in tau_grid:
        stencil = np.array([coords(t + k * h) for k in (-2, -1, 0, 1, 2)])
        vel = (stencil[0] - 8 * stencil[1] + 8 * stencil[3] - stencil[4]) / (12 * h)
        acc = (
            -stencil[0] + 16 * stencil[1] - 30 * stencil[2] + 16 * stencil[3] - stencil[4]
        ) / (12 * h * h)
        lhs = geodesic_equations_lhs(stencil[2], vel, acc, params.r)
        worst = max(worst, float(np.abs(lhs).max()))
    return worst
