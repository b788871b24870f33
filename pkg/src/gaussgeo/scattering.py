"""Low-energy s-wave scattering, purity, and the entanglement duration.

Two identical (distinguishable) particles with opposite mean wave numbers
+-k0 and common spread sigma_k0 collide head on through a repulsive square
well of height V and range L. Everything here lives in the low-energy
s-wave regime: constant scattering amplitude f(k) = -a_s (all higher Taylor
coefficients of f vanish), k0*L well below 1.

The chain of observables implemented:

* post-collision momentum density = correlated Gaussian with coefficient
  r_QM = sqrt(8 (2 k0^2 + sigma^2) R0 a_s);
* purity P = 1 - 8 (2 k0^2 + sigma^2) R0 a_s + O(a_s^2) = 1 - r_QM^2,
  equivalently expressed through the cross section Sigma = 4 pi a_s^2;
* square-well phase shift theta0 from the interior/exterior matching
  k_in cot(k_in L) = k_out cot(k_out L + theta0), with the correlation
  entering as k_in = sqrt(1-r) k0, i.e. V = r E;
* algebraic inversions recovering r from V, Sigma, or P;
* the prolongation Delta: the extra affine time a correlated geodesic
  needs to reach the momentum the non-correlated one has at tau0. The
  exact form solves tanh(A0 tau*) = (1-r)^{-1/2} tanh(A0 tau0) by artanh
  (no iteration); the approximate form is
  Delta = -ln(1 - ((1-r)^{-1/2} - 1) eta) / (2 A0), eta = e^{2 A0 tau0}/2.
  A solution exists only below r_bound = 2/eta; the exact solve also
  requires (1-r)^{-1/2} tanh(A0 tau0) < 1. Both limits raise
  ProlongationBoundError carrying r_bound.

Only the repulsive branch (V >= 0, r >= 0, a_s >= 0) is supported;
attractive potentials are rejected. Internally hbar = 1 so momenta and
wave numbers coincide; a different hbar only rescales at the interface.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import (
    DomainError,
    ProlongationBoundError,
    RegimeError,
    RegimeWarning,
    ResonanceError,
)
from .geodesics import InitialConditions, amplitude_A0
from .models import Macrostate3, ModelParams, pdf_corr3

#: r_QM beyond this strains the perturbative Gaussian identification.
R_QM_REGIME = 0.3

#: Low-energy s-wave regime bound on k0 * L.
K0L_REGIME = 0.3


@dataclass(frozen=True)
class ScatteringConfig:
    """Physical configuration of the head-on collision.

    Hard errors for impossible values; regime strains (k0*L or the relative
    spread too large) only warn, so sweeps can still explore the edges.
    """

    k0: float
    sigma_k0: float
    R0: float
    L: float
    a_s: float = 0.0
    reduced_mass: float = 0.5
    hbar: float = 1.0

    def __post_init__(self):
        if not (
            self.k0 > 0
            and self.sigma_k0 > 0
            and self.R0 > 0
            and self.L > 0
            and self.reduced_mass > 0
            and self.hbar > 0
        ):
            raise DomainError(f"scattering scales must be positive: {self}")
        if self.a_s < 0:
            raise DomainError(
                f"a_s = {self.a_s} < 0: only the repulsive branch is supported"
            )
        if self.k0 * self.L >= K0L_REGIME:
            warnings.warn(
                f"k0*L = {self.k0 * self.L:.3g} is outside the low-energy "
                f"s-wave regime (< {K0L_REGIME})",
                RegimeWarning,
                stacklevel=2,
            )
        if self.sigma_k0 / self.k0 > 0.1:
            warnings.warn(
                f"sigma_k0/k0 = {self.sigma_k0 / self.k0:.3g} > 0.1: wave packets "
                "are not well localized",
                RegimeWarning,
                stacklevel=2,
            )

    @property
    def kinetic_energy(self) -> float:
        """Relative kinetic energy E = hbar^2 k0^2 / (2 mu)."""
        return self.hbar**2 * self.k0**2 / (2.0 * self.reduced_mass)

    def initial_conditions(self, tau0: float = 1.0) -> InitialConditions:
        """Geodesic-side initial data (p0 = hbar k0, sigma0 = hbar sigma_k0)."""
        return InitialConditions(
            p0=self.hbar * self.k0,
            sigma0=self.hbar * self.sigma_k0,
            tau0=tau0,
            R0=self.R0,
        )


@dataclass(frozen=True)
class ProlongationReport:
    """Entanglement duration: exact and approximate prolongations.

    delta is the exact artanh solve, delta_approx the log form; tau_star is
    the correlated-branch time at which the reference momentum is reached.
    """

    delta: float
    delta_approx: float
    tau_star: float
    eta_delta: float
    r_bound: float


def density_pre(cfg: ScatteringConfig, k1: float, k2: float) -> float:
    """Pre-collision momentum density: product Gaussians centered at (+k0, -k0)."""
    state = Macrostate3(cfg.k0, -cfg.k0, cfg.sigma_k0)
    return pdf_corr3(state, ModelParams(0.0), (k1, k2))


def density_post(cfg: ScatteringConfig, r_qm_value: float, k1: float, k2: float) -> float:
    """Post-collision density: the correlated Gaussian with r = r_QM."""
    if r_qm_value >= R_QM_REGIME:
        raise RegimeError(
            f"r_QM = {r_qm_value:.3g} >= {R_QM_REGIME}: the correlated-Gaussian "
            "approximation of the post-collision density is invalid"
        )
    state = Macrostate3(cfg.k0, -cfg.k0, cfg.sigma_k0)
    return pdf_corr3(state, ModelParams(r_qm_value), (k1, k2))


def varrho(cfg: ScatteringConfig, k: float) -> complex:
    """Scattered-wave admixture rho(k) = 4i (k0 - i sigma^2 R0) k^2 f(k) / sigma^2.

    With the constant amplitude f = -a_s, Re(rho) = 4 R0 k^2 f exactly and
    |rho|^2 = 16 (k0^2 + sigma^4 R0^2) k^4 f^2 / sigma^4 exactly.
    """
    f = -cfg.a_s
    s2 = cfg.sigma_k0**2
    return 4.0j * (cfg.k0 - 1.0j * s2 * cfg.R0) * k * k * f / s2


def varrho_re_approx(cfg: ScatteringConfig, k: float) -> float:
    """Leading real part 4 R0 k^2 f(k); exact for a real constant amplitude."""
    return 4.0 * cfg.R0 * k * k * (-cfg.a_s)


def r_qm(cfg: ScatteringConfig) -> float:
    """Micro-correlation induced by the scattering.

    r_QM = sqrt(8 (2 k0^2 + sigma^2) R0 a_s); warns when it leaves the
    perturbative window.
    """
    value = math.sqrt(
        8.0 * (2.0 * cfg.k0**2 + cfg.sigma_k0**2) * cfg.R0 * cfg.a_s
    )
    if value >= R_QM_REGIME:
        warnings.warn(
            f"r_QM = {value:.3g} >= {R_QM_REGIME}: perturbative identification "
            "with the correlated Gaussian is strained",
            RegimeWarning,
            stacklevel=2,
        )
    return value


def gaussian_moment(n: int, sigma: float) -> float:
    """Moment integral int e^{-k^2/sigma^2} k^n dk over the real line.

    Zero for odd n; for n = 2m it is (2m-1)!! sqrt(pi) sigma (sigma^2/2)^m.
    """
    if n < 0 or n != int(n):
        raise DomainError(f"moment order must be a non-negative integer, got {n}")
    if n % 2 == 1:
        return 0.0
    m = n // 2
    double_fact = 1.0
    for j in range(2 * m - 1, 0, -2):
        double_fact *= j
    return double_fact * math.sqrt(math.pi) * sigma * (sigma**2 / 2.0) ** m


def normalization_integral(cfg: ScatteringConfig) -> float:
    """Norm of the raw post-collision density before renormalization.

    2 pi sigma^2 [1 - 4 (2 k0^2 + sigma^2) R0 a_s
                  + 4 (k0^2 + sigma^4 R0^2)(4 k0^4 + 12 k0^2 sigma^2
                     + 3 sigma^4) a_s^2 / sigma^4].
    """
    k2, s2 = cfg.k0**2, cfg.sigma_k0**2
    a = cfg.a_s
    bracket = (
        1.0
        - 4.0 * (2.0 * k2 + s2) * cfg.R0 * a
        + 4.0
        * (k2 + s2**2 * cfg.R0**2)
        * (4.0 * k2**2 + 12.0 * k2 * s2 + 3.0 * s2**2)
        * a**2
        / s2**2
    )
    return 2.0 * math.pi * s2 * bracket


def _purity_correction_guard(correction: float) -> None:
    if correction >= 1.0:
        raise RegimeError(
            f"purity correction {correction:.3g} >= 1: outside the first-order regime"
        )
    if correction >= 0.2:
        warnings.warn(
            f"purity correction {correction:.3g} >= 0.2: first-order form is strained",
            RegimeWarning,
            stacklevel=3,
        )


def purity_series(cfg: ScatteringConfig) -> float:
    """First-order purity P = 1 - 8 (2 k0^2 + sigma^2) R0 a_s  (= 1 - r_QM^2)."""
    correction = 8.0 * (2.0 * cfg.k0**2 + cfg.sigma_k0**2) * cfg.R0 * cfg.a_s
    _purity_correction_guard(correction)
    return 1.0 - correction


def purity_cross_section(cfg: ScatteringConfig, sigma_cs: float) -> float:
    """Purity via the cross section: P = 1 - 4 (2 k0^2 + sigma^2) R0 sqrt(Sigma/pi)."""
    if sigma_cs < 0:
        raise DomainError(f"cross section must be non-negative, got {sigma_cs}")
    correction = (
        4.0
        * (2.0 * cfg.k0**2 + cfg.sigma_k0**2)
        * cfg.R0
        * math.sqrt(sigma_cs)
        / math.sqrt(math.pi)
    )
    _purity_correction_guard(correction)
    return 1.0 - correction


def square_well_matching(cfg: ScatteringConfig, V: float) -> float:
    """Phase shift from the interior/exterior logarithmic-derivative matching.

    Solves k_in cot(k_in L) = k_out cot(k_out L + theta) with
    k_in = sqrt(2 mu (E - V))/hbar inside and k_out = sqrt(2 mu E)/hbar
    outside. Only the E > V branch (oscillatory interior) is supported.
    """
    if V < 0:
        raise DomainError(f"V = {V} < 0: only the repulsive branch is supported")
    E = cfg.kinetic_energy
    if E <= V:
        raise DomainError(
            f"E = {E:.6g} <= V = {V:.6g}: evanescent interior branch unsupported"
        )
    k_in = math.sqrt(2.0 * cfg.reduced_mass * (E - V)) / cfg.hbar
    k_out = math.sqrt(2.0 * cfg.reduced_mass * E) / cfg.hbar
    return _theta_from_wavenumbers(k_in, k_out, cfg.L)


def _theta_from_wavenumbers(k_in: float, k_out: float, L: float) -> float:
    num = k_out * math.tan(k_in * L) - k_in * math.tan(k_out * L)
    den = k_in + k_out * math.tan(k_out * L) * math.tan(k_in * L)
    if abs(den) < 1e-12:
        raise ResonanceError(
            f"matching denominator {den:.3g} vanishes; phase shift is resonant"
        )
    return math.atan(num / den)


def phase_shift_exact(cfg: ScatteringConfig, r: float) -> float:
    """Exact s-wave phase shift with the correlation-reduced interior wave number.

    The correlation slows the relative motion to k_r = sqrt(1-r) k0, which
    plays the role of the interior wave number of a square well of height
    V = r E.
    """
    if not 0.0 <= r < 1.0:
        raise DomainError(f"correlation out of range: {r}")
    k_r = math.sqrt(1.0 - r) * cfg.k0
    return _theta_from_wavenumbers(k_r, cfg.k0, cfg.L)


def phase_shift_series(cfg: ScatteringConfig, r: float, reduced: bool = False) -> float:
    """Low-energy series for the phase shift.

    tan(theta0) ~ [-(k0 L)^3/3 + (k0 L)^5/15] r + [2 (k0 L)^5/15] r^2;
    with ``reduced=True`` only the leading cubic term -r (k0 L)^3 / 3 is kept.
    """
    if not 0.0 <= r < 1.0:
        raise DomainError(f"correlation out of range: {r}")
    x = cfg.k0 * cfg.L
    if x >= K0L_REGIME or r >= R_QM_REGIME:
        warnings.warn(
            f"series outside its regime (k0*L = {x:.3g}, r = {r:.3g})",
            RegimeWarning,
            stacklevel=2,
        )
    if reduced:
        return -r * x**3 / 3.0
    t = (-(x**3) / 3.0 + x**5 / 15.0) * r + (2.0 * x**5 / 15.0) * r * r
    return math.atan(t)


def phase_shift_from_potential(V: float, cfg: ScatteringConfig) -> float:
    """theta0 = -2 mu V k0 L^3 / (3 hbar^2) for a weak repulsive well."""
    if V < 0:
        raise DomainError(f"V = {V} < 0: only the repulsive branch is supported")
    return -2.0 * cfg.reduced_mass * V * cfg.k0 * cfg.L**3 / (3.0 * cfg.hbar**2)


def potential_from_r(r: float, cfg: ScatteringConfig) -> float:
    """Scattering potential V = r E: the correlation is the potential-to-energy ratio."""
    if not 0.0 <= r < 1.0:
        raise DomainError(f"correlation out of range: {r}")
    return r * cfg.kinetic_energy


def cross_section(cfg: ScatteringConfig, r: float) -> float:
    """Total cross section Sigma = 4 pi r^2 k0^4 L^6 / 9 (= 4 pi a_s^2)."""
    if not 0.0 <= r < 1.0:
        raise DomainError(f"correlation out of range: {r}")
    return 4.0 * math.pi * r**2 * cfg.k0**4 * cfg.L**6 / 9.0


def scattering_length_from_r(cfg: ScatteringConfig, r: float) -> float:
    """Effective a_s = r k0^2 L^3 / 3 implied by the correlation."""
    return r * cfg.k0**2 * cfg.L**3 / 3.0


def purity_from_r(cfg: ScatteringConfig, r: float) -> float:
    """Purity P = 1 - 8 r k0^2 (2 k0^2 + sigma^2) R0 L^3 / 3."""
    if not 0.0 <= r < 1.0:
        raise DomainError(f"correlation out of range: {r}")
    correction = (
        8.0 * r * cfg.k0**2 * (2.0 * cfg.k0**2 + cfg.sigma_k0**2) * cfg.R0 * cfg.L**3 / 3.0
    )
    _purity_correction_guard(correction)
    return 1.0 - correction


def r_from_potential(cfg: ScatteringConfig, V: float) -> float:
    """Invert V = r E:  r = 2 mu V / (hbar^2 k0^2)."""
    if V < 0:
        raise DomainError(f"V = {V} < 0: only the repulsive branch is supported")
    return 2.0 * cfg.reduced_mass * V / (cfg.hbar**2 * cfg.k0**2)


def r_from_cross_section(cfg: ScatteringConfig, sigma_cs: float) -> float:
    """Invert the cross section:  r = 3 sqrt(Sigma) / (2 sqrt(pi) k0^2 L^3)."""
    if sigma_cs < 0:
        raise DomainError(f"cross section must be non-negative, got {sigma_cs}")
    return 3.0 * math.sqrt(sigma_cs) / (2.0 * math.sqrt(math.pi) * cfg.k0**2 * cfg.L**3)


def r_from_purity(cfg: ScatteringConfig, purity: float) -> float:
    """Invert the purity:  r = 3 (1-P) / (8 k0^2 (2 k0^2 + sigma^2) R0 L^3)."""
    if purity > 1.0:
        raise DomainError(f"purity {purity} > 1 is unphysical")
    return (
        3.0
        * (1.0 - purity)
        / (8.0 * cfg.k0**2 * (2.0 * cfg.k0**2 + cfg.sigma_k0**2) * cfg.R0 * cfg.L**3)
    )


def eta_c(cfg: ScatteringConfig) -> float:
    """Dimensionless purity-complexity coefficient (8/3) k0^2 (2k0^2+sigma^2) R0 L^3."""
    return (
        8.0 / 3.0 * cfg.k0**2 * (2.0 * cfg.k0**2 + cfg.sigma_k0**2) * cfg.R0 * cfg.L**3
    )


def potential_density(cfg: ScatteringConfig) -> float:
    """Uniform potential density V/L^3 = 4 hbar^2 k0^4 (2 k0^2 + sigma^2) R0 / (3 mu).

    Fixed entirely by the initial conditions: eliminating a_s between the
    induced correlation and the cross-section chain leaves no free scale.
    """
    return (
        4.0
        * cfg.hbar**2
        * cfg.k0**4
        * (2.0 * cfg.k0**2 + cfg.sigma_k0**2)
        * cfg.R0
        / (3.0 * cfg.reduced_mass)
    )


def prolongation(ic: InitialConditions, r: float) -> ProlongationReport:
    """Entanglement duration for correlation r, exact and approximate.

    Raises ProlongationBoundError when r reaches either the approximate
    bound 2/eta or the exact no-solution threshold, whichever is lower
    (they agree to O(e^{-2 A0 tau0})).
    """
    if not 0.0 <= r < 1.0:
        raise DomainError(f"correlation out of range: {r}")
    A0 = amplitude_A0(ic)
    X = A0 * ic.tau0
    eta = 0.5 * math.exp(2.0 * X)
    r_bound = 2.0 / eta

    if r == 0.0:
        return ProlongationReport(0.0, 0.0, ic.tau0, eta, r_bound)
    if r >= r_bound:
        raise ProlongationBoundError(r, r_bound)

    scale = 1.0 / math.sqrt(1.0 - r)
    arg = scale * math.tanh(X)
    inner = 1.0 - (scale - 1.0) * eta
    # three thresholds cluster just below 2/eta, ordered
    # 1 - (eta/(1+eta))^2  <  sech^2(A0 tau0)  <  2/eta  (gaps of O(1/eta^2));
    # the log argument goes nonpositive first, then the exact solve loses
    # its solution — all are reported as the same bound violation
    if arg >= 1.0 or inner <= 0.0:
        raise ProlongationBoundError(r, r_bound)
    tau_star = math.atanh(arg) / A0
    delta_exact = tau_star - ic.tau0
    delta_approx = -math.log(inner) / (2.0 * A0)
    return ProlongationReport(delta_exact, delta_approx, tau_star, eta, r_bound)
