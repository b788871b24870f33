import numpy as np
import pytest

from gaussgeo.geodesics import InitialConditions
from gaussgeo.scattering import ScatteringConfig


@pytest.fixture
def desk_ic() -> InitialConditions:
    """Reference initial conditions used throughout: p0=1, sigma0=0.1, tau0=1."""
    return InitialConditions(p0=1.0, sigma0=0.1, tau0=1.0, R0=10.0)


@pytest.fixture
def narrow_ic() -> InitialConditions:
    """Very well-localized packets, sigma0/p0 = 1e-3."""
    return InitialConditions(p0=1.0, sigma0=1e-3, tau0=1.0, R0=10.0)


@pytest.fixture
def desk_cfg() -> ScatteringConfig:
    """Reference scattering configuration: k0=1, sigma=0.1, R0=10, L=0.1."""
    return ScatteringConfig(k0=1.0, sigma_k0=0.1, R0=10.0, L=0.1, a_s=1e-5)


def grid_cases():
    return [(sg, r) for sg in (0.1, 1.0, 10.0) for r in (0.0, 0.3, 0.7, 0.9)]


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
