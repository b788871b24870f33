#!/usr/bin/env python3
"""Momentum and spread profiles of a collision history.

Sweeps the joined geodesic path across the junction for a few correlation
strengths and writes one CSV per correlation: columns tau,mu1,mu2,sigma.
The momenta cross at tau = 0 with the post-collision slope reduced by
sqrt(1-r); the spread is an even bell peaking at the junction.

Usage: python scripts/collision_profiles.py [outdir]
"""

import csv
import pathlib
import sys

import numpy as np

from gaussgeo.geodesics import InitialConditions, joined_path
from gaussgeo.models import ModelParams

OUTDIR = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "out/profiles")
IC = InitialConditions(p0=1.0, sigma0=0.1, tau0=1.0, R0=10.0)
R_VALUES = (0.0, 0.2, 0.5)
TAUS = np.linspace(-2.0, 2.0, 321)


def main() -> None:
    OUTDIR.mkdir(parents=True, exist_ok=True)
    for r in R_VALUES:
        params = ModelParams(r)
        path = OUTDIR / f"profile_r{r:.2f}.csv"
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["tau", "mu1", "mu2", "sigma"])
            for tau in TAUS:
                s = joined_path(float(tau), params, IC)
                writer.writerow(
                    [format(v, ".17g") for v in (tau, s.mu1, s.mu2, s.sigma)]
                )
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
