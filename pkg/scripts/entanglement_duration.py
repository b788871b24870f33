#!/usr/bin/env python3
"""Entanglement duration (prolongation) sweeps.

For several packet localizations sigma0/p0, sweeps the correlation up to
the existence bound and tabulates the exact and approximate prolongations.
The duration grows logarithmically toward the bound r_bound = 2/eta with
eta = exp(2 A0 tau0)/2, so sharper packets (smaller sigma0/p0) tolerate
only exponentially smaller correlations.

Usage: python scripts/entanglement_duration.py [outdir]
"""

import csv
import pathlib
import sys

import numpy as np

from gaussgeo.errors import ProlongationBoundError
from gaussgeo.geodesics import InitialConditions
from gaussgeo.scattering import prolongation

OUTDIR = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "out/prolongation")
RATIOS = (0.1, 0.03, 0.01)


def main() -> None:
    OUTDIR.mkdir(parents=True, exist_ok=True)
    for ratio in RATIOS:
        ic = InitialConditions(p0=1.0, sigma0=ratio, tau0=1.0, R0=10.0)
        bound = prolongation(ic, 0.0).r_bound
        path = OUTDIR / f"duration_ratio{ratio:g}.csv"
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["r", "delta_exact", "delta_approx", "flagged"])
            for frac in np.linspace(0.0, 0.995, 200):
                r = float(frac * bound)
                try:
                    rep = prolongation(ic, r)
                    row = [r, rep.delta, rep.delta_approx, 0]
                except ProlongationBoundError:
                    row = [r, float("nan"), float("nan"), 1]
                writer.writerow(
                    [format(v, ".17g") if isinstance(v, float) else v for v in row]
                )
        print(f"wrote {path}  (r_bound = {bound:.6g})")


if __name__ == "__main__":
    main()
