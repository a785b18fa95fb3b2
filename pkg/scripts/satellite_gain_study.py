"""Lowest feasible aircraft height on a low-elevation satellite link.

Sweeps the satellite receive gain and the effective-Earth k-factor, since the
k-factor sets the slant range (and so the path loss) at low elevation.

    python scripts/satellite_gain_study.py --elevation-deg 10
"""

import argparse

import numpy as np

from aerolink.geometry import EarthModel, slant_range
from aerolink.presets import REFERENCE_ENV, ntn_link
from aerolink.scenario import SweepSpec, min_feasible_height, run_sweep


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--elevation-deg", type=float, default=10.0)
    parser.add_argument("--gains-dbi", type=float, nargs="+", default=list(np.arange(36.0, 44.5, 1.0)))
    parser.add_argument("--k-factors", type=float, nargs="+", default=[1.0, 4 / 3, 2.0])
    args = parser.parse_args()

    print("G_rx (dBi) " + " ".join(f"k={k:<6.3g}" for k in args.k_factors))
    print("slant (km) " + " ".join(
        f"{slant_range(0.0, 300_000.0, args.elevation_deg, EarthModel(k_factor=k)) / 1e3:<8.0f}"
        for k in args.k_factors))
    for g in args.gains_dbi:
        link = ntn_link(args.elevation_deg, rx_gain_dBi=float(g))
        row = []
        for k in args.k_factors:
            series = run_sweep(SweepSpec(REFERENCE_ENV, (link,), earth=EarthModel(k_factor=k)))
            h = min_feasible_height(series, link.label)
            row.append("-" if h is None else f"{h:g} m")
        print(f"{g:<10g} " + " ".join(f"{x:<8}" for x in row))


if __name__ == "__main__":
    main()
