"""Run the reference scenario, write figures/CSVs and print the feasibility summary.

    python scripts/reproduce_figures.py --out results/
"""

import argparse
from pathlib import Path

from aerolink.output import FIGURES, emit_figure, emit_figure_csv
from aerolink.presets import reference_spec
from aerolink.scenario import coverage_intervals, hybrid_availability, run_sweep


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="results", type=Path)
    parser.add_argument("--step-m", default=1.0, type=float)
    args = parser.parse_args()

    series = run_sweep(reference_spec(step_m=args.step_m))
    args.out.mkdir(parents=True, exist_ok=True)
    for which in FIGURES:
        emit_figure(series, which, args.out / f"{which}.svg")
        emit_figure_csv(series, which, args.out / f"{which}.csv")

    print(f"{'link':<12} {'P_LoS@10m':>9} {'PL@1m':>7} {'PL@50m':>7}  coverage intervals (m)")
    for label in series.labels:
        recs = series.records_for(label)
        by_h = {r.height_m: r for r in recs}
        ivs = coverage_intervals(series, label)
        text = ", ".join(f"[{lo:g}, {hi:g}]" for lo, hi in ivs) or "none"
        print(f"{label:<12} {by_h[10.0].p_los:9.3f} {by_h[1.0].pl_combined_dB:7.1f} "
              f"{by_h[50.0].pl_combined_dB:7.1f}  {text}")
    print(f"hybrid availability over all links: {hybrid_availability(series).fraction:.1%}")
    print(f"wrote {2 * len(FIGURES)} files to {args.out}/")


if __name__ == "__main__":
    main()
