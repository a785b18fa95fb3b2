"""Command-line entry point.

    aerolink sweep --config scenario.json --out results.csv [--figures DIR]
    aerolink point --link tn --distance-km 0.5 --height-m 40
    aerolink paper-figs --out DIR

Exit codes: 0 success, 1 configuration or usage error, 2 runtime or I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from aerolink.config import parse_config
from aerolink.errors import ConfigError, ModelDomainError
from aerolink.geometry import EarthModel
from aerolink.los import UrbanEnvironment
from aerolink.output import (
    FIGURES,
    RECORD_FIELDS,
    emit_csv,
    emit_figure,
    emit_figure_csv,
    record_row,
)
from aerolink.presets import REFERENCE_ENV, ntn_link, reference_spec, tn_link
from aerolink.scenario import SweepSpec, evaluate_point, run_sweep

EXIT_OK, EXIT_CONFIG, EXIT_RUNTIME = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="aerolink", description="TN/NTN link budget and coverage for low-altitude aircraft.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sweep", help="run a height sweep from a JSON scenario")
    p.add_argument("--config", required=True, help="scenario JSON file")
    p.add_argument("--out", help="CSV output path (overrides output.csv_path)")
    p.add_argument("--figures", help="directory for SVG figures (overrides output.figures_dir)")
    p.add_argument("--workers", type=int, default=1, help="threads used for the sweep")

    p = sub.add_parser("point", help="evaluate one link at one aircraft height")
    p.add_argument("--link", required=True, choices=("tn", "ntn"))
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument("--distance-km", type=float, help="TN ground range")
    where.add_argument("--elevation-deg", type=float, help="NTN elevation angle")
    p.add_argument("--height-m", type=float, required=True, help="aircraft height AGL")
    p.add_argument("--label")
    p.add_argument("--node-height-m", type=float)
    p.add_argument("--carrier-frequency-ghz", type=float)
    p.add_argument("--tx-power-dbm", type=float)
    p.add_argument("--tx-gain-dbi", type=float)
    p.add_argument("--rx-gain-dbi", type=float)
    p.add_argument("--sensitivity-dbm", type=float)
    p.add_argument("--sf-los-db", type=float)
    p.add_argument("--sf-nlos-db", type=float)
    p.add_argument("--cl-max-db", type=float)
    p.add_argument("--etilt-deg", type=float)
    p.add_argument("--hpbw-deg", type=float)
    p.add_argument("--sla-v-db", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta-per-km2", type=float)
    p.add_argument("--gamma-m", type=float)
    p.add_argument("--k-factor", type=float)

    p = sub.add_parser("paper-figs", help="reference scenario: 4 SVG figures and their CSVs")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--step-m", type=float, default=1.0, help="height grid step")
    return parser


def _write_outputs(series, csv_path, figures_dir, figures) -> None:
    if csv_path:
        emit_csv(series, csv_path)
    if figures_dir:
        Path(figures_dir).mkdir(parents=True, exist_ok=True)
        for which in figures:
            emit_figure(series, which, Path(figures_dir) / f"{which}.svg")


def cmd_sweep(args) -> int:
    cfg = parse_config(args.config)
    for w in cfg.warnings:
        print(f"warning: {w}", file=sys.stderr)
    csv_path = args.out or cfg.output.csv_path
    figures_dir = args.figures or cfg.output.figures_dir
    if not csv_path and not figures_dir:
        raise UsageError("sweep: no output requested; pass --out and/or --figures")
    series = run_sweep(cfg.spec, workers=args.workers)
    _write_outputs(series, csv_path, figures_dir, cfg.output.figures)
    return EXIT_OK


_POINT_OVERRIDES = {
    "node_height_m": "node_height_m",
    "carrier_frequency_ghz": "carrier_frequency_GHz",
    "tx_power_dbm": "tx_power_dBm",
    "tx_gain_dbi": "tx_gain_dBi",
    "rx_gain_dbi": "rx_gain_dBi",
    "sensitivity_dbm": "sensitivity_dBm",
    "sf_los_db": "sf_los_dB",
    "sf_nlos_db": "sf_nlos_dB",
    "cl_max_db": "cl_max_dB",
}
_PATTERN_OVERRIDES = {"etilt_deg": "etilt_deg", "hpbw_deg": "hpbw_deg", "sla_v_db": "sla_v_dB"}


def cmd_point(args) -> int:
    env = UrbanEnvironment(
        alpha=REFERENCE_ENV.alpha if args.alpha is None else args.alpha,
        beta_per_km2=REFERENCE_ENV.beta_per_km2 if args.beta_per_km2 is None else args.beta_per_km2,
        gamma_m=REFERENCE_ENV.gamma_m if args.gamma_m is None else args.gamma_m,
    )
    earth = EarthModel() if args.k_factor is None else EarthModel(k_factor=args.k_factor)
    overrides = {key: getattr(args, opt) for opt, key in _POINT_OVERRIDES.items()
                 if getattr(args, opt) is not None}
    pattern = {key: getattr(args, opt) for opt, key in _PATTERN_OVERRIDES.items()
               if getattr(args, opt) is not None}
    if args.link == "tn":
        if args.distance_km is None:
            raise UsageError("point: --link tn needs --distance-km")
        link = tn_link(args.distance_km, env, label=args.label, **overrides, **pattern)
    else:
        if args.elevation_deg is None:
            raise UsageError("point: --link ntn needs --elevation-deg")
        if pattern:
            raise UsageError("point: pattern options apply only to --link tn")
        link = ntn_link(args.elevation_deg, env, label=args.label, **overrides)
    # validates the height against the link the same way a sweep would
    SweepSpec(environment=env, links=(link,), heights_m=(args.height_m,), earth=earth)
    record = evaluate_point(env, link, args.height_m, earth)
    print(",".join(RECORD_FIELDS))
    print(",".join(record_row(record)))
    return EXIT_OK


def cmd_paper_figs(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    series = run_sweep(reference_spec(step_m=args.step_m))
    for which in FIGURES:
        emit_figure(series, which, out / f"{which}.svg")
        emit_figure_csv(series, which, out / f"{which}.csv")
    return EXIT_OK


COMMANDS = {"sweep": cmd_sweep, "point": cmd_point, "paper-figs": cmd_paper_figs}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except (UsageError, ConfigError) as exc:
        for line in getattr(exc, "problems", [str(exc)]):
            print(f"error: {line}", file=sys.stderr)
        return EXIT_CONFIG
    except ModelDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
