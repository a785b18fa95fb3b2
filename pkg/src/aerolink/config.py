"""Scenario configuration: JSON in, validated :class:`SweepSpec` out.

The format is described by ``data/scenario.schema.json``. Every physical value
carries its unit in the key name. Anything omitted falls back to the
reference scenario in :mod:`aerolink.presets`; unknown keys are rejected.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from aerolink.errors import ConfigError, ModelDomainError
from aerolink.geometry import EarthModel
from aerolink.los import UrbanEnvironment
from aerolink.presets import (
    NTN_ELEVATIONS_DEG,
    REFERENCE_ENV,
    TN_RANGES_KM,
    ntn_link,
    tn_link,
)
from aerolink.scenario import LinkKind, LinkSpec, SweepSpec, height_grid

SCHEMA_VERSION = 1
FIGURES = ("los", "pathloss", "gain", "rssi")

_LINK_PARAM_KEYS = (
    "node_height_m",
    "carrier_frequency_GHz",
    "sf_los_dB",
    "sf_nlos_dB",
    "cl_max_dB",
    "tx_power_dBm",
    "tx_gain_dBi",
    "rx_gain_dBi",
    "sensitivity_dBm",
    "bandwidth_MHz",
    "scs_kHz",
)
_FORBIDDEN_BY_KIND = {
    "tn": ("elevation_deg",),
    "ntn": ("ground_range_km", "pattern"),
}


@dataclass(frozen=True)
class OutputOptions:
    csv_path: str | None = None
    figures_dir: str | None = None
    figures: tuple[str, ...] = FIGURES


@dataclass(frozen=True)
class ParsedConfig:
    spec: SweepSpec
    output: OutputOptions = OutputOptions()
    warnings: list[str] = field(default_factory=list)


@lru_cache(maxsize=None)
def load_schema() -> dict:
    text = resources.files("aerolink").joinpath("data/scenario.schema.json").read_text()
    return json.loads(text)


@lru_cache(maxsize=None)
def ntn_bands() -> tuple[tuple[str, float, float, float, float], ...]:
    """5G NR NTN bands as ``(band, ul_low, ul_high, dl_low, dl_high)`` in MHz."""
    text = resources.files("aerolink").joinpath("data/ntn_bands.csv").read_text()
    rows = csv.DictReader(text.splitlines())
    return tuple(
        (
            r["band"],
            float(r["ul_low_MHz"]),
            float(r["ul_high_MHz"]),
            float(r["dl_low_MHz"]),
            float(r["dl_high_MHz"]),
        )
        for r in rows
    )


def ntn_band_for(frequency_GHz: float) -> str | None:
    mhz = frequency_GHz * 1000.0
    for band, ul_lo, ul_hi, dl_lo, dl_hi in ntn_bands():
        if ul_lo <= mhz <= ul_hi or dl_lo <= mhz <= dl_hi:
            return band
    return None


def _field_path(error: jsonschema.ValidationError) -> str:
    out = ""
    for part in error.absolute_path:
        out += f"[{part}]" if isinstance(part, int) else (f".{part}" if out else str(part))
    return out or "<root>"


def _schema_problems(doc) -> list[str]:
    validator = jsonschema.Draft202012Validator(load_schema())
    errors = sorted(validator.iter_errors(doc), key=lambda e: (list(map(str, e.absolute_path)), e.message))
    problems = [f"{_field_path(err)}: {err.message}" for err in errors]
    for i, raw in enumerate(doc.get("links", []) if isinstance(doc, dict) else []):
        if not isinstance(raw, dict):
            continue
        for key in _FORBIDDEN_BY_KIND.get(raw.get("kind"), ()):
            if key in raw:
                problems.append(f"links[{i}].{key}: not allowed on a {raw['kind']} link")
    return problems


def _build_link(raw: dict, env: UrbanEnvironment) -> LinkSpec:
    params = {k: raw[k] for k in _LINK_PARAM_KEYS if k in raw}
    if raw["kind"] == LinkKind.TN.value:
        params.update(raw.get("pattern", {}))
        return tn_link(raw["ground_range_km"], env, label=raw.get("label"), **params)
    return ntn_link(raw["elevation_deg"], env, label=raw.get("label"), **params)


def build_spec(doc: dict) -> ParsedConfig:
    """Validate a decoded configuration document and build the sweep spec."""
    problems = _schema_problems(doc)
    if problems:
        raise ConfigError(problems)

    env = UrbanEnvironment(
        **{
            "alpha": REFERENCE_ENV.alpha,
            "beta_per_km2": REFERENCE_ENV.beta_per_km2,
            "gamma_m": REFERENCE_ENV.gamma_m,
            **doc.get("environment", {}),
        }
    )
    try:
        earth = EarthModel(**doc.get("earth", {}))
    except ModelDomainError as exc:
        problems.append(f"earth: {exc}")

    if "heights_m" in doc:
        heights = tuple(float(h) for h in doc["heights_m"])
    else:
        h = doc.get("heights", {})
        try:
            heights = height_grid(h.get("start_m", 1.0), h.get("stop_m", 300.0), h.get("step_m", 1.0))
        except ConfigError as exc:
            problems.extend(f"heights: {p}" for p in exc.problems)

    links = []
    raw_links = doc.get("links")
    if raw_links is None:
        links = [tn_link(r, env) for r in TN_RANGES_KM] + [
            ntn_link(e, env) for e in NTN_ELEVATIONS_DEG
        ]
    else:
        for i, raw in enumerate(raw_links):
            try:
                links.append(_build_link(raw, env))
            except (ConfigError, ModelDomainError) as exc:
                problems.append(f"links[{i}]: {exc}")
    if problems:
        raise ConfigError(problems)

    try:
        spec = SweepSpec(environment=env, links=tuple(links), heights_m=heights, earth=earth)
    except ConfigError as exc:
        raise ConfigError(exc.problems) from None

    warnings = []
    for link in spec.links:
        f = link.propagation.carrier_frequency_GHz
        if link.kind is LinkKind.NTN and ntn_band_for(f) is None:
            warnings.append(
                f"link {link.label!r}: carrier {f:g} GHz lies outside every 5G NR NTN band"
            )

    out = doc.get("output", {})
    output = OutputOptions(
        csv_path=out.get("csv_path"),
        figures_dir=out.get("figures_dir"),
        figures=tuple(out.get("figures", FIGURES)),
    )
    return ParsedConfig(spec=spec, output=output, warnings=warnings)


def parse_config(path) -> ParsedConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {str(path)!r}: {exc.strerror or exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc})") from None
    return build_spec(doc)


def spec_to_config(spec: SweepSpec, output: OutputOptions | None = None) -> dict:
    """Canonical JSON-ready form of ``spec``; :func:`build_spec` inverts it."""
    links = []
    for link in spec.links:
        prop, term = link.propagation, link.terminal
        raw = {"kind": link.kind.value, "label": link.label}
        if link.kind is LinkKind.TN:
            raw["ground_range_km"] = link.ground_range_km
        else:
            raw["elevation_deg"] = link.elevation_deg
        raw.update(
            node_height_m=link.node_height_m,
            carrier_frequency_GHz=prop.carrier_frequency_GHz,
            sf_los_dB=prop.sf_los_dB,
            sf_nlos_dB=prop.sf_nlos_dB,
            cl_max_dB=prop.cl_max_dB,
            tx_power_dBm=term.tx_power_dBm,
            tx_gain_dBi=term.tx_gain_dBi,
            rx_gain_dBi=term.rx_gain_dBi,
            sensitivity_dBm=term.sensitivity_dBm,
            bandwidth_MHz=term.bandwidth_MHz,
            scs_kHz=term.scs_kHz,
        )
        if link.pattern is not None:
            raw["pattern"] = {
                "etilt_deg": link.pattern.etilt_deg,
                "hpbw_deg": link.pattern.hpbw_deg,
                "sla_v_dB": link.pattern.sla_v_dB,
            }
        links.append(raw)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "environment": {
            "alpha": spec.environment.alpha,
            "beta_per_km2": spec.environment.beta_per_km2,
            "gamma_m": spec.environment.gamma_m,
        },
        "earth": {"true_radius_m": spec.earth.true_radius_m, "k_factor": spec.earth.k_factor},
        "heights_m": list(spec.heights_m),
        "links": links,
    }
    if output is not None:
        out = {"figures": list(output.figures)}
        if output.csv_path:
            out["csv_path"] = output.csv_path
        if output.figures_dir:
            out["figures_dir"] = output.figures_dir
        doc["output"] = out
    return doc
