"""Built-in evaluation scenario: the reference urban TN/NTN setup."""

from __future__ import annotations

from aerolink.antenna import VerticalPattern
from aerolink.geometry import DEFAULT_EARTH, EarthModel
from aerolink.link_budget import NTN_SENSITIVITY_DBM, TN_SENSITIVITY_DBM, RadioTerminal
from aerolink.los import UrbanEnvironment
from aerolink.propagation import PropagationParams
from aerolink.scenario import LinkKind, LinkSpec, SweepSpec, height_grid

REFERENCE_ENV = UrbanEnvironment(alpha=0.3, beta_per_km2=500.0, gamma_m=15.0)

TN_DEFAULTS = dict(
    node_height_m=25.0,
    carrier_frequency_GHz=3.6,
    rx_gain_dBi=8.0,
    sensitivity_dBm=TN_SENSITIVITY_DBM,
)
NTN_DEFAULTS = dict(
    node_height_m=300_000.0,
    carrier_frequency_GHz=2.0,
    rx_gain_dBi=38.0,
    sensitivity_dBm=NTN_SENSITIVITY_DBM,
)
COMMON_DEFAULTS = dict(
    sf_los_dB=4.0,
    sf_nlos_dB=6.0,
    cl_max_dB=34.3,
    tx_power_dBm=23.0,
    tx_gain_dBi=0.0,
    bandwidth_MHz=5.0,
    scs_kHz=15.0,
)
PATTERN_DEFAULTS = dict(etilt_deg=6.0, hpbw_deg=10.0, sla_v_dB=20.0)

TN_RANGES_KM = (0.5, 1.0, 2.0)
NTN_ELEVATIONS_DEG = (10.0, 30.0, 90.0)


def tn_link(
    ground_range_km: float,
    env: UrbanEnvironment = REFERENCE_ENV,
    label: str | None = None,
    **overrides,
) -> LinkSpec:
    """Terrestrial link with reference parameters, any of which can be overridden."""
    p = {**COMMON_DEFAULTS, **TN_DEFAULTS, **PATTERN_DEFAULTS, **overrides}
    return LinkSpec(
        kind=LinkKind.TN,
        label=label or f"TN {ground_range_km:g} km",
        node_height_m=p["node_height_m"],
        ground_range_km=ground_range_km,
        propagation=PropagationParams.for_environment(
            env, p["carrier_frequency_GHz"], p["sf_los_dB"], p["sf_nlos_dB"], p["cl_max_dB"]
        ),
        terminal=RadioTerminal(
            p["tx_power_dBm"], p["tx_gain_dBi"], p["rx_gain_dBi"], p["sensitivity_dBm"],
            p["bandwidth_MHz"], p["scs_kHz"],
        ),
        pattern=VerticalPattern(p["etilt_deg"], p["hpbw_deg"], p["sla_v_dB"]),
    )


def ntn_link(
    elevation_deg: float,
    env: UrbanEnvironment = REFERENCE_ENV,
    label: str | None = None,
    **overrides,
) -> LinkSpec:
    """Satellite link with reference parameters, any of which can be overridden."""
    p = {**COMMON_DEFAULTS, **NTN_DEFAULTS, **overrides}
    return LinkSpec(
        kind=LinkKind.NTN,
        label=label or f"NTN {elevation_deg:g} deg",
        node_height_m=p["node_height_m"],
        elevation_deg=elevation_deg,
        propagation=PropagationParams.for_environment(
            env, p["carrier_frequency_GHz"], p["sf_los_dB"], p["sf_nlos_dB"], p["cl_max_dB"]
        ),
        terminal=RadioTerminal(
            p["tx_power_dBm"], p["tx_gain_dBi"], p["rx_gain_dBi"], p["sensitivity_dBm"],
            p["bandwidth_MHz"], p["scs_kHz"],
        ),
    )


def reference_spec(step_m: float = 1.0, earth: EarthModel = DEFAULT_EARTH) -> SweepSpec:
    """Three TN ranges and three NTN elevations over a 1-300 m height grid."""
    links = [tn_link(r) for r in TN_RANGES_KM] + [ntn_link(e) for e in NTN_ELEVATIONS_DEG]
    return SweepSpec(
        environment=REFERENCE_ENV,
        links=tuple(links),
        heights_m=height_grid(1.0, 300.0, step_m),
        earth=earth,
    )
