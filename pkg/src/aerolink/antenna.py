"""Vertical radiation pattern of a down-tilted base-station antenna.

Angles follow a depression-positive convention: ``theta`` is how far below the
node's horizontal the aircraft sits, and ``etilt_deg`` is the electrical
downtilt. An aircraft flying above the mast therefore has a negative ``theta``
and falls far outside a down-tilted main lobe. The horizontal pattern is
omnidirectional and not modelled.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from aerolink.errors import ModelDomainError
from aerolink.geometry import DEFAULT_EARTH, EarthModel, elevation_seen_from_node


@dataclass(frozen=True)
class VerticalPattern:
    etilt_deg: float = 6.0
    hpbw_deg: float = 10.0
    sla_v_dB: float = 20.0

    def __post_init__(self):
        problems = self.problems()
        if problems:
            raise ModelDomainError("; ".join(problems))

    def problems(self) -> list[str]:
        out = []
        if not self.hpbw_deg > 0:
            out.append(f"hpbw_deg must be > 0, got {self.hpbw_deg}")
        if not self.sla_v_dB >= 0:
            out.append(f"sla_v_dB must be >= 0, got {self.sla_v_dB}")
        return out


def vertical_attenuation(theta_deg, pattern: VerticalPattern):
    """Pattern gain in dB (0 at boresight, floored at ``-sla_v_dB``).

    Vectorised over ``theta_deg``; scalars in, float out.
    """
    theta = np.asarray(theta_deg, dtype=float)
    if np.any(np.abs(theta) > 90) or np.any(np.isnan(theta)):
        raise ModelDomainError("theta_deg must lie in [-90, 90]")
    offset = (theta - pattern.etilt_deg) / pattern.hpbw_deg
    gain = -np.minimum(12.0 * offset * offset, pattern.sla_v_dB)
    return float(gain) if gain.ndim == 0 else gain


def pattern_angle_for_aircraft(
    h_tx_m: float,
    h_rx_m: float,
    ground_range_m: float,
    earth: EarthModel = DEFAULT_EARTH,
) -> float:
    """Depression angle of the aircraft as seen from the mast top."""
    return -elevation_seen_from_node(h_tx_m, h_rx_m, ground_range_m, earth)
