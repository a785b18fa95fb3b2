"""LoS/NLoS path loss with altitude-dependent clutter."""

from __future__ import annotations

import math
from dataclasses import dataclass

from aerolink.errors import ModelDomainError
from aerolink.geometry import LinkGeometry
from aerolink.los import UrbanEnvironment, los_probability

# Building-height scale used by the clutter decay, as a multiple of gamma.
CLUTTER_HEIGHT_PER_GAMMA = 1.25


@dataclass(frozen=True)
class PropagationParams:
    carrier_frequency_GHz: float
    sf_los_dB: float = 4.0
    sf_nlos_dB: float = 6.0
    cl_max_dB: float = 34.3
    h0_m: float = CLUTTER_HEIGHT_PER_GAMMA * 15.0

    def __post_init__(self):
        problems = self.problems()
        if problems:
            raise ModelDomainError("; ".join(problems))

    def problems(self) -> list[str]:
        out = []
        if not self.carrier_frequency_GHz > 0:
            out.append(f"carrier_frequency_GHz must be > 0, got {self.carrier_frequency_GHz}")
        if not self.sf_los_dB >= 0:
            out.append(f"sf_los_dB must be >= 0, got {self.sf_los_dB}")
        if not self.sf_nlos_dB >= 0:
            out.append(f"sf_nlos_dB must be >= 0, got {self.sf_nlos_dB}")
        if not self.cl_max_dB >= 0:
            out.append(f"cl_max_dB must be >= 0, got {self.cl_max_dB}")
        if not self.h0_m > 0:
            out.append(f"h0_m must be > 0, got {self.h0_m}")
        return out

    @classmethod
    def for_environment(
        cls,
        env: UrbanEnvironment,
        carrier_frequency_GHz: float,
        sf_los_dB: float = 4.0,
        sf_nlos_dB: float = 6.0,
        cl_max_dB: float = 34.3,
    ) -> "PropagationParams":
        """Build parameters with the clutter height tied to the city's gamma."""
        return cls(
            carrier_frequency_GHz=carrier_frequency_GHz,
            sf_los_dB=sf_los_dB,
            sf_nlos_dB=sf_nlos_dB,
            cl_max_dB=cl_max_dB,
            h0_m=CLUTTER_HEIGHT_PER_GAMMA * env.gamma_m,
        )


@dataclass(frozen=True)
class PathLossBreakdown:
    p_los: float
    pl_los_dB: float
    pl_nlos_dB: float
    clutter_dB: float
    pl_combined_dB: float


def _free_space_dB(f_c_GHz: float, slant_range_m: float) -> float:
    if not slant_range_m > 0:
        raise ModelDomainError(f"slant_range_m must be > 0, got {slant_range_m}")
    if not f_c_GHz > 0:
        raise ModelDomainError(f"carrier frequency must be > 0 GHz, got {f_c_GHz}")
    return 32.45 + 20.0 * math.log10(f_c_GHz) + 20.0 * math.log10(slant_range_m)


def path_loss_los(f_c_GHz: float, slant_range_m: float, sf_los_dB: float) -> float:
    return _free_space_dB(f_c_GHz, slant_range_m) + sf_los_dB


def path_loss_nlos(
    f_c_GHz: float, slant_range_m: float, sf_nlos_dB: float, clutter_dB: float
) -> float:
    return _free_space_dB(f_c_GHz, slant_range_m) + sf_nlos_dB + clutter_dB


def clutter_loss(h_tx_m: float, cl_max_dB: float, h0_m: float) -> float:
    """Clutter loss decaying exponentially with aircraft height."""
    if h_tx_m < 0:
        raise ModelDomainError(f"h_tx_m must be >= 0, got {h_tx_m}")
    return cl_max_dB * math.exp(-h_tx_m / h0_m)


def combined_path_loss(p_los: float, pl_los_dB: float, pl_nlos_dB: float) -> float:
    """LoS-probability-weighted mean of the two branch losses, taken in dB."""
    if not 0 <= p_los <= 1:
        raise ModelDomainError(f"p_los must lie in [0, 1], got {p_los}")
    return p_los * pl_los_dB + (1.0 - p_los) * pl_nlos_dB


def evaluate_path_loss(
    env: UrbanEnvironment, params: PropagationParams, geometry: LinkGeometry
) -> PathLossBreakdown:
    """Full path-loss breakdown for one aircraft position."""
    h_tx = geometry.aircraft_height_m
    p_los = los_probability(env, h_tx, geometry.node_height_m, geometry.ground_range_m)
    clutter = clutter_loss(h_tx, params.cl_max_dB, params.h0_m)
    f_c = params.carrier_frequency_GHz
    pl_los = path_loss_los(f_c, geometry.slant_range_m, params.sf_los_dB)
    pl_nlos = path_loss_nlos(f_c, geometry.slant_range_m, params.sf_nlos_dB, clutter)
    return PathLossBreakdown(
        p_los=p_los,
        pl_los_dB=pl_los,
        pl_nlos_dB=pl_nlos,
        clutter_dB=clutter,
        pl_combined_dB=combined_path_loss(p_los, pl_los, pl_nlos),
    )
