"""Statistical line-of-sight probability over a synthetic city.

The city is described by three numbers: the built-up area fraction, the
building density and the Rayleigh scale of building heights. A ray from the
aircraft to the node crosses evenly spaced buildings; the LoS probability is
the chance that every one of them is lower than the ray where it passes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from aerolink.errors import ModelDomainError

# Rising rays above this many height scales clear a building with probability
# 1 - exp(-50) (about 1 - 2e-22), which rounds to exactly 1.0 in float64.
EARLY_EXIT_SCALES = 10.0


@dataclass(frozen=True)
class UrbanEnvironment:
    """Statistical city parameters.

    alpha : built-up area over total area, in (0, 1]
    beta_per_km2 : mean number of buildings per square kilometre
    gamma_m : Rayleigh scale of the building-height distribution
    """

    alpha: float = 0.3
    beta_per_km2: float = 500.0
    gamma_m: float = 15.0

    def __post_init__(self):
        problems = self.problems()
        if problems:
            raise ModelDomainError("; ".join(problems))

    def problems(self) -> list[str]:
        out = []
        if not 0 < self.alpha <= 1:
            out.append(f"alpha must lie in (0, 1], got {self.alpha}")
        if not self.beta_per_km2 > 0:
            out.append(f"beta_per_km2 must be > 0, got {self.beta_per_km2}")
        if not self.gamma_m > 0:
            out.append(f"gamma_m must be > 0, got {self.gamma_m}")
        return out


@dataclass(frozen=True)
class RayProfile:
    """Building positions along one ray and the ray height above each.

    For an empty profile ``spacing_m`` is NaN since no spacing is defined.
    """

    building_count: int
    spacing_m: float
    building_distances_m: np.ndarray
    ray_heights_m: np.ndarray


def buildings_per_km(env: UrbanEnvironment) -> float:
    return math.sqrt(env.alpha * env.beta_per_km2)


def building_count(ground_range_km: float, b1: float) -> int:
    if ground_range_km < 0:
        raise ModelDomainError(f"ground_range_km must be >= 0, got {ground_range_km}")
    return int(math.floor(ground_range_km * b1))


def ray_profile(
    env: UrbanEnvironment, h_tx_m: float, h_rx_m: float, ground_range_m: float
) -> RayProfile:
    """Place buildings at the midpoints of equal cells and sample the ray there."""
    if ground_range_m < 0:
        raise ModelDomainError(f"ground_range_m must be >= 0, got {ground_range_m}")
    if h_tx_m < 0 or h_rx_m < 0:
        raise ModelDomainError("heights must be >= 0")
    count = building_count(ground_range_m / 1000.0, buildings_per_km(env))
    if count == 0:
        empty = np.empty(0)
        return RayProfile(0, math.nan, empty, empty)
    spacing = ground_range_m / count
    distances = (np.arange(count) + 0.5) * spacing
    heights = h_tx_m - distances * (h_tx_m - h_rx_m) / ground_range_m
    return RayProfile(count, spacing, distances, heights)


def clearance_probability(h_i_m, gamma_m: float):
    """Probability that a Rayleigh-distributed building is lower than the ray.

    Accepts scalars or arrays. Heights at or below ground give 0.
    """
    if not gamma_m > 0:
        raise ModelDomainError(f"gamma_m must be > 0, got {gamma_m}")
    h = np.maximum(np.asarray(h_i_m, dtype=float), 0.0)
    p = np.clip(-np.expm1(-(h * h) / (2.0 * gamma_m**2)), 0.0, 1.0)
    return float(p) if p.ndim == 0 else p


def _log_clearance(heights: np.ndarray, gamma_m: float) -> np.ndarray:
    h = np.maximum(heights, 0.0)
    with np.errstate(divide="ignore"):
        return np.log(-np.expm1(-(h * h) / (2.0 * gamma_m**2)))


def _significant_prefix(profile: RayProfile, h_tx_m: float, h_rx_m: float, gamma_m: float) -> int:
    # Only a rising ray can be cut short: once above the threshold it stays above.
    heights = profile.ray_heights_m
    if h_rx_m <= h_tx_m or heights.size == 0:
        return heights.size
    above = np.flatnonzero(heights > EARLY_EXIT_SCALES * gamma_m)
    return int(above[0]) if above.size else heights.size


def los_probability(
    env: UrbanEnvironment,
    h_tx_m: float,
    h_rx_m: float,
    ground_range_m: float,
    exact: bool = False,
) -> float:
    """Probability that the ray clears every building along the ground range.

    The product is accumulated as a sum of logs. With ``exact=False`` the
    tail of a rising ray that is already far above the rooftops is skipped;
    those factors are 1.0 in float64 anyway.
    """
    profile = ray_profile(env, h_tx_m, h_rx_m, ground_range_m)
    if profile.building_count == 0:
        return 1.0
    heights = profile.ray_heights_m
    if not exact:
        heights = heights[: _significant_prefix(profile, h_tx_m, h_rx_m, env.gamma_m)]
    return float(np.exp(np.sum(_log_clearance(heights, env.gamma_m))))


def los_probability_prefix(
    env: UrbanEnvironment, h_tx_m: float, h_rx_m: float, ground_range_m: float
) -> np.ndarray:
    """Running product of clearance probabilities, one entry per building.

    The last entry matches :func:`los_probability` up to rounding. Diagnostic only.
    """
    profile = ray_profile(env, h_tx_m, h_rx_m, ground_range_m)
    return np.exp(np.cumsum(_log_clearance(profile.ray_heights_m, env.gamma_m)))
