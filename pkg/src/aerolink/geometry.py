"""Effective-Earth link geometry.

Straight rays over a sphere of radius ``true_radius_m * k_factor``. The
satellite functions follow the usual radar conventions: the elevation angle is
measured at the lower endpoint (the aircraft), the slant range is the length of
the straight ray, and the ground range is the arc length between the two
nadir points on the effective-Earth surface.

Terrestrial links use the flat formula in :func:`tn_slant_range`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from aerolink.errors import ModelDomainError

EARTH_RADIUS_M = 6_371_000.0
DEFAULT_K_FACTOR = 4.0 / 3.0


@dataclass(frozen=True)
class EarthModel:
    true_radius_m: float = EARTH_RADIUS_M
    k_factor: float = DEFAULT_K_FACTOR

    def __post_init__(self):
        if not self.true_radius_m > 0:
            raise ModelDomainError(f"true_radius_m must be > 0, got {self.true_radius_m}")
        if not (self.k_factor >= 1 and math.isfinite(self.k_factor)):
            raise ModelDomainError(f"k_factor must be finite and >= 1, got {self.k_factor}")

    @property
    def effective_radius_m(self) -> float:
        return self.true_radius_m * self.k_factor


DEFAULT_EARTH = EarthModel()


@dataclass(frozen=True)
class LinkGeometry:
    """Endpoint heights and distances for one aircraft-to-node link.

    ``elevation_deg`` is the satellite elevation seen from the aircraft and is
    ``None`` for terrestrial links.
    """

    aircraft_height_m: float
    node_height_m: float
    slant_range_m: float
    ground_range_m: float
    elevation_deg: float | None = None


def _check_satellite_args(aircraft_height_m: float, node_height_m: float, elevation_deg: float):
    if not 0 < elevation_deg <= 90:
        raise ModelDomainError(f"elevation_deg must lie in (0, 90], got {elevation_deg}")
    if not 0 <= aircraft_height_m < node_height_m:
        raise ModelDomainError(
            "heights must satisfy 0 <= aircraft_height_m < node_height_m, "
            f"got {aircraft_height_m} and {node_height_m}"
        )


def slant_range(
    aircraft_height_m: float,
    node_height_m: float,
    elevation_deg: float,
    earth: EarthModel = DEFAULT_EARTH,
) -> float:
    """Length of the straight ray from the aircraft to a higher node.

    Solves ``d**2 + 2*d*(R+h_a)*sin(el) - ((R+h_n)**2 - (R+h_a)**2) = 0`` for
    its positive root, written in the cancellation-free form.
    """
    _check_satellite_args(aircraft_height_m, node_height_m, elevation_deg)
    height_gap = node_height_m - aircraft_height_m
    if elevation_deg == 90:
        return height_gap
    r_eff = earth.effective_radius_m
    a = r_eff + aircraft_height_m
    a_sin = a * math.sin(math.radians(elevation_deg))
    # (R+h_n)^2 - (R+h_a)^2 without subtracting two ~1e13 numbers
    radial = height_gap * (2.0 * r_eff + aircraft_height_m + node_height_m)
    # rounding can land a few ulps under the vertical distance near zenith
    return max(radial / (a_sin + math.sqrt(a_sin * a_sin + radial)), height_gap)


def central_angle_rad(
    aircraft_height_m: float,
    node_height_m: float,
    elevation_deg: float,
    earth: EarthModel = DEFAULT_EARTH,
) -> float:
    """Earth-centre angle between the aircraft and the node."""
    if elevation_deg == 90:
        _check_satellite_args(aircraft_height_m, node_height_m, elevation_deg)
        return 0.0
    d = slant_range(aircraft_height_m, node_height_m, elevation_deg, earth)
    el = math.radians(elevation_deg)
    a = earth.effective_radius_m + aircraft_height_m
    return math.atan2(d * math.cos(el), a + d * math.sin(el))


def ground_range(
    aircraft_height_m: float,
    node_height_m: float,
    elevation_deg: float,
    earth: EarthModel = DEFAULT_EARTH,
) -> float:
    """Arc length on the effective-Earth surface between the two nadir points."""
    return earth.effective_radius_m * central_angle_rad(
        aircraft_height_m, node_height_m, elevation_deg, earth
    )


def elevation_from_slant_range(
    aircraft_height_m: float,
    node_height_m: float,
    slant_range_m: float,
    earth: EarthModel = DEFAULT_EARTH,
) -> float:
    """Inverse of :func:`slant_range`: elevation (deg) seen from the aircraft.

    Works in the aircraft's local frame: the node sits at horizontal offset
    ``x`` and vertical offset ``y`` with ``x**2 + y**2 = d**2``. Both
    ``d - y`` and ``d + y`` are formed as products so the angle stays accurate
    close to zenith.
    """
    if not 0 <= aircraft_height_m < node_height_m:
        raise ModelDomainError(
            "heights must satisfy 0 <= aircraft_height_m < node_height_m, "
            f"got {aircraft_height_m} and {node_height_m}"
        )
    height_gap = node_height_m - aircraft_height_m
    d = slant_range_m
    if not d >= height_gap:
        raise ModelDomainError(
            f"slant_range_m {d} is shorter than the height difference {height_gap}"
        )
    r_eff = earth.effective_radius_m
    a = r_eff + aircraft_height_m
    b = r_eff + node_height_m
    d_minus_y = (d - height_gap) * (d + a + b) / (2.0 * a)
    d_plus_y = (height_gap + d) * (a + b - d) / (2.0 * a)
    if d_plus_y <= 0:
        raise ModelDomainError(f"slant_range_m {d} is beyond the geometric horizon")
    x = math.sqrt(max(d_minus_y, 0.0) * d_plus_y)
    y = d - d_minus_y
    return math.degrees(math.atan2(y, x))


def tn_slant_range(aircraft_height_m: float, node_height_m: float, ground_range_km: float) -> float:
    """Flat-Earth distance to a terrestrial base station, in metres."""
    if ground_range_km < 0:
        raise ModelDomainError(f"ground_range_km must be >= 0, got {ground_range_km}")
    if aircraft_height_m < 0 or node_height_m < 0:
        raise ModelDomainError("heights must be >= 0")
    return math.hypot(ground_range_km * 1000.0, abs(aircraft_height_m - node_height_m))


def elevation_seen_from_node(
    aircraft_height_m: float,
    node_height_m: float,
    ground_range_m: float,
    earth: EarthModel = DEFAULT_EARTH,
) -> float:
    """Signed angle of the aircraft above (+) or below (-) the node's horizontal.

    Curved-Earth version; within a few kilometres it agrees with
    ``atan((h_tx - h_rx) / ground_range_m)`` to a few thousandths of a degree.
    """
    if not ground_range_m > 0:
        raise ModelDomainError(f"ground_range_m must be > 0, got {ground_range_m}")
    r_eff = earth.effective_radius_m
    phi = ground_range_m / r_eff
    a = r_eff + aircraft_height_m
    # a*cos(phi) - (R + h_n), expanded to keep the height difference exact
    dy = (aircraft_height_m - node_height_m) - 2.0 * a * math.sin(phi / 2.0) ** 2
    dx = a * math.sin(phi)
    return math.degrees(math.atan2(dy, dx))


def satellite_geometry(
    aircraft_height_m: float,
    node_height_m: float,
    elevation_deg: float,
    earth: EarthModel = DEFAULT_EARTH,
) -> LinkGeometry:
    return LinkGeometry(
        aircraft_height_m=aircraft_height_m,
        node_height_m=node_height_m,
        slant_range_m=slant_range(aircraft_height_m, node_height_m, elevation_deg, earth),
        ground_range_m=ground_range(aircraft_height_m, node_height_m, elevation_deg, earth),
        elevation_deg=elevation_deg,
    )


def terrestrial_geometry(
    aircraft_height_m: float, node_height_m: float, ground_range_km: float
) -> LinkGeometry:
    return LinkGeometry(
        aircraft_height_m=aircraft_height_m,
        node_height_m=node_height_m,
        slant_range_m=tn_slant_range(aircraft_height_m, node_height_m, ground_range_km),
        ground_range_m=ground_range_km * 1000.0,
    )
