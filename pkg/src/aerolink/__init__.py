"""Link budget and coverage for low-altitude aircraft over terrestrial and LEO links."""

from aerolink.antenna import VerticalPattern, pattern_angle_for_aircraft, vertical_attenuation
from aerolink.errors import ConfigError, ModelDomainError
from aerolink.geometry import (
    EarthModel,
    LinkGeometry,
    elevation_from_slant_range,
    elevation_seen_from_node,
    ground_range,
    satellite_geometry,
    slant_range,
    terrestrial_geometry,
    tn_slant_range,
)
from aerolink.link_budget import (
    LinkBudgetResult,
    RadioTerminal,
    coverage_verdict,
    evaluate_link_budget,
    received_power,
)
from aerolink.los import (
    RayProfile,
    UrbanEnvironment,
    building_count,
    buildings_per_km,
    clearance_probability,
    los_probability,
    ray_profile,
)
from aerolink.propagation import (
    PathLossBreakdown,
    PropagationParams,
    clutter_loss,
    combined_path_loss,
    evaluate_path_loss,
    path_loss_los,
    path_loss_nlos,
)
from aerolink.scenario import (
    LinkKind,
    LinkSpec,
    SweepSeries,
    SweepSpec,
    coverage_intervals,
    hybrid_availability,
    min_feasible_height,
    run_sweep,
)

__version__ = "0.1.0"
