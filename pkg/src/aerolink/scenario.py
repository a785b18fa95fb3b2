"""Height sweeps over terrestrial and satellite links.

A :class:`SweepSpec` names a city, an Earth model, a set of links and a grid of
aircraft heights. :func:`run_sweep` evaluates every (link, height) pair and
returns a :class:`SweepSeries` in canonical order: links as given, heights
ascending. Helper functions pull coverage intervals, feasibility thresholds
and combined TN+NTN availability out of a series.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from aerolink.antenna import VerticalPattern, pattern_angle_for_aircraft, vertical_attenuation
from aerolink.errors import ConfigError, ModelDomainError
from aerolink.geometry import DEFAULT_EARTH, EarthModel, satellite_geometry, terrestrial_geometry
from aerolink.link_budget import RadioTerminal, evaluate_link_budget
from aerolink.los import UrbanEnvironment
from aerolink.propagation import PropagationParams, evaluate_path_loss


class LinkKind(str, enum.Enum):
    TN = "tn"
    NTN = "ntn"


@dataclass(frozen=True)
class LinkSpec:
    """One aircraft-to-node link.

    Terrestrial links set ``ground_range_km`` and ``pattern``; satellite links
    set ``elevation_deg`` and leave ``pattern`` empty (no vertical pattern).
    """

    kind: LinkKind
    label: str
    node_height_m: float
    propagation: PropagationParams
    terminal: RadioTerminal
    ground_range_km: float | None = None
    elevation_deg: float | None = None
    pattern: VerticalPattern | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", LinkKind(self.kind))
        problems = self.problems()
        if problems:
            raise ConfigError(problems)

    def problems(self) -> list[str]:
        tag = f"link {self.label!r}"
        out = []
        if not self.label:
            out.append("link label must be non-empty")
        if not self.node_height_m >= 0:
            out.append(f"{tag}: node_height_m must be >= 0, got {self.node_height_m}")
        if self.kind is LinkKind.TN:
            if self.ground_range_km is None or not self.ground_range_km > 0:
                out.append(f"{tag}: ground_range_km must be set and > 0 for a tn link")
            if self.elevation_deg is not None:
                out.append(f"{tag}: elevation_deg is not allowed on a tn link")
            if self.pattern is None:
                out.append(f"{tag}: a tn link needs a vertical pattern")
        else:
            if self.elevation_deg is None or not 0 < self.elevation_deg <= 90:
                out.append(f"{tag}: elevation_deg must be set and in (0, 90] for an ntn link")
            if self.ground_range_km is not None:
                out.append(f"{tag}: ground_range_km is not allowed on an ntn link")
            if self.pattern is not None:
                out.append(f"{tag}: an ntn link takes no vertical pattern")
        return out


def height_grid(start_m: float = 1.0, stop_m: float = 300.0, step_m: float = 1.0) -> tuple[float, ...]:
    """Inclusive evenly spaced grid; ``stop_m`` is kept only if it lands on the grid."""
    if not step_m > 0:
        raise ConfigError(f"step_m must be > 0, got {step_m}")
    if stop_m < start_m:
        raise ConfigError(f"stop_m ({stop_m}) must be >= start_m ({start_m})")
    n = int(math.floor((stop_m - start_m) / step_m + 1e-9)) + 1
    return tuple(round(start_m + i * step_m, 9) for i in range(n))


@dataclass(frozen=True)
class SweepSpec:
    environment: UrbanEnvironment
    links: tuple[LinkSpec, ...]
    heights_m: tuple[float, ...] = field(default_factory=height_grid)
    earth: EarthModel = DEFAULT_EARTH

    def __post_init__(self):
        object.__setattr__(self, "links", tuple(self.links))
        object.__setattr__(self, "heights_m", tuple(float(h) for h in self.heights_m))
        problems = self.problems()
        if problems:
            raise ConfigError(problems)

    def problems(self) -> list[str]:
        out = []
        if not self.links:
            out.append("links: at least one link is required")
        labels = [link.label for link in self.links]
        dupes = sorted({x for x in labels if labels.count(x) > 1})
        if dupes:
            out.append(f"links: duplicate labels {dupes}")
        h = np.asarray(self.heights_m)
        if h.size == 0:
            out.append("heights_m: at least one height is required")
        elif np.any(h <= 0) or np.any(np.diff(h) <= 0):
            out.append("heights_m: heights must be > 0 and strictly increasing")
        elif any(
            link.kind is LinkKind.NTN and link.node_height_m <= h[-1] for link in self.links
        ):
            out.append("links: ntn node_height_m must exceed every sweep height")
        return out

    def link(self, label: str) -> LinkSpec:
        for link in self.links:
            if link.label == label:
                return link
        raise KeyError(f"unknown link label {label!r}")


@dataclass(frozen=True)
class SweepRecord:
    link_label: str
    height_m: float
    p_los: float
    pl_los_dB: float
    pl_nlos_dB: float
    clutter_dB: float
    pl_combined_dB: float
    antenna_gain_dB: float
    rssi_dBm: float
    margin_dB: float
    covered: bool
    pattern_angle_deg: float | None = None


@dataclass(frozen=True)
class SweepSeries:
    spec: SweepSpec
    records: tuple[SweepRecord, ...]

    @property
    def labels(self) -> list[str]:
        return [link.label for link in self.spec.links]

    @property
    def heights_m(self) -> np.ndarray:
        return np.asarray(self.spec.heights_m)

    def records_for(self, label: str) -> tuple[SweepRecord, ...]:
        if label not in self.labels:
            raise KeyError(f"unknown link label {label!r}")
        n = len(self.spec.heights_m)
        i = self.labels.index(label)
        return self.records[i * n : (i + 1) * n]

    def column(self, label: str, name: str) -> np.ndarray:
        return np.array([getattr(r, name) for r in self.records_for(label)])

    @property
    def covered_any(self) -> np.ndarray:
        return np.logical_or.reduce([self.column(lab, "covered") for lab in self.labels])


def evaluate_point(
    env: UrbanEnvironment, link: LinkSpec, height_m: float, earth: EarthModel = DEFAULT_EARTH
) -> SweepRecord:
    """Evaluate one link with the aircraft at ``height_m``."""
    try:
        if link.kind is LinkKind.TN:
            geom = terrestrial_geometry(height_m, link.node_height_m, link.ground_range_km)
            theta = pattern_angle_for_aircraft(
                height_m, link.node_height_m, geom.ground_range_m, earth
            )
            gain = vertical_attenuation(theta, link.pattern)
        else:
            geom = satellite_geometry(height_m, link.node_height_m, link.elevation_deg, earth)
            theta, gain = None, 0.0
        loss = evaluate_path_loss(env, link.propagation, geom)
    except ModelDomainError as exc:
        raise ModelDomainError(f"link {link.label!r} at height {height_m} m: {exc}") from exc
    budget = evaluate_link_budget(link.terminal, gain, loss.pl_combined_dB)
    return SweepRecord(
        link_label=link.label,
        height_m=height_m,
        p_los=loss.p_los,
        pl_los_dB=loss.pl_los_dB,
        pl_nlos_dB=loss.pl_nlos_dB,
        clutter_dB=loss.clutter_dB,
        pl_combined_dB=loss.pl_combined_dB,
        antenna_gain_dB=gain,
        rssi_dBm=budget.rssi_dBm,
        margin_dB=budget.margin_dB,
        covered=budget.covered,
        pattern_angle_deg=theta,
    )


def run_sweep(spec: SweepSpec, workers: int = 1) -> SweepSeries:
    """Evaluate every link at every height.

    ``workers > 1`` spreads links over a thread pool; the output order and
    values do not depend on it.
    """

    def one_link(link: LinkSpec) -> list[SweepRecord]:
        return [evaluate_point(spec.environment, link, h, spec.earth) for h in spec.heights_m]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_link = list(pool.map(one_link, spec.links))
    else:
        per_link = [one_link(link) for link in spec.links]
    return SweepSeries(spec=spec, records=tuple(r for recs in per_link for r in recs))


def coverage_intervals(
    series: SweepSeries, link_label: str, refine: bool = False
) -> list[tuple[float, float]]:
    """Maximal runs of covered grid heights as ``(low, high)`` pairs.

    With ``refine=True`` each interior endpoint is moved to the linear
    zero crossing of the margin between the bracketing grid points.
    """
    recs = series.records_for(link_label)
    heights = [r.height_m for r in recs]
    margins = [r.margin_dB for r in recs]
    covered = [r.covered for r in recs]
    out = []
    i = 0
    while i < len(recs):
        if not covered[i]:
            i += 1
            continue
        j = i
        while j + 1 < len(recs) and covered[j + 1]:
            j += 1
        low, high = heights[i], heights[j]
        if refine:
            if i > 0:
                low = _zero_crossing(heights[i - 1], margins[i - 1], heights[i], margins[i])
            if j + 1 < len(recs):
                high = _zero_crossing(heights[j], margins[j], heights[j + 1], margins[j + 1])
        out.append((low, high))
        i = j + 1
    return out


def _zero_crossing(h0: float, m0: float, h1: float, m1: float) -> float:
    if m1 == m0:
        return h0
    return h0 + (h1 - h0) * (0.0 - m0) / (m1 - m0)


def min_feasible_height(series: SweepSeries, link_label: str) -> float | None:
    for r in series.records_for(link_label):
        if r.covered:
            return r.height_m
    return None


@dataclass(frozen=True)
class HybridAvailability:
    heights_m: np.ndarray
    covered_any: np.ndarray
    fraction: float


def hybrid_availability(series: SweepSeries) -> HybridAvailability:
    """Heights where at least one link closes, and the share of the grid they cover."""
    if not series.records:
        raise ValueError("series is empty")
    covered = series.covered_any
    return HybridAvailability(
        heights_m=series.heights_m,
        covered_any=covered,
        fraction=float(np.count_nonzero(covered)) / covered.size,
    )
