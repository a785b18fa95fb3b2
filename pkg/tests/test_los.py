import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from aerolink.geometry import ground_range
from aerolink.los import (
    UrbanEnvironment,
    building_count,
    buildings_per_km,
    clearance_probability,
    los_probability,
    los_probability_prefix,
    ray_profile,
)
from aerolink.errors import ModelDomainError

CITY = UrbanEnvironment(0.3, 500.0, 15.0)


def naive_los(env, h_tx, h_rx, r_m):
    """Plain-loop product straight from the building construction."""
    b1 = math.sqrt(env.alpha * env.beta_per_km2)
    n = math.floor(r_m / 1000 * b1)
    p = 1.0
    for i in range(n):
        d = (i + 0.5) * r_m / n
        h = max(h_tx - d * (h_tx - h_rx) / r_m, 0.0)
        p *= 1 - math.exp(-h * h / (2 * env.gamma_m**2))
    return p


def test_buildings_per_km():
    assert buildings_per_km(CITY) == pytest.approx(12.2474, abs=1e-4)
    assert buildings_per_km(UrbanEnvironment(1.0, 1.0, 15)) == 1.0
    assert buildings_per_km(UrbanEnvironment(0.25, 4.0, 15)) == 1.0


@pytest.mark.parametrize("r_km, expected", [(1.0, 12), (0.5, 6), (0.01, 0)])
def test_building_count(r_km, expected):
    assert building_count(r_km, 12.2474) == expected


def test_ray_profile_example():
    prof = ray_profile(CITY, 10.0, 25.0, 1000.0)
    assert prof.building_count == 12
    assert prof.spacing_m == pytest.approx(83.33, abs=0.01)
    assert prof.building_distances_m[0] == pytest.approx(41.67, abs=0.01)
    assert prof.ray_heights_m[0] == pytest.approx(10.625, abs=1e-9)
    assert prof.spacing_m * prof.building_count == pytest.approx(1000.0)
    assert np.all(np.diff(prof.building_distances_m) > 0)
    assert 0 < prof.building_distances_m[0] and prof.building_distances_m[-1] < 1000.0


def test_level_ray_and_empty_profile():
    prof = ray_profile(CITY, 40.0, 40.0, 2000.0)
    assert np.all(prof.ray_heights_m == 40.0)
    empty = ray_profile(CITY, 5.0, 25.0, 10.0)
    assert empty.building_count == 0 and empty.ray_heights_m.size == 0


def test_clearance_probability():
    assert clearance_probability(0.0, 15.0) == 0.0
    assert clearance_probability(15.0, 15.0) == pytest.approx(1 - math.exp(-0.5), abs=1e-12)
    assert clearance_probability(15.0, 15.0) == pytest.approx(0.39347, abs=1e-5)
    assert clearance_probability(150.0, 15.0) == pytest.approx(1.0, abs=1e-12)
    assert clearance_probability(-3.0, 15.0) == 0.0
    with pytest.raises(ModelDomainError):
        clearance_probability(1.0, 0.0)


def test_los_spot_values():
    assert los_probability(CITY, 55.0, 300_000.0, 0.0) == 1.0
    assert los_probability(CITY, 40.0, 25.0, 500.0) == pytest.approx(0.5, abs=0.05)
    assert los_probability(CITY, 300.0, 25.0, 2000.0) == pytest.approx(0.85, abs=0.03)
    r10 = ground_range(10.0, 300_000.0, 10.0)
    assert los_probability(CITY, 10.0, 300_000.0, r10) == pytest.approx(0.58, abs=0.05)


def test_prefix_sequence_is_running_product():
    prefix = los_probability_prefix(CITY, 60.0, 25.0, 1000.0)
    assert prefix.size == 12
    assert np.all(np.diff(prefix) <= 0)
    assert prefix[-1] == pytest.approx(los_probability(CITY, 60.0, 25.0, 1000.0), rel=1e-12)


def test_environment_validation():
    for bad in [(0, 500, 15), (1.2, 500, 15), (0.3, 0, 15), (0.3, 500, 0)]:
        with pytest.raises(ModelDomainError):
            UrbanEnvironment(*bad)


def test_underflow_free_for_long_grazing_ray():
    # ~14 000 buildings at 1 m: the product is far below float64's range
    assert los_probability(CITY, 1.0, 1.0, 1.2e6) == 0.0


envs = st.builds(
    UrbanEnvironment,
    alpha=st.floats(0.01, 1.0),
    beta_per_km2=st.floats(1.0, 3000.0),
    gamma_m=st.floats(1.0, 60.0),
)
tn_like = st.tuples(st.floats(0, 400), st.floats(0, 100), st.floats(0, 5000))
ntn_like = st.tuples(st.floats(0, 400), st.just(300_000.0), st.floats(0, 1.5e6))


@settings(max_examples=1000, deadline=None)
@given(env=envs, geom=st.one_of(tn_like, ntn_like))
def test_early_exit_matches_naive_product(env, geom):
    h_tx, h_rx, r = geom
    fast = los_probability(env, h_tx, h_rx, r)
    assert 0.0 <= fast <= 1.0
    assert fast == pytest.approx(los_probability(env, h_tx, h_rx, r, exact=True), abs=1e-9)
    assert fast == pytest.approx(naive_los(env, h_tx, h_rx, r), abs=1e-9)


@settings(max_examples=1000, deadline=None)
@given(env=envs, h_tx=st.floats(0, 400), dh=st.floats(0, 100), h_rx=st.floats(0, 100), r=st.floats(0, 5000))
def test_los_monotone_in_aircraft_height(env, h_tx, dh, h_rx, r):
    lo = los_probability(env, h_tx, h_rx, r)
    hi = los_probability(env, h_tx + dh, h_rx, r)
    assert 0.0 <= lo <= hi <= 1.0


@settings(max_examples=200)
@given(env=envs, h_tx=st.floats(0, 400), h_rx=st.floats(0, 100))
def test_short_range_is_clear(env, h_tx, h_rx):
    r_m = 0.999 * 1000.0 / buildings_per_km(env)
    assert los_probability(env, h_tx, h_rx, r_m) == 1.0
