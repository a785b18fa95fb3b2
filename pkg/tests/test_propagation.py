import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from aerolink.errors import ModelDomainError
from aerolink.geometry import satellite_geometry, terrestrial_geometry
from aerolink.los import UrbanEnvironment
from aerolink.propagation import (
    PropagationParams,
    clutter_loss,
    combined_path_loss,
    evaluate_path_loss,
    path_loss_los,
    path_loss_nlos,
)

CITY = UrbanEnvironment(0.3, 500.0, 15.0)
TN = PropagationParams.for_environment(CITY, 3.6)
NTN = PropagationParams.for_environment(CITY, 2.0)


def test_h0_follows_gamma():
    assert TN.h0_m == 18.75
    assert PropagationParams.for_environment(UrbanEnvironment(0.3, 500, 20), 2.0).h0_m == 25.0


def test_path_loss_los():
    assert path_loss_los(2.0, 300_000.0, 4.0) == pytest.approx(152.01, abs=0.05)
    assert path_loss_los(1.0, 1.0, 0.0) == pytest.approx(32.45, abs=1e-12)
    assert path_loss_los(3.6, 500.62, 4.0) == pytest.approx(101.57, abs=0.05)
    for bad in [(2.0, 0.0, 4.0), (0.0, 10.0, 4.0), (2.0, -1.0, 0.0)]:
        with pytest.raises(ModelDomainError):
            path_loss_los(*bad)


def test_clutter_loss():
    assert clutter_loss(0.0, 34.3, 18.75) == 34.3
    assert clutter_loss(18.75, 34.3, 18.75) == pytest.approx(34.3 / math.e, abs=1e-12)
    assert clutter_loss(18.75, 34.3, 18.75) == pytest.approx(12.618, abs=0.01)
    assert clutter_loss(8 * 18.75, 34.3, 18.75) < 0.012
    assert clutter_loss(9 * 18.75, 34.3, 18.75) < 0.01
    with pytest.raises(ModelDomainError):
        clutter_loss(-1.0, 34.3, 18.75)


def test_path_loss_nlos():
    cl1 = clutter_loss(1.0, 34.3, 18.75)
    assert cl1 == pytest.approx(32.52, abs=0.01)
    assert path_loss_nlos(3.6, 500.62, 6.0, cl1) == pytest.approx(136.1, abs=0.2)
    assert path_loss_nlos(2.7, 1234.0, 4.0, 0.0) == path_loss_los(2.7, 1234.0, 4.0)
    cl10 = clutter_loss(10.0, 34.3, 18.75)
    assert cl10 == pytest.approx(20.12, abs=0.01)
    assert path_loss_nlos(2.0, 1_238_500.0, 6.0, cl10) == pytest.approx(186.45, abs=0.2)


def test_combined_path_loss():
    assert combined_path_loss(1.0, 152.0, 999.0) == 152.0
    assert combined_path_loss(0.0, 100.0, 140.0) == 140.0
    assert combined_path_loss(0.58, 164.33, 186.45) == pytest.approx(173.6, abs=0.3)
    with pytest.raises(ModelDomainError):
        combined_path_loss(1.2, 100, 120)


def test_evaluate_path_loss_spots():
    tn = evaluate_path_loss(CITY, TN, terrestrial_geometry(50.0, 25.0, 0.5))
    assert tn.pl_combined_dB == pytest.approx(103, abs=1.5)
    ntn30 = evaluate_path_loss(CITY, NTN, satellite_geometry(10.0, 300_000.0, 30.0))
    assert ntn30.pl_combined_dB == pytest.approx(158, abs=1.5)
    for h in (30.0, 100.0, 300.0):
        ntn10 = evaluate_path_loss(CITY, NTN, satellite_geometry(h, 300_000.0, 10.0))
        assert ntn10.pl_combined_dB == pytest.approx(164, abs=1.5)


@settings(max_examples=300, deadline=None)
@given(h=st.floats(0, 300), r_km=st.floats(0.05, 3.0))
def test_breakdown_identities(h, r_km):
    b = evaluate_path_loss(CITY, TN, terrestrial_geometry(h, 25.0, r_km))
    assert b.pl_nlos_dB == pytest.approx(b.pl_los_dB - TN.sf_los_dB + TN.sf_nlos_dB + b.clutter_dB, abs=1e-9)
    lo, hi = sorted((b.pl_los_dB, b.pl_nlos_dB))
    assert lo - 1e-9 <= b.pl_combined_dB <= hi + 1e-9


@settings(max_examples=1000)
@given(p=st.floats(0, 1), a=st.floats(20, 250), b=st.floats(20, 250))
def test_combination_is_convex(p, a, b):
    c = combined_path_loss(p, a, b)
    assert min(a, b) - 1e-9 <= c <= max(a, b) + 1e-9


@given(p=st.floats(0, 1), dp=st.floats(0, 1), a=st.floats(20, 200), extra=st.floats(0, 80))
def test_combination_non_increasing_in_p_los(p, dp, a, extra):
    q = min(p + dp, 1.0)
    assert combined_path_loss(q, a, a + extra) <= combined_path_loss(p, a, a + extra) + 1e-9


@given(f=st.floats(0.1, 60), r=st.floats(1, 2e6), sf=st.floats(0, 10), cl=st.floats(0, 40))
def test_decade_in_frequency_adds_20_dB(f, r, sf, cl):
    assert path_loss_los(10 * f, r, sf) - path_loss_los(f, r, sf) == pytest.approx(20.0, abs=1e-9)
    assert path_loss_nlos(10 * f, r, sf, cl) - path_loss_nlos(f, r, sf, cl) == pytest.approx(20.0, abs=1e-9)


def _tn_sweep(r_km, heights):
    return [evaluate_path_loss(CITY, TN, terrestrial_geometry(h, 25.0, r_km)) for h in heights]


@pytest.mark.parametrize("r_km", [0.5, 1.0, 2.0])
def test_tn_nlos_excess_non_increasing_with_height(r_km):
    # clutter decays and P_LoS grows, so the loss above the LoS branch only falls
    rows = _tn_sweep(r_km, np.arange(1.0, 301.0))
    excess = [b.pl_combined_dB - b.pl_los_dB for b in rows]
    assert np.all(np.diff(excess) <= 1e-9)


@pytest.mark.parametrize("r_km, top_m", [(0.5, 119.0), (1.0, 204.0), (2.0, 300.0)])
def test_tn_path_loss_non_increasing_until_los_saturates(r_km, top_m):
    pl = [b.pl_combined_dB for b in _tn_sweep(r_km, np.arange(1.0, top_m + 1))]
    assert np.all(np.diff(pl) <= 1e-9)


def test_tn_path_loss_rises_again_once_slant_range_dominates():
    # above saturation the longer slant range wins: 0.5 km climbs ~0.8 dB by 300 m
    rows = _tn_sweep(0.5, [119.0, 300.0])
    assert 0.5 < rows[1].pl_combined_dB - rows[0].pl_combined_dB < 1.0


def test_params_validation():
    with pytest.raises(ModelDomainError):
        PropagationParams(carrier_frequency_GHz=0)
    with pytest.raises(ModelDomainError):
        PropagationParams(carrier_frequency_GHz=2, cl_max_dB=-1)
    with pytest.raises(ModelDomainError):
        PropagationParams(carrier_frequency_GHz=2, h0_m=0)
