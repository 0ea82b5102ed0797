import pytest
from numpy.testing import assert_allclose

from rfvlc.errors import ParameterError
from rfvlc.rf_channel import (
    RfParams,
    dbm_to_watts,
    rf_channel_gain,
    rf_noise_power_w,
    rf_pathloss_db,
    watts_to_dbm,
)

PARAMS = RfParams()


def test_pathloss_values():
    assert rf_pathloss_db(1.0, PARAMS) == 89.5
    assert_allclose(rf_pathloss_db(10.0, PARAMS), 106.4, rtol=1e-12)


def test_gain_frozen_values():
    assert_allclose(rf_channel_gain(1.0, PARAMS), 1.1220184543019653e-09, rtol=1e-12)
    assert_allclose(rf_channel_gain(10.0, PARAMS), 2.29086765276777e-11, rtol=1e-12)
    assert_allclose(rf_channel_gain(25.0, PARAMS), 4.869466532944616e-12, rtol=1e-12)


def test_gain_monotone_in_distance():
    gains = [rf_channel_gain(d, PARAMS) for d in (0.5, 1.0, 2.0, 5.0, 17.0, 30.0)]
    assert all(a > b for a, b in zip(gains, gains[1:]))


def test_shadowing_shifts_gain_in_db():
    base = rf_channel_gain(4.0, PARAMS)
    assert_allclose(rf_channel_gain(4.0, PARAMS, shadowing_db=10.0), base / 10.0, rtol=1e-12)
    assert_allclose(rf_channel_gain(4.0, PARAMS, shadowing_db=-3.0), base * 10 ** 0.3, rtol=1e-12)


def test_noise_floor_frozen():
    assert_allclose(rf_noise_power_w(PARAMS), 7.962143411069971e-14, rtol=1e-12)
    assert_allclose(watts_to_dbm(rf_noise_power_w(PARAMS)), -100.9897000433602, atol=1e-10)


def test_dbm_conversions():
    assert_allclose(dbm_to_watts(30.0), 1.0, rtol=1e-12)
    assert_allclose(dbm_to_watts(0.0), 1e-3, rtol=1e-12)
    assert_allclose(dbm_to_watts(-174.0), 3.981071705534986e-21, rtol=1e-12)
    assert_allclose(watts_to_dbm(1.0), 30.0, atol=1e-12)
    assert_allclose(watts_to_dbm(dbm_to_watts(-77.7)), -77.7, atol=1e-12)
    with pytest.raises(ParameterError):
        watts_to_dbm(0.0)


def test_custom_pathloss_parameters():
    custom = RfParams(pathloss_intercept_db=17.5, pathloss_slope_db_decade=43.3)
    assert_allclose(rf_pathloss_db(10.0, custom), 60.8, rtol=1e-12)


def test_parameter_validation():
    with pytest.raises(ParameterError):
        RfParams(tx_power_w=-0.1)
    with pytest.raises(ParameterError):
        RfParams(bandwidth_hz=0.0)
    with pytest.raises(ParameterError):
        RfParams(noise_density_w_hz=0.0)
    with pytest.raises(ParameterError):
        RfParams(shadowing_sigma_db=-1.0)
    with pytest.raises(ParameterError):
        rf_pathloss_db(0.0, PARAMS)
    with pytest.raises(ParameterError):
        rf_channel_gain(-2.0, PARAMS)
