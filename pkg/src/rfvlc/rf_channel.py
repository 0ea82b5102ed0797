"""RF channel model: log-distance pathloss, noise floor, unit helpers.

The RF band is omnidirectional, so the channel gain depends on distance
only. Pathloss follows the usual log-distance form

    PL(d) [dB] = intercept + slope * log10(d / 1 m)

with an optional log-normal shadowing term supplied by the caller (the
simulator draws it once per drop; sigma defaults to zero). Channel gain is
the linear power ratio 10^(-PL/10).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError


def dbm_to_watts(p_dbm: float) -> float:
    return 10.0 ** ((p_dbm - 30.0) / 10.0)


def watts_to_dbm(p_w: float) -> float:
    if p_w <= 0.0:
        raise ParameterError(f"power must be positive to express in dBm, got {p_w}")
    return 10.0 * math.log10(p_w) + 30.0


@dataclass(frozen=True)
class RfParams:
    """Parameters of the RF band shared by every node.

    ``carrier_freq_hz`` is carried for bookkeeping (it would matter to a
    frequency-dependent pathloss model) but the default model does not
    consume it.
    """

    tx_power_w: float = 0.2
    bandwidth_hz: float = 20e6
    noise_density_w_hz: float = dbm_to_watts(-174.0)
    pathloss_intercept_db: float = 89.5
    pathloss_slope_db_decade: float = 16.9
    shadowing_sigma_db: float = 0.0
    carrier_freq_hz: float = 2e9

    def __post_init__(self) -> None:
        if self.tx_power_w < 0.0:
            raise ParameterError(f"tx_power_w must be >= 0, got {self.tx_power_w}")
        if self.bandwidth_hz <= 0.0:
            raise ParameterError(f"bandwidth_hz must be > 0, got {self.bandwidth_hz}")
        if self.noise_density_w_hz <= 0.0:
            raise ParameterError(
                f"noise_density_w_hz must be > 0, got {self.noise_density_w_hz}"
            )
        if self.shadowing_sigma_db < 0.0:
            raise ParameterError(
                f"shadowing_sigma_db must be >= 0, got {self.shadowing_sigma_db}"
            )


def rf_pathloss_db(distance_m: float, params: RfParams) -> float:
    if distance_m <= 0.0:
        raise ParameterError(f"distance must be positive, got {distance_m}")
    return (
        params.pathloss_intercept_db
        + params.pathloss_slope_db_decade * math.log10(distance_m)
    )


def rf_channel_gain(
    distance_m: float, params: RfParams, shadowing_db: float = 0.0
) -> float:
    """Linear power gain of the RF link, shadowing already drawn."""
    pl_db = rf_pathloss_db(distance_m, params) + shadowing_db
    return 10.0 ** (-pl_db / 10.0)


def rf_noise_power_w(params: RfParams) -> float:
    """Thermal noise power integrated over the RF bandwidth."""
    return params.noise_density_w_hz * params.bandwidth_hz
