"""VLC channel model: Lambertian LOS gain and receiver noise currents.

The optical front end is a generalized Lambertian LED facing a photodiode
behind an optical filter and a concentrator. The DC channel gain for a
transmitter whose beam axis is ``phi`` off the line of sight and a receiver
whose normal is ``psi`` off the reverse line of sight is

    g = (m + 1) * A * cos(phi)^m * T_s * G(psi) * cos(psi) / (2 pi d^2)

and is exactly zero when the emission angle leaves the forward hemisphere
(|phi| > 90 deg) or the incidence angle leaves the concentrator field of
view (|psi| > fov). ``m`` is the Lambertian order fixed by the LED's
half-power semiangle, m = -ln 2 / ln(cos(semiangle)).

Receiver noise is a current variance referred to the photodiode: a thermal
part with a feedback-resistor term and an FET channel term, plus shot noise
from background light and from the signal photocurrent itself. Both follow
the standard intensity-modulation/direct-detection budget for a
transimpedance front end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError

BOLTZMANN_J_K = 1.380649e-23
ELEMENTARY_CHARGE_C = 1.602176634e-19


@dataclass(frozen=True)
class VlcTxParams:
    """LED transmitter parameters."""

    power_w: float = 0.2
    semiangle_deg: float = 60.0

    def __post_init__(self) -> None:
        if self.power_w < 0.0:
            raise ParameterError(f"power_w must be >= 0, got {self.power_w}")
        if not 0.0 < self.semiangle_deg < 90.0:
            raise ParameterError(
                f"semiangle_deg must lie in (0, 90), got {self.semiangle_deg}"
            )

    @property
    def lambertian_m(self) -> float:
        return -math.log(2.0) / math.log(math.cos(math.radians(self.semiangle_deg)))


@dataclass(frozen=True)
class VlcRxParams:
    """Photodiode receiver parameters, optics and noise budget together.

    ``concentrator_mode`` selects how the concentrator gain G(psi) inside
    the field of view is obtained: ``"constant"`` uses ``concentrator_gain``
    verbatim, ``"index"`` computes n^2 / sin^2(fov) from
    ``refractive_index``. Outside the FOV the gain is zero either way.
    """

    area_m2: float = 1e-4
    fov_deg: float = 60.0
    filter_gain: float = 1.0
    concentrator_mode: str = "constant"
    concentrator_gain: float = 3.0
    refractive_index: float = 1.5
    responsivity_a_w: float = 0.53
    bandwidth_hz: float = 10e6
    bg_current_a: float = 10e-9
    noise_factor_i2: float = 0.562
    noise_factor_i3: float = 0.0868
    fet_eta_f_m2: float = 112e-8
    fet_gamma: float = 1.5
    fet_gm_s: float = 0.03
    open_loop_gain: float = 10.0
    temperature_k: float = 295.0

    def __post_init__(self) -> None:
        if self.area_m2 <= 0.0:
            raise ParameterError(f"area_m2 must be > 0, got {self.area_m2}")
        if not 0.0 < self.fov_deg <= 90.0:
            raise ParameterError(f"fov_deg must lie in (0, 90], got {self.fov_deg}")
        if self.concentrator_mode not in ("constant", "index"):
            raise ParameterError(
                f"concentrator_mode must be 'constant' or 'index', "
                f"got {self.concentrator_mode!r}"
            )
        if self.bandwidth_hz <= 0.0:
            raise ParameterError(f"bandwidth_hz must be > 0, got {self.bandwidth_hz}")
        if self.responsivity_a_w <= 0.0:
            raise ParameterError(
                f"responsivity_a_w must be > 0, got {self.responsivity_a_w}"
            )
        if self.temperature_k <= 0.0:
            raise ParameterError(
                f"temperature_k must be > 0, got {self.temperature_k}"
            )


def lambertian_order(semiangle_deg: float) -> float:
    """Lambertian order m for an LED half-power semiangle in degrees."""
    if not 0.0 < semiangle_deg < 90.0:
        raise ParameterError(
            f"semiangle_deg must lie in (0, 90), got {semiangle_deg}"
        )
    return -math.log(2.0) / math.log(math.cos(math.radians(semiangle_deg)))


def concentrator_gain(psi_deg: float, rx: VlcRxParams) -> float:
    """Optical concentrator gain at incidence ``psi_deg``."""
    if abs(psi_deg) > rx.fov_deg:
        return 0.0
    if rx.concentrator_mode == "index":
        return rx.refractive_index**2 / math.sin(math.radians(rx.fov_deg)) ** 2
    return rx.concentrator_gain


def vlc_channel_gain(
    phi_deg: float,
    psi_deg: float,
    distance_m: float,
    tx: VlcTxParams,
    rx: VlcRxParams,
) -> float:
    """LOS DC gain of the optical link; zero outside emission/FOV limits."""
    if distance_m <= 0.0:
        raise ParameterError(f"distance must be positive, got {distance_m}")
    if abs(phi_deg) > 90.0 or abs(psi_deg) > rx.fov_deg:
        return 0.0
    m = tx.lambertian_m
    phi = math.radians(phi_deg)
    psi = math.radians(psi_deg)
    return (
        (m + 1.0)
        * rx.area_m2
        * math.cos(phi) ** m
        * rx.filter_gain
        * concentrator_gain(psi_deg, rx)
        * math.cos(psi)
        / (2.0 * math.pi * distance_m**2)
    )


def vlc_thermal_noise_a2(rx: VlcRxParams) -> float:
    """Thermal noise current variance at the receiver, in A^2.

    Feedback term plus FET channel term, each scaling with the detector
    area through the fixed per-area capacitance.
    """
    kt = BOLTZMANN_J_K * rx.temperature_k
    feedback = (
        (8.0 * math.pi * kt / rx.open_loop_gain)
        * rx.fet_eta_f_m2
        * rx.area_m2
        * rx.noise_factor_i2
        * rx.bandwidth_hz**2
    )
    fet = (
        (16.0 * math.pi**2 * kt * rx.fet_gamma / rx.fet_gm_s)
        * rx.fet_eta_f_m2**2
        * rx.area_m2**2
        * rx.noise_factor_i3
        * rx.bandwidth_hz**3
    )
    return feedback + fet


def vlc_shot_noise_a2(received_power_w: float, rx: VlcRxParams) -> float:
    """Shot noise current variance in A^2 at a given received optical power.

    Background illumination contributes through the ambient photocurrent;
    the desired signal contributes through its own photocurrent. Interfering
    transmissions are handled as interference power, not folded in here.
    """
    if received_power_w < 0.0:
        raise ParameterError(
            f"received power must be >= 0, got {received_power_w}"
        )
    background = (
        2.0
        * ELEMENTARY_CHARGE_C
        * rx.bg_current_a
        * rx.noise_factor_i2
        * rx.bandwidth_hz
    )
    signal = (
        2.0
        * ELEMENTARY_CHARGE_C
        * rx.responsivity_a_w
        * received_power_w
        * rx.bandwidth_hz
    )
    return background + signal
