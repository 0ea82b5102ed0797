"""Per-transmission link budgets and band selection.

Each device-to-device pair evaluates both bands for the same geometry and
picks whichever offers the higher Shannon capacity; ties go to RF. RF
interference is the plain sum of received powers from the other active
transmitters. On the optical side three SINR conventions are available via
``vlc_sinr_mode``:

``"electrical"`` (default)
    Electrical-domain SINR after photodetection. Signal and interference
    both enter as squared photocurrents, (responsivity * optical power)^2,
    against the thermal plus shot noise current variance. This is the
    standard budget for intensity-modulated links with direct detection.

``"uniform"``
    Responsivity-squared scaling applied linearly to both the desired and
    the interfering optical powers.

``"literal"``
    Responsivity-squared scaling on the desired power only, interference
    entering as raw optical power.

The last two keep alternative published arrangements of the responsivity
factor reproducible for comparison. Shot noise is always evaluated at the
desired link's received optical power.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import ParameterError
from .geometry import Position, distance, link_angles
from .rf_channel import RfParams, rf_channel_gain, rf_noise_power_w
from .vlc_channel import (
    VlcRxParams,
    VlcTxParams,
    vlc_channel_gain,
    vlc_shot_noise_a2,
    vlc_thermal_noise_a2,
)

VLC_SINR_MODES = ("electrical", "uniform", "literal")

MODE_RF = "rf"
MODE_VLC = "vlc"


@dataclass(frozen=True)
class DeviceNode:
    """A transceiver with a position, a pointing azimuth and band powers.

    ``p_rf_w`` / ``p_vlc_w`` override the shared per-band transmit powers
    when set; ``None`` falls back to the band parameter defaults.
    """

    position: Position
    azimuth_deg: float
    p_rf_w: Optional[float] = None
    p_vlc_w: Optional[float] = None


@dataclass(frozen=True)
class D2DPair:
    tx: DeviceNode
    rx: DeviceNode


@dataclass(frozen=True)
class LinkBudget:
    """Evaluated budget for one pair in one drop."""

    rf_sinr: float
    vlc_sinr: float
    capacity_rf_bps: float
    capacity_vlc_bps: float
    mode: str
    capacity_bps: float


def shannon_capacity_bps(bandwidth_hz: float, sinr: float) -> float:
    if sinr < 0.0:
        raise ParameterError(f"SINR must be >= 0, got {sinr}")
    return bandwidth_hz * math.log2(1.0 + sinr)


def rf_sinr(
    signal_power_w: float,
    interference_powers_w: Sequence[float],
    noise_power_w: float,
) -> float:
    return signal_power_w / (math.fsum(interference_powers_w) + noise_power_w)


def vlc_sinr(
    signal_power_w: float,
    interference_powers_w: Sequence[float],
    rx: VlcRxParams,
    mode: str = "electrical",
) -> float:
    """Optical-link SINR under the selected convention.

    ``signal_power_w`` and ``interference_powers_w`` are received optical
    powers (transmit power times channel gain). Noise is the thermal
    current variance plus shot noise at the desired received power.
    """
    if mode not in VLC_SINR_MODES:
        raise ParameterError(
            f"vlc_sinr_mode must be one of {VLC_SINR_MODES}, got {mode!r}"
        )
    gamma = rx.responsivity_a_w
    noise_a2 = vlc_thermal_noise_a2(rx) + vlc_shot_noise_a2(signal_power_w, rx)
    if mode == "electrical":
        signal = (gamma * signal_power_w) ** 2
        interference = math.fsum((gamma * p) ** 2 for p in interference_powers_w)
    elif mode == "uniform":
        signal = gamma**2 * signal_power_w
        interference = gamma**2 * math.fsum(interference_powers_w)
    else:
        signal = gamma**2 * signal_power_w
        interference = math.fsum(interference_powers_w)
    return signal / (interference + noise_a2)


def select_mode(capacity_rf_bps: float, capacity_vlc_bps: float) -> str:
    """Band choice for one transmission; RF wins ties."""
    return MODE_RF if capacity_rf_bps >= capacity_vlc_bps else MODE_VLC


def _tx_power(node: DeviceNode, band: str, rf: RfParams, vlc_tx: VlcTxParams) -> float:
    if band == MODE_RF:
        return node.p_rf_w if node.p_rf_w is not None else rf.tx_power_w
    return node.p_vlc_w if node.p_vlc_w is not None else vlc_tx.power_w


def evaluate_link(
    pairs: Sequence[D2DPair],
    rf: RfParams,
    vlc_tx: VlcTxParams,
    vlc_rx: VlcRxParams,
    vlc_sinr_mode: str = "electrical",
    rng: Optional[np.random.Generator] = None,
) -> list[LinkBudget]:
    """Evaluate every pair's budget with all other pairs interfering.

    All transmitters are active simultaneously in both bands (worst-case
    full-buffer interference). RF shadowing, when enabled, is drawn as one
    matrix ``shadow[i][n]`` of dB values for the link from pair ``i``'s
    transmitter to pair ``n``'s receiver, in a single generator call so the
    stream layout is stable; ``rng`` is required in that case.
    """
    n = len(pairs)
    if n == 0:
        raise ParameterError("at least one pair is required")

    if rf.shadowing_sigma_db > 0.0:
        if rng is None:
            raise ParameterError(
                "an rng is required when shadowing_sigma_db > 0"
            )
        shadow_db = rng.normal(0.0, rf.shadowing_sigma_db, size=(n, n))
    else:
        shadow_db = np.zeros((n, n))

    rf_noise = rf_noise_power_w(rf)

    # Received powers over every tx-pair -> rx-pair combination, per band.
    rf_rx_w = np.empty((n, n))
    vlc_rx_w = np.empty((n, n))
    for i, src in enumerate(pairs):
        for k, dst in enumerate(pairs):
            d = distance(src.tx.position, dst.rx.position)
            angles = link_angles(
                src.tx.position,
                src.tx.azimuth_deg,
                dst.rx.position,
                dst.rx.azimuth_deg,
            )
            rf_rx_w[i, k] = _tx_power(src.tx, MODE_RF, rf, vlc_tx) * rf_channel_gain(
                d, rf, shadowing_db=float(shadow_db[i, k])
            )
            vlc_rx_w[i, k] = _tx_power(
                src.tx, MODE_VLC, rf, vlc_tx
            ) * vlc_channel_gain(angles.phi_deg, angles.psi_deg, d, vlc_tx, vlc_rx)

    budgets: list[LinkBudget] = []
    for k in range(n):
        rf_interf = [float(rf_rx_w[i, k]) for i in range(n) if i != k]
        vlc_interf = [float(vlc_rx_w[i, k]) for i in range(n) if i != k]
        sinr_rf = rf_sinr(float(rf_rx_w[k, k]), rf_interf, rf_noise)
        sinr_vlc = vlc_sinr(
            float(vlc_rx_w[k, k]), vlc_interf, vlc_rx, mode=vlc_sinr_mode
        )
        cap_rf = shannon_capacity_bps(rf.bandwidth_hz, sinr_rf)
        cap_vlc = shannon_capacity_bps(vlc_rx.bandwidth_hz, sinr_vlc)
        mode = select_mode(cap_rf, cap_vlc)
        budgets.append(
            LinkBudget(
                rf_sinr=sinr_rf,
                vlc_sinr=sinr_vlc,
                capacity_rf_bps=cap_rf,
                capacity_vlc_bps=cap_vlc,
                mode=mode,
                capacity_bps=cap_rf if mode == MODE_RF else cap_vlc,
            )
        )
    return budgets
