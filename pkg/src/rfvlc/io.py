"""Config file parsing and result export.

Configs are JSON with one section per parameter group (``scenario``,
``rf``, ``vlc_tx``, ``vlc_rx``) plus the top-level ``vlc_sinr_mode``
switch. Every field may be given either by its SI name exactly as stored
on the parameter dataclasses, or in the customary bench units via an
alternate key (powers in mW, bandwidths in MHz, detector area in cm^2,
background current in nA, noise density in dBm/Hz, FET capacitance per
area in pF/cm^2, transconductance in mS, carrier frequency in GHz).
``config_to_dict`` serializes back using the SI names only, so a
parse/serialize round trip is lossless.

Exports write one row per sweep point with exactly these columns:

    axis_name, axis_value, mean_capacity_rf_bps, mean_capacity_vlc_bps,
    mean_capacity_hybrid_bps, vlc_usage_ratio, num_drops, seed

Floats are serialized with ``repr`` (shortest string that round-trips the
double), and the hybrid-dominance guard re-checks every row before
anything is written.
"""

from __future__ import annotations

import csv
import dataclasses
import json
import math
from typing import Callable, Mapping, Optional, Sequence

from .errors import ConfigError, ParameterError
from .rf_channel import RfParams, dbm_to_watts
from .scenario import ScenarioConfig, SimConfig, SweepResult
from .vlc_channel import VlcRxParams, VlcTxParams

CSV_COLUMNS = (
    "axis_name",
    "axis_value",
    "mean_capacity_rf_bps",
    "mean_capacity_vlc_bps",
    "mean_capacity_hybrid_bps",
    "vlc_usage_ratio",
    "num_drops",
    "seed",
)

_ALT_RF: Mapping[str, tuple[str, Callable[[float], float]]] = {
    "tx_power_mw": ("tx_power_w", lambda v: v * 1e-3),
    "bandwidth_mhz": ("bandwidth_hz", lambda v: v * 1e6),
    "noise_density_dbm_hz": ("noise_density_w_hz", dbm_to_watts),
    "carrier_freq_ghz": ("carrier_freq_hz", lambda v: v * 1e9),
}

_ALT_VLC_TX: Mapping[str, tuple[str, Callable[[float], float]]] = {
    "power_mw": ("power_w", lambda v: v * 1e-3),
}

_ALT_VLC_RX: Mapping[str, tuple[str, Callable[[float], float]]] = {
    "area_cm2": ("area_m2", lambda v: v * 1e-4),
    "bandwidth_mhz": ("bandwidth_hz", lambda v: v * 1e6),
    "bg_current_na": ("bg_current_a", lambda v: v * 1e-9),
    "fet_eta_pf_cm2": ("fet_eta_f_m2", lambda v: v * 1e-8),
    "fet_gm_ms": ("fet_gm_s", lambda v: v * 1e-3),
}

_SECTIONS = {
    "scenario": (ScenarioConfig, {}),
    "rf": (RfParams, _ALT_RF),
    "vlc_tx": (VlcTxParams, _ALT_VLC_TX),
    "vlc_rx": (VlcRxParams, _ALT_VLC_RX),
}


def _parse_section(name: str, data: Mapping, cls, alt: Mapping):
    if not isinstance(data, Mapping):
        raise ConfigError(f"section {name!r} must be an object")
    si_fields = {f.name for f in dataclasses.fields(cls)}
    kwargs = {}
    for key, value in data.items():
        if key in si_fields:
            target, conv = key, None
        elif key in alt:
            target, conv = alt[key]
        else:
            raise ConfigError(f"unknown key {key!r} in section {name!r}")
        if target in kwargs:
            raise ConfigError(
                f"field {target!r} in section {name!r} set twice "
                f"(SI and alternate-unit keys both present)"
            )
        kwargs[target] = conv(value) if conv is not None else value
    try:
        return cls(**kwargs)
    except ParameterError as exc:
        raise ConfigError(f"section {name!r}: {exc}") from exc
    except TypeError as exc:
        raise ConfigError(f"section {name!r}: {exc}") from exc


def parse_config_dict(data: Mapping) -> SimConfig:
    """Build a validated SimConfig from a config mapping.

    Missing sections and fields take the bench defaults; unknown sections,
    unknown keys and out-of-range values raise ConfigError naming the
    offender.
    """
    if not isinstance(data, Mapping):
        raise ConfigError("config root must be an object")
    known = set(_SECTIONS) | {"vlc_sinr_mode"}
    for key in data:
        if key not in known:
            raise ConfigError(f"unknown top-level section {key!r}")
    parts = {}
    for name, (cls, alt) in _SECTIONS.items():
        parts[name] = _parse_section(name, data.get(name, {}), cls, alt)
    mode = data.get("vlc_sinr_mode", "electrical")
    sim = SimConfig(
        scenario=parts["scenario"],
        rf=parts["rf"],
        vlc_tx=parts["vlc_tx"],
        vlc_rx=parts["vlc_rx"],
        vlc_sinr_mode=mode,
    )
    if mode not in ("electrical", "uniform", "literal"):
        raise ConfigError(
            f"vlc_sinr_mode must be 'electrical', 'uniform' or 'literal', "
            f"got {mode!r}"
        )
    return sim


def parse_config(path: str) -> SimConfig:
    """Parse a JSON config file; see parse_config_dict for semantics."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: not valid JSON ({exc})") from exc
    return parse_config_dict(data)


def config_to_dict(sim: SimConfig) -> dict:
    """Serialize a SimConfig back to the config schema using SI keys."""
    return {
        "scenario": dataclasses.asdict(sim.scenario),
        "rf": dataclasses.asdict(sim.rf),
        "vlc_tx": dataclasses.asdict(sim.vlc_tx),
        "vlc_rx": dataclasses.asdict(sim.vlc_rx),
        "vlc_sinr_mode": sim.vlc_sinr_mode,
    }


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _check_dominance(rows: Sequence[SweepResult]) -> None:
    for row in rows:
        bound = max(row.mean_capacity_rf_bps, row.mean_capacity_vlc_bps)
        # Means come from exact fixed-order sums, so anything beyond a
        # couple of ulps of slack is a real violation.
        slack = 4.0 * math.ulp(bound) if bound > 0.0 else 0.0
        if row.mean_capacity_hybrid_bps + slack < bound:
            raise ParameterError(
                f"hybrid mean {row.mean_capacity_hybrid_bps!r} below "
                f"single-band mean {bound!r} at "
                f"{row.axis_name}={row.axis_value!r}"
            )


def export_results(
    results: Sequence[SweepResult], fmt: str, path: str
) -> None:
    """Write sweep results to ``path`` as CSV or JSON.

    Refuses empty result lists and rows where the hybrid mean falls below
    a single-band mean. CSV reruns with identical inputs are byte
    identical.
    """
    if len(results) == 0:
        raise ParameterError("results must be non-empty")
    if fmt not in ("csv", "json"):
        raise ParameterError(f"format must be 'csv' or 'json', got {fmt!r}")
    _check_dominance(results)
    if fmt == "csv":
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            for row in results:
                writer.writerow(
                    [
                        row.axis_name,
                        _fmt(row.axis_value),
                        _fmt(row.mean_capacity_rf_bps),
                        _fmt(row.mean_capacity_vlc_bps),
                        _fmt(row.mean_capacity_hybrid_bps),
                        _fmt(row.vlc_usage_ratio),
                        row.num_drops,
                        row.seed,
                    ]
                )
    else:
        payload = [
            {col: getattr(row, col) for col in CSV_COLUMNS} for row in results
        ]
        with open(path, "w", encoding="utf-8", newline="") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
