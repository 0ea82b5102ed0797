"""Scenario construction, orientation policies and the Monte Carlo loop.

A drop is one independent realization: place the pairs, draw pointing
angles per the active policy, evaluate every pair's budget in both bands.
Sweeps repeat that for each axis value and aggregate means plus the
fraction of pair-evaluations that picked the optical band.

Randomness is organized so reruns are bit-identical and sweep points share
draws (common random numbers): stream (seed, drop, 0) covers placement and
RF shadowing in that order, stream (seed, drop, 1 + k) covers pair k's
orientation (phi drawn before psi, both always consumed even when a forced
angle overrides one). Aggregation uses fixed-order compensated summation,
so results do not depend on how drops would be scheduled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from .errors import ConfigError, ParameterError
from .geometry import Position, azimuth_for_offset
from .link import (
    MODE_VLC,
    D2DPair,
    DeviceNode,
    LinkBudget,
    evaluate_link,
)
from .rf_channel import RfParams
from .vlc_channel import VlcRxParams, VlcTxParams

ORIENTATION_POLICIES = ("optimal", "gaussian", "random", "grid")
PLACEMENTS = ("fixed_two_pair", "uniform_random")
SWEEP_AXES = ("d_tr", "d_p", "phi", "psi")

GRID_MIN_DEG = -90
GRID_MAX_DEG = 90


@dataclass(frozen=True)
class ScenarioConfig:
    """Deployment, orientation policy and trial-count settings.

    ``forced_phi_deg`` / ``forced_psi_deg`` pin the corresponding angle of
    pair 0 (the measured pair) instead of the policy draw; angle sweeps use
    them. ``metric_pair`` restricts aggregation to one pair index, ``None``
    aggregates over all pairs.
    """

    room_dimension_m: float = 30.0
    num_pairs: int = 2
    placement: str = "fixed_two_pair"
    d_tr_m: float = 1.0
    d_p_m: float = 2.0
    orientation_policy: str = "optimal"
    gaussian_mu_deg: float = 0.0
    gaussian_sigma_deg: float = 60.0
    num_drops: int = 10_000
    seed: int = 1
    forced_phi_deg: Optional[float] = None
    forced_psi_deg: Optional[float] = None
    metric_pair: Optional[int] = None

    def __post_init__(self) -> None:
        if self.room_dimension_m <= 0.0:
            raise ConfigError(
                f"room_dimension_m must be > 0, got {self.room_dimension_m}"
            )
        if self.num_pairs < 1:
            raise ConfigError(f"num_pairs must be >= 1, got {self.num_pairs}")
        if self.placement not in PLACEMENTS:
            raise ConfigError(
                f"placement must be one of {PLACEMENTS}, got {self.placement!r}"
            )
        if self.placement == "fixed_two_pair":
            if self.num_pairs != 2:
                raise ConfigError(
                    f"placement 'fixed_two_pair' requires num_pairs = 2, "
                    f"got {self.num_pairs}"
                )
            if self.d_tr_m <= 0.0 or self.d_p_m <= 0.0:
                raise ConfigError(
                    f"d_tr_m and d_p_m must be > 0, got "
                    f"({self.d_tr_m}, {self.d_p_m})"
                )
            if (
                self.d_tr_m > self.room_dimension_m
                or self.d_p_m > self.room_dimension_m
            ):
                raise ConfigError(
                    f"layout (d_tr_m={self.d_tr_m}, d_p_m={self.d_p_m}) does "
                    f"not fit room_dimension_m={self.room_dimension_m}"
                )
        if self.orientation_policy not in ORIENTATION_POLICIES:
            raise ConfigError(
                f"orientation_policy must be one of {ORIENTATION_POLICIES}, "
                f"got {self.orientation_policy!r}"
            )
        if self.gaussian_sigma_deg < 0.0:
            raise ConfigError(
                f"gaussian_sigma_deg must be >= 0, got {self.gaussian_sigma_deg}"
            )
        if self.num_drops < 1:
            raise ConfigError(f"num_drops must be >= 1, got {self.num_drops}")
        if self.metric_pair is not None and not (
            0 <= self.metric_pair < self.num_pairs
        ):
            raise ConfigError(
                f"metric_pair must lie in [0, {self.num_pairs}), "
                f"got {self.metric_pair}"
            )


@dataclass(frozen=True)
class SimConfig:
    """Everything one simulation needs: scenario plus channel parameters."""

    scenario: ScenarioConfig = ScenarioConfig()
    rf: RfParams = RfParams()
    vlc_tx: VlcTxParams = VlcTxParams()
    vlc_rx: VlcRxParams = VlcRxParams()
    vlc_sinr_mode: str = "electrical"


@dataclass(frozen=True)
class TrialResult:
    per_pair: list[LinkBudget]
    drop_index: int


@dataclass(frozen=True)
class SweepResult:
    """Aggregated statistics for one sweep point; maps 1:1 to a CSV row."""

    axis_name: str
    axis_value: float
    mean_capacity_rf_bps: float
    mean_capacity_vlc_bps: float
    mean_capacity_hybrid_bps: float
    vlc_usage_ratio: float
    num_drops: int
    seed: int


def seeded_rng(seed: int, *key: int) -> np.random.Generator:
    """Deterministic generator for a (seed, drop, substream) coordinate."""
    return np.random.default_rng(
        np.random.SeedSequence(entropy=seed, spawn_key=tuple(key))
    )


def deploy_fixed_two_pair(d_tr_m: float, d_p_m: float) -> list[tuple[Position, Position]]:
    """Parallel two-pair layout: (tx, rx) positions per pair.

    Pair 0 runs from (0, 0) to (d_tr, 0), pair 1 from (0, d_p) to
    (d_tr, d_p), so both labeled distances appear by construction and the
    cross links are the rectangle diagonals.
    """
    if d_tr_m <= 0.0 or d_p_m <= 0.0:
        raise ParameterError(
            f"distances must be > 0, got ({d_tr_m}, {d_p_m})"
        )
    return [
        (Position(0.0, 0.0), Position(d_tr_m, 0.0)),
        (Position(0.0, d_p_m), Position(d_tr_m, d_p_m)),
    ]


def deploy_uniform_random(
    cfg: ScenarioConfig, rng: np.random.Generator
) -> list[tuple[Position, Position]]:
    """Drop 2*num_pairs terminals uniformly and match them randomly.

    Positions are drawn first (row-major, one uniform call), then a random
    permutation assigns consecutive entries as (tx, rx) of each pair, so
    every terminal belongs to exactly one pair.
    """
    n_terminals = 2 * cfg.num_pairs
    coords = rng.uniform(0.0, cfg.room_dimension_m, size=(n_terminals, 2))
    order = rng.permutation(n_terminals)
    out = []
    for k in range(cfg.num_pairs):
        tx = coords[order[2 * k]]
        rx = coords[order[2 * k + 1]]
        out.append((Position(float(tx[0]), float(tx[1])), Position(float(rx[0]), float(rx[1]))))
    return out


def draw_link_angles(
    policy: str,
    rng: np.random.Generator,
    mu_deg: float = 0.0,
    sigma_deg: float = 60.0,
) -> tuple[float, float]:
    """Draw (phi, psi) for one pair under an orientation policy.

    phi is always drawn before psi. The grid policy samples integer degrees
    uniformly over the sweep grid [-90, 90].
    """
    if policy == "optimal":
        return 0.0, 0.0
    if policy == "gaussian":
        phi = float(rng.normal(mu_deg, sigma_deg))
        psi = float(rng.normal(mu_deg, sigma_deg))
        return phi, psi
    if policy == "random":
        phi = float(rng.uniform(0.0, 180.0))
        psi = float(rng.uniform(0.0, 180.0))
        return phi, psi
    if policy == "grid":
        phi = float(rng.integers(GRID_MIN_DEG, GRID_MAX_DEG + 1))
        psi = float(rng.integers(GRID_MIN_DEG, GRID_MAX_DEG + 1))
        return phi, psi
    raise ConfigError(f"unknown orientation policy {policy!r}")


def draw_orientation(
    policy: str,
    tx_pos: Position,
    rx_pos: Position,
    rng: np.random.Generator,
    mu_deg: float = 0.0,
    sigma_deg: float = 60.0,
    forced_phi_deg: Optional[float] = None,
    forced_psi_deg: Optional[float] = None,
) -> tuple[float, float]:
    """Azimuths realizing one pair's drawn (or forced) link angles.

    Both angles are drawn even when forced, keeping generator streams
    aligned across sweep points so forced-angle sweeps share all other
    randomness.
    """
    phi, psi = draw_link_angles(policy, rng, mu_deg=mu_deg, sigma_deg=sigma_deg)
    if forced_phi_deg is not None:
        phi = forced_phi_deg
    if forced_psi_deg is not None:
        psi = forced_psi_deg
    tx_az = azimuth_for_offset(tx_pos, rx_pos, phi)
    rx_az = azimuth_for_offset(rx_pos, tx_pos, psi)
    return tx_az, rx_az


def run_drop(sim: SimConfig, drop_index: int) -> TrialResult:
    """One Monte Carlo realization: place, orient, evaluate all pairs."""
    cfg = sim.scenario
    placement_rng = seeded_rng(cfg.seed, drop_index, 0)

    if cfg.placement == "fixed_two_pair":
        endpoints = deploy_fixed_two_pair(cfg.d_tr_m, cfg.d_p_m)
    else:
        endpoints = deploy_uniform_random(cfg, placement_rng)

    pairs = []
    for k, (tx_pos, rx_pos) in enumerate(endpoints):
        pair_rng = seeded_rng(cfg.seed, drop_index, 1 + k)
        forced_phi = cfg.forced_phi_deg if k == 0 else None
        forced_psi = cfg.forced_psi_deg if k == 0 else None
        tx_az, rx_az = draw_orientation(
            cfg.orientation_policy,
            tx_pos,
            rx_pos,
            pair_rng,
            mu_deg=cfg.gaussian_mu_deg,
            sigma_deg=cfg.gaussian_sigma_deg,
            forced_phi_deg=forced_phi,
            forced_psi_deg=forced_psi,
        )
        pairs.append(
            D2DPair(
                tx=DeviceNode(position=tx_pos, azimuth_deg=tx_az),
                rx=DeviceNode(position=rx_pos, azimuth_deg=rx_az),
            )
        )

    budgets = evaluate_link(
        pairs,
        sim.rf,
        sim.vlc_tx,
        sim.vlc_rx,
        vlc_sinr_mode=sim.vlc_sinr_mode,
        rng=placement_rng,
    )
    return TrialResult(per_pair=budgets, drop_index=drop_index)


def _counted_pairs(cfg: ScenarioConfig) -> Sequence[int]:
    if cfg.metric_pair is None:
        return range(cfg.num_pairs)
    return (cfg.metric_pair,)


def aggregate(
    sim: SimConfig, axis_name: str, axis_value: float
) -> SweepResult:
    """Run num_drops drops and reduce to one sweep point.

    Sums run in fixed (drop, pair) order through ``math.fsum`` so the
    aggregate is independent of any execution schedule.
    """
    cfg = sim.scenario
    counted = _counted_pairs(cfg)
    rf_caps: list[float] = []
    vlc_caps: list[float] = []
    hyb_caps: list[float] = []
    vlc_selected = 0
    for drop in range(cfg.num_drops):
        trial = run_drop(sim, drop)
        for k in counted:
            budget = trial.per_pair[k]
            rf_caps.append(budget.capacity_rf_bps)
            vlc_caps.append(budget.capacity_vlc_bps)
            hyb_caps.append(budget.capacity_bps)
            if budget.mode == MODE_VLC:
                vlc_selected += 1
    n_eval = len(hyb_caps)
    return SweepResult(
        axis_name=axis_name,
        axis_value=axis_value,
        mean_capacity_rf_bps=math.fsum(rf_caps) / n_eval,
        mean_capacity_vlc_bps=math.fsum(vlc_caps) / n_eval,
        mean_capacity_hybrid_bps=math.fsum(hyb_caps) / n_eval,
        vlc_usage_ratio=vlc_selected / n_eval,
        num_drops=cfg.num_drops,
        seed=cfg.seed,
    )


def _apply_axis(sim: SimConfig, axis_name: str, value: float) -> SimConfig:
    cfg = sim.scenario
    if axis_name == "d_tr":
        cfg = replace(cfg, d_tr_m=value)
    elif axis_name == "d_p":
        cfg = replace(cfg, d_p_m=value)
    elif axis_name == "phi":
        cfg = replace(cfg, forced_phi_deg=value)
    elif axis_name == "psi":
        cfg = replace(cfg, forced_psi_deg=value)
    else:
        raise ConfigError(
            f"sweep axis must be one of {SWEEP_AXES}, got {axis_name!r}"
        )
    return replace(sim, scenario=cfg)


def run_sweep(
    axis_name: str, axis_values: Sequence[float], sim: SimConfig
) -> list[SweepResult]:
    """Aggregate one sweep point per axis value, sharing seeds across points."""
    if len(axis_values) == 0:
        raise ConfigError("axis_values must be non-empty")
    return [
        aggregate(_apply_axis(sim, axis_name, v), axis_name, v)
        for v in axis_values
    ]
