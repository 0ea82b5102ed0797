"""Canned experiment definitions.

Each preset expands to one or more sweep runs. Runs that belong to the
same preset but trace different curves (another inter-pair distance,
another orientation policy) carry the distinction in their file stem,
because the export row format has a single axis column.

``angle_sweep_phi`` / ``angle_sweep_psi``
    Mean capacities of the measured pair versus one forced pointing angle
    at close range (d_TR = 1 m, d_P = 2 m). All angles that are not forced,
    on both pairs, are drawn per drop from the uniform integer-degree grid
    over [-90, 90], which is the averaging the reported angle-sensitivity
    numbers assume.

``usage_ratio_grid``
    Fraction of pair-evaluations selecting the optical band versus d_TR,
    one run per d_P in {2, 10, 25} m, grid-drawn orientations.

``capacity_comparison``
    RF-only, VLC-only and selection means versus d_TR for each orientation
    policy (optimal, gaussian, random), one run per (policy, d_P).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .errors import ConfigError
from .scenario import ScenarioConfig, SimConfig

PRESET_NAMES = (
    "angle_sweep_phi",
    "angle_sweep_psi",
    "usage_ratio_grid",
    "capacity_comparison",
)

D_TR_VALUES_M = (1.0, 3.0, 5.0, 10.0, 15.0, 20.0, 25.0)
D_P_VALUES_M = (2.0, 10.0, 25.0)
ANGLE_VALUES_DEG = tuple(float(a) for a in range(-90, 91, 5))
COMPARISON_POLICIES = ("optimal", "gaussian", "random")


@dataclass(frozen=True)
class PresetRun:
    """One exportable sweep: a file stem, an axis and a full config."""

    file_stem: str
    axis_name: str
    axis_values: tuple
    sim: SimConfig


def _with_overrides(
    sim: SimConfig, num_drops: Optional[int], seed: Optional[int]
) -> SimConfig:
    cfg = sim.scenario
    if num_drops is not None:
        cfg = replace(cfg, num_drops=num_drops)
    if seed is not None:
        cfg = replace(cfg, seed=seed)
    return replace(sim, scenario=cfg)


def preset_runs(
    name: str,
    base: Optional[SimConfig] = None,
    num_drops: Optional[int] = None,
    seed: Optional[int] = None,
) -> list[PresetRun]:
    """Expand a preset into its sweep runs.

    ``base`` supplies channel parameters and the SINR convention; the
    preset overrides the scenario fields it owns (placement, distances,
    policy, measured pair). ``num_drops`` and ``seed`` override the base
    scenario's values when given.
    """
    if name not in PRESET_NAMES:
        raise ConfigError(f"unknown preset {name!r}; choose from {PRESET_NAMES}")
    sim = base if base is not None else SimConfig()
    sim = _with_overrides(sim, num_drops, seed)
    scen = sim.scenario

    runs: list[PresetRun] = []
    if name in ("angle_sweep_phi", "angle_sweep_psi"):
        axis = "phi" if name == "angle_sweep_phi" else "psi"
        cfg = replace(
            scen,
            placement="fixed_two_pair",
            num_pairs=2,
            d_tr_m=1.0,
            d_p_m=2.0,
            orientation_policy="grid",
            metric_pair=0,
            forced_phi_deg=None,
            forced_psi_deg=None,
        )
        runs.append(
            PresetRun(
                file_stem=name,
                axis_name=axis,
                axis_values=ANGLE_VALUES_DEG,
                sim=replace(sim, scenario=cfg),
            )
        )
    elif name == "usage_ratio_grid":
        for d_p in D_P_VALUES_M:
            cfg = replace(
                scen,
                placement="fixed_two_pair",
                num_pairs=2,
                d_p_m=d_p,
                orientation_policy="grid",
                metric_pair=None,
                forced_phi_deg=None,
                forced_psi_deg=None,
            )
            runs.append(
                PresetRun(
                    file_stem=f"usage_ratio_dp{d_p:g}",
                    axis_name="d_tr",
                    axis_values=D_TR_VALUES_M,
                    sim=replace(sim, scenario=cfg),
                )
            )
    else:
        for policy in COMPARISON_POLICIES:
            for d_p in D_P_VALUES_M:
                cfg = replace(
                    scen,
                    placement="fixed_two_pair",
                    num_pairs=2,
                    d_p_m=d_p,
                    orientation_policy=policy,
                    metric_pair=None,
                    forced_phi_deg=None,
                    forced_psi_deg=None,
                )
                runs.append(
                    PresetRun(
                        file_stem=f"capacity_comparison_{policy}_dp{d_p:g}",
                        axis_name="d_tr",
                        axis_values=D_TR_VALUES_M,
                        sim=replace(sim, scenario=cfg),
                    )
                )
    return runs
