"""Link-level Monte Carlo simulator for RF/VLC band selection in D2D pairs."""

from .errors import ConfigError, DegenerateGeometryError, ParameterError
from .geometry import AnglePair, Position, link_angles, wrap_angle_deg
from .io import export_results, parse_config, parse_config_dict
from .link import (
    VLC_SINR_MODES,
    D2DPair,
    DeviceNode,
    LinkBudget,
    evaluate_link,
    rf_sinr,
    select_mode,
    shannon_capacity_bps,
    vlc_sinr,
)
from .presets import PRESET_NAMES, preset_runs
from .rf_channel import RfParams, rf_channel_gain, rf_noise_power_w, rf_pathloss_db
from .scenario import (
    ScenarioConfig,
    SimConfig,
    SweepResult,
    TrialResult,
    aggregate,
    deploy_fixed_two_pair,
    deploy_uniform_random,
    draw_orientation,
    run_drop,
    run_sweep,
    seeded_rng,
)
from .vlc_channel import (
    VlcRxParams,
    VlcTxParams,
    lambertian_order,
    vlc_channel_gain,
    vlc_shot_noise_a2,
    vlc_thermal_noise_a2,
)

__version__ = "0.1.0"
