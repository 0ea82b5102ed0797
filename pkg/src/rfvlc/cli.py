"""Command-line entry point.

Three subcommands:

``run``
    Evaluate one scenario (config file or defaults) and print the
    aggregate; ``--out`` additionally writes it in the export format.

``sweep``
    Run a named preset or a custom axis sweep and export one file per
    curve group, or everything concatenated into ``--out`` when that is
    given.

``oracle``
    Print the full scalar chain (channel gains, noise terms, SINRs,
    capacities, selected band) for one hand-specified link, so fixture
    values can be read off directly.

Exit status is 0 on success, 2 on usage errors (argparse), 1 on config or
runtime failures with a diagnostic on stderr. ``RFVLC_OUT_DIR`` sets the
default output directory for sweep files.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys
from typing import Optional, Sequence

from .errors import ConfigError, ParameterError
from .geometry import Position, azimuth_for_offset, distance, link_angles
from .io import export_results, parse_config
from .link import D2DPair, DeviceNode, evaluate_link
from .presets import PRESET_NAMES, PresetRun, preset_runs
from .rf_channel import rf_channel_gain, rf_noise_power_w, rf_pathloss_db
from .scenario import (
    SWEEP_AXES,
    SimConfig,
    aggregate,
    deploy_fixed_two_pair,
    run_sweep,
)
from .vlc_channel import (
    vlc_channel_gain,
    vlc_shot_noise_a2,
    vlc_thermal_noise_a2,
)

OUT_DIR_ENV = "RFVLC_OUT_DIR"


def _load_sim(args: argparse.Namespace) -> SimConfig:
    sim = parse_config(args.config) if args.config else SimConfig()
    scen = sim.scenario
    if getattr(args, "drops", None) is not None:
        scen = dataclasses.replace(scen, num_drops=args.drops)
    if getattr(args, "seed", None) is not None:
        scen = dataclasses.replace(scen, seed=args.seed)
    return dataclasses.replace(sim, scenario=scen)


def _default_out_dir() -> str:
    return os.environ.get(OUT_DIR_ENV, ".")


def _print_result(row) -> None:
    for field in dataclasses.fields(row):
        print(f"{field.name} = {getattr(row, field.name)!r}")


def _cmd_run(args: argparse.Namespace) -> int:
    sim = _load_sim(args)
    row = aggregate(sim, "d_tr", sim.scenario.d_tr_m)
    _print_result(row)
    if args.out:
        export_results([row], args.format, args.out)
        print(f"wrote {args.out}")
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.preset is None and args.axis is None:
        raise ConfigError("sweep needs --preset or --axis/--values")
    sim = _load_sim(args)

    if args.preset is not None:
        runs = preset_runs(
            args.preset, base=sim, num_drops=args.drops, seed=args.seed
        )
    else:
        if args.values is None:
            raise ConfigError("--axis requires --values")
        try:
            values = tuple(float(v) for v in args.values.split(","))
        except ValueError as exc:
            raise ConfigError(f"--values must be comma-separated numbers: {exc}")
        runs = [
            PresetRun(
                file_stem=f"sweep_{args.axis}",
                axis_name=args.axis,
                axis_values=values,
                sim=sim,
            )
        ]

    if args.out and len(runs) > 1:
        rows = []
        for run in runs:
            rows.extend(run_sweep(run.axis_name, run.axis_values, run.sim))
        export_results(rows, args.format, args.out)
        print(f"wrote {args.out}")
        return 0

    out_dir = _default_out_dir()
    for run in runs:
        rows = run_sweep(run.axis_name, run.axis_values, run.sim)
        if args.out:
            path = args.out
        else:
            path = os.path.join(out_dir, f"{run.file_stem}.{args.format}")
        export_results(rows, args.format, path)
        print(f"wrote {path}")
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    sim = _load_sim(args)
    if args.mode is not None:
        sim = dataclasses.replace(sim, vlc_sinr_mode=args.mode)

    if args.d_p is not None:
        endpoints = deploy_fixed_two_pair(args.d_tr, args.d_p)
    else:
        endpoints = deploy_fixed_two_pair(args.d_tr, 1.0)[:1]

    offsets = [(args.phi, args.psi), (args.phi2, args.psi2)]
    pairs = []
    for (tx_pos, rx_pos), (phi, psi) in zip(endpoints, offsets):
        pairs.append(
            D2DPair(
                tx=DeviceNode(tx_pos, azimuth_for_offset(tx_pos, rx_pos, phi)),
                rx=DeviceNode(rx_pos, azimuth_for_offset(rx_pos, tx_pos, psi)),
            )
        )

    budgets = evaluate_link(
        pairs, sim.rf, sim.vlc_tx, sim.vlc_rx, vlc_sinr_mode=sim.vlc_sinr_mode
    )

    d = args.d_tr
    own_vlc_gain = vlc_channel_gain(args.phi, args.psi, d, sim.vlc_tx, sim.vlc_rx)
    own_rf_gain = rf_channel_gain(d, sim.rf)
    rx_power_vlc = sim.vlc_tx.power_w * own_vlc_gain
    print(f"vlc_sinr_mode = {sim.vlc_sinr_mode}")
    print(f"d_m = {float(d)!r}")
    print(f"phi_deg = {float(args.phi)!r}")
    print(f"psi_deg = {float(args.psi)!r}")
    print(f"vlc_gain = {own_vlc_gain!r}")
    print(f"rf_pathloss_db = {rf_pathloss_db(d, sim.rf)!r}")
    print(f"rf_gain = {own_rf_gain!r}")
    print(f"rf_noise_w = {rf_noise_power_w(sim.rf)!r}")
    print(f"vlc_thermal_noise_a2 = {vlc_thermal_noise_a2(sim.vlc_rx)!r}")
    print(f"vlc_shot_noise_a2 = {vlc_shot_noise_a2(rx_power_vlc, sim.vlc_rx)!r}")
    if args.d_p is not None:
        src, dst = pairs[1].tx, pairs[0].rx
        d_x = distance(src.position, dst.position)
        x_angles = link_angles(
            src.position, src.azimuth_deg, dst.position, dst.azimuth_deg
        )
        print(f"cross_distance_m = {d_x!r}")
        print(f"cross_phi_deg = {x_angles.phi_deg!r}")
        print(f"cross_psi_deg = {x_angles.psi_deg!r}")
        print(
            "cross_vlc_gain = "
            f"{vlc_channel_gain(x_angles.phi_deg, x_angles.psi_deg, d_x, sim.vlc_tx, sim.vlc_rx)!r}"
        )
        print(f"cross_rf_gain = {rf_channel_gain(d_x, sim.rf)!r}")
    budget = budgets[0]
    print(f"rf_sinr = {budget.rf_sinr!r}")
    print(f"vlc_sinr = {budget.vlc_sinr!r}")
    print(f"capacity_rf_bps = {budget.capacity_rf_bps!r}")
    print(f"capacity_vlc_bps = {budget.capacity_vlc_bps!r}")
    print(f"selected_mode = {budget.mode}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rfvlc",
        description=(
            "Monte Carlo link simulator for device pairs selecting between "
            "an RF and a VLC band per transmission."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", help="JSON config file")
        p.add_argument("--seed", type=int, help="override scenario seed")
        p.add_argument("--drops", type=int, help="override drops per point")
        p.add_argument("--out", help="output file path")
        p.add_argument(
            "--format", choices=("csv", "json"), default="csv",
            help="export format (default csv)",
        )

    p_run = sub.add_parser("run", help="evaluate one scenario")
    common(p_run)
    p_run.set_defaults(func=_cmd_run)

    p_sweep = sub.add_parser("sweep", help="run a preset or custom sweep")
    common(p_sweep)
    p_sweep.add_argument("--preset", choices=PRESET_NAMES)
    p_sweep.add_argument("--axis", choices=SWEEP_AXES)
    p_sweep.add_argument("--values", help="comma-separated axis values")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_oracle = sub.add_parser(
        "oracle", help="print the scalar budget chain for one link"
    )
    common(p_oracle)
    p_oracle.add_argument("--d-tr", type=float, required=True, dest="d_tr")
    p_oracle.add_argument("--phi", type=float, default=0.0)
    p_oracle.add_argument("--psi", type=float, default=0.0)
    p_oracle.add_argument(
        "--d-p", type=float, default=None, dest="d_p",
        help="add an interfering pair at this offset",
    )
    p_oracle.add_argument("--phi2", type=float, default=0.0)
    p_oracle.add_argument("--psi2", type=float, default=0.0)
    p_oracle.add_argument(
        "--mode", choices=("electrical", "uniform", "literal"),
        help="override the VLC SINR convention",
    )
    p_oracle.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ParameterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
