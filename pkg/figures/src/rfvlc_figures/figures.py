"""Figure rendering from exported sweep CSVs.

Three figure kinds cover the simulator's standard experiments: capacity
versus a forced pointing angle, optical-band usage versus link distance
with one panel per inter-pair distance, and the RF-only/VLC-only/selection
capacity comparison. Everything plotted comes straight from the CSV rows;
the only transforms applied are unit scaling for readable axes.

Files that trace different curves of one experiment are told apart by
their stem suffixes (``..._dp10``, ``capacity_comparison_gaussian_...``),
matching the simulator's export naming.
"""

from __future__ import annotations

import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .schema import SchemaError, dp_from_stem, load_rows, policy_from_stem, stem_of

FIGURE_KINDS = ("angle_capacity", "usage_ratio", "capacity_comparison")

plt.rcParams.update(
    {
        "figure.dpi": 110,
        "savefig.dpi": 150,
        "font.size": 9,
        "axes.grid": True,
        "grid.alpha": 0.3,
        "lines.linewidth": 1.4,
    }
)

_STRATEGY_STYLES = (
    ("mean_capacity_rf_bps", "RF only", ":"),
    ("mean_capacity_vlc_bps", "VLC only", "--"),
    ("mean_capacity_hybrid_bps", "selection", "-"),
)

_POLICY_COLORS = {
    "optimal": "tab:blue",
    "gaussian": "tab:orange",
    "random": "tab:green",
}

_AXIS_LABELS = {
    "phi": "transmitter angle phi (deg)",
    "psi": "receiver angle psi (deg)",
    "d_tr": "pair distance d_TR (m)",
    "d_p": "inter-pair distance d_P (m)",
}

MBPS = 1e6


def _sorted_inputs(paths: Sequence[str]) -> list[str]:
    def key(path: str):
        stem = stem_of(path)
        dp = dp_from_stem(stem)
        return (dp if dp is not None else math.inf, stem)

    return sorted(paths, key=key)


def _axis_label(rows: list[dict]) -> str:
    name = rows[0]["axis_name"]
    return _AXIS_LABELS.get(name, name)


def _save(fig, out_path: str) -> None:
    metadata = {"Software": "rfvlc-figures"}
    if out_path.endswith(".svg"):
        metadata = {"Date": None}
    fig.savefig(out_path, metadata=metadata)
    plt.close(fig)


def render_angle_capacity(paths: Sequence[str], out_path: str):
    """Mean capacities versus a forced pointing angle, one panel per file."""
    ordered = _sorted_inputs(paths)
    data = [(stem_of(p), load_rows(p)) for p in ordered]
    fig, axes = plt.subplots(
        1, len(data), figsize=(4.2 * len(data), 3.2), squeeze=False, sharey=True
    )
    for ax, (stem, rows) in zip(axes[0], data):
        x = [r["axis_value"] for r in rows]
        for column, label, style in _STRATEGY_STYLES:
            ax.plot(x, [r[column] / MBPS for r in rows], style, label=label)
        ax.set_xlabel(_axis_label(rows))
        ax.set_title(stem)
    axes[0][0].set_ylabel("mean capacity (Mbit/s)")
    axes[0][0].legend()
    fig.tight_layout()
    _save(fig, out_path)
    return fig


def render_usage_ratio(paths: Sequence[str], out_path: str):
    """Optical-band usage versus distance, one panel per inter-pair spacing."""
    ordered = _sorted_inputs(paths)
    data = [(stem_of(p), load_rows(p)) for p in ordered]
    fig, axes = plt.subplots(
        1, len(data), figsize=(3.6 * len(data), 3.0), squeeze=False, sharey=True
    )
    for ax, (stem, rows) in zip(axes[0], data):
        x = [r["axis_value"] for r in rows]
        ax.plot(x, [r["vlc_usage_ratio"] for r in rows], "o-")
        dp = dp_from_stem(stem)
        ax.set_title(f"d_P = {dp:g} m" if dp is not None else stem)
        ax.set_xlabel(_axis_label(rows))
        ax.set_ylim(0.0, 1.0)
    axes[0][0].set_ylabel("VLC usage ratio")
    fig.tight_layout()
    _save(fig, out_path)
    return fig


def render_capacity_comparison(paths: Sequence[str], out_path: str):
    """Per-band and selection capacities versus distance.

    Files are grouped into panels by their inter-pair distance; within a
    panel each orientation policy contributes a color and each strategy a
    line style.
    """
    ordered = _sorted_inputs(paths)
    panels: dict = {}
    for path in ordered:
        stem = stem_of(path)
        dp = dp_from_stem(stem)
        panels.setdefault(dp, []).append((stem, load_rows(path)))
    fig, axes = plt.subplots(
        1, len(panels), figsize=(4.2 * len(panels), 3.4), squeeze=False, sharey=True
    )
    for ax, (dp, groups) in zip(axes[0], panels.items()):
        for stem, rows in groups:
            policy = policy_from_stem(stem)
            color = _POLICY_COLORS.get(policy)
            x = [r["axis_value"] for r in rows]
            for column, label, style in _STRATEGY_STYLES:
                name = f"{policy} {label}" if policy else label
                ax.plot(
                    x, [r[column] / MBPS for r in rows], style, color=color, label=name
                )
            ax.set_xlabel(_axis_label(rows))
        ax.set_title(f"d_P = {dp:g} m" if dp is not None else "capacity")
    axes[0][0].set_ylabel("mean capacity (Mbit/s)")
    axes[0][0].legend(fontsize=7)
    fig.tight_layout()
    _save(fig, out_path)
    return fig


_RENDERERS = {
    "angle_capacity": render_angle_capacity,
    "usage_ratio": render_usage_ratio,
    "capacity_comparison": render_capacity_comparison,
}


def render_figure(kind: str, paths: Sequence[str], out_path: str):
    """Dispatch to one of the figure kinds; validates before writing."""
    if kind not in _RENDERERS:
        raise SchemaError(f"unknown figure kind {kind!r}; choose from {FIGURE_KINDS}")
    if not paths:
        raise SchemaError("at least one input CSV is required")
    return _RENDERERS[kind](paths, out_path)
