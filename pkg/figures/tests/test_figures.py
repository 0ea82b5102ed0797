import math

import pytest

from rfvlc_figures import SchemaError, render_figure
from rfvlc_figures.cli import main
from rfvlc_figures.figures import (
    FIGURE_KINDS,
    render_angle_capacity,
    render_capacity_comparison,
    render_usage_ratio,
)

ANGLES = [-90.0, -60.0, -30.0, 0.0, 30.0, 60.0, 90.0]
DISTANCES = [1.0, 5.0, 10.0]


def angle_points():
    points = []
    for angle in ANGLES:
        rf = 2.0e8
        vlc = 3.2e8 * max(0.0, 1.0 - abs(angle) / 90.0)
        usage = 1.0 if vlc > rf else 0.0
        points.append((angle, rf, vlc, usage))
    return points


def distance_points(scale, usage_level):
    return [
        (d, scale * 2.0e8 / d, scale * 3.0e8 / d**2, usage_level) for d in DISTANCES
    ]


def lines_by_label(ax):
    return {line.get_label(): line for line in ax.get_lines()}


def test_angle_capacity_renders_panel(write_export, tmp_path):
    path = write_export("angle_sweep_phi.csv", "phi", angle_points())
    out = tmp_path / "angle.png"
    fig = render_angle_capacity([path], str(out))
    assert out.exists() and out.stat().st_size > 0
    assert len(fig.axes) == 1
    lines = lines_by_label(fig.axes[0])
    assert {"RF only", "VLC only", "selection"} <= set(lines)
    assert list(lines["selection"].get_xdata()) == ANGLES
    rf = lines["RF only"].get_ydata()
    vlc = lines["VLC only"].get_ydata()
    hybrid = lines["selection"].get_ydata()
    for r, v, h in zip(rf, vlc, hybrid):
        assert h == pytest.approx(max(r, v))
        assert h >= r and h >= v
    assert fig.axes[0].get_xlabel() == "transmitter angle phi (deg)"


def test_usage_ratio_panels_sorted_and_scaled(write_export, tmp_path):
    paths = [
        write_export("usage_ratio_dp25.csv", "d_tr", distance_points(1.0, 0.15)),
        write_export("usage_ratio_dp2.csv", "d_tr", distance_points(1.0, 0.65)),
        write_export("usage_ratio_dp10.csv", "d_tr", distance_points(1.0, 0.35)),
    ]
    out = tmp_path / "usage.png"
    fig = render_usage_ratio(paths, str(out))
    assert out.exists()
    assert [ax.get_title() for ax in fig.axes] == [
        "d_P = 2 m",
        "d_P = 10 m",
        "d_P = 25 m",
    ]
    means = []
    for ax in fig.axes:
        ydata = ax.get_lines()[0].get_ydata()
        assert all(0.0 <= y <= 1.0 for y in ydata)
        assert ax.get_ylim() == (0.0, 1.0)
        means.append(sum(ydata) / len(ydata))
    assert means == sorted(means, reverse=True)


def test_capacity_comparison_grouped_by_spacing(write_export, tmp_path):
    paths = []
    for dp in (2, 10, 25):
        for policy, scale in (("optimal", 1.0), ("random", 0.4)):
            name = f"capacity_comparison_{policy}_dp{dp}.csv"
            paths.append(write_export(name, "d_tr", distance_points(scale, 0.5)))
    out = tmp_path / "comparison.png"
    fig = render_capacity_comparison(paths, str(out))
    assert out.exists()
    assert len(fig.axes) == 3
    for ax in fig.axes:
        lines = lines_by_label(ax)
        assert len(ax.get_lines()) == 6
        for policy in ("optimal", "random"):
            rf = lines[f"{policy} RF only"].get_ydata()
            vlc = lines[f"{policy} VLC only"].get_ydata()
            hybrid = lines[f"{policy} selection"].get_ydata()
            for r, v, h in zip(rf, vlc, hybrid):
                assert h >= r and h >= v
                assert math.isfinite(h)


def test_render_is_byte_stable(write_export, tmp_path):
    path = write_export("angle_sweep_psi.csv", "psi", angle_points())
    out_a = tmp_path / "first.png"
    out_b = tmp_path / "second.png"
    render_figure("angle_capacity", [path], str(out_a))
    render_figure("angle_capacity", [path], str(out_b))
    assert out_a.read_bytes() == out_b.read_bytes()


def test_invalid_input_writes_no_file(tmp_path):
    bad = tmp_path / "usage_ratio_dp2.csv"
    bad.write_text(
        "axis_name,axis_value,mean_capacity_rf_bps,mean_capacity_vlc_bps,"
        "mean_capacity_hybrid_bps,vlc_usage_ratio,num_drops,seed\n",
        encoding="utf-8",
    )
    out = tmp_path / "usage.png"
    with pytest.raises(SchemaError, match="no data rows"):
        render_figure("usage_ratio", [str(bad)], str(out))
    assert not out.exists()


def test_render_figure_rejects_bad_requests(write_export, tmp_path):
    path = write_export("angle_sweep_phi.csv", "phi", angle_points())
    out = tmp_path / "x.png"
    with pytest.raises(SchemaError, match="unknown figure kind"):
        render_figure("spectrogram", [path], str(out))
    with pytest.raises(SchemaError, match="at least one"):
        render_figure("angle_capacity", [], str(out))
    assert set(FIGURE_KINDS) == {
        "angle_capacity",
        "usage_ratio",
        "capacity_comparison",
    }


def test_cli_renders_and_reports(write_export, tmp_path, capsys):
    path = write_export("angle_sweep_phi.csv", "phi", angle_points())
    out = tmp_path / "cli.png"
    assert main(["angle_capacity", path, "--out", str(out)]) == 0
    assert out.exists()
    assert str(out) in capsys.readouterr().out


def test_cli_reports_schema_error(tmp_path, capsys):
    bad = tmp_path / "broken.csv"
    bad.write_text("axis_name,axis_value\nphi,0.0\n", encoding="utf-8")
    out = tmp_path / "cli.png"
    assert main(["usage_ratio", str(bad), "--out", str(out)]) == 1
    assert "missing column" in capsys.readouterr().err
    assert not out.exists()
