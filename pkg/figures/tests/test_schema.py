import csv

import pytest

from rfvlc_figures import (
    REQUIRED_COLUMNS,
    SchemaError,
    dp_from_stem,
    load_rows,
    policy_from_stem,
    stem_of,
)

COLUMNS = REQUIRED_COLUMNS


def test_load_rows_parses_types(write_export):
    path = write_export(
        "angle_sweep_phi.csv", "phi",
        [(-30.0, 2.0e8, 1.5e8, 0.25), (0.0, 2.0e8, 3.1e8, 0.75)],
    )
    rows = load_rows(path)
    assert len(rows) == 2
    first = rows[0]
    assert first["axis_name"] == "phi"
    assert first["axis_value"] == -30.0
    assert isinstance(first["axis_value"], float)
    assert first["mean_capacity_hybrid_bps"] == 2.0e8
    assert first["num_drops"] == 100
    assert isinstance(first["num_drops"], int)
    assert first["seed"] == 7


def test_load_rows_preserves_column_set(write_export):
    path = write_export("usage_ratio_dp25.csv", "d_tr", [(1.0, 1e8, 9e7, 0.4)])
    rows = load_rows(path)
    assert set(rows[0]) == set(REQUIRED_COLUMNS)


def test_missing_column_is_named(tmp_path):
    path = tmp_path / "broken.csv"
    short = [c for c in COLUMNS if c != "vlc_usage_ratio"]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        out = csv.writer(fh, lineterminator="\n")
        out.writerow(short)
        out.writerow(["phi", "0.0", "1e8", "1e8", "1e8", "100", "7"])
    with pytest.raises(SchemaError, match="vlc_usage_ratio"):
        load_rows(str(path))


def test_header_only_file_is_refused(tmp_path):
    path = tmp_path / "empty.csv"
    with open(path, "w", encoding="utf-8", newline="") as fh:
        out = csv.writer(fh, lineterminator="\n")
        out.writerow(COLUMNS)
    with pytest.raises(SchemaError, match="no data rows"):
        load_rows(str(path))


def test_non_numeric_cell_is_refused(tmp_path):
    path = tmp_path / "garbled.csv"
    with open(path, "w", encoding="utf-8", newline="") as fh:
        out = csv.writer(fh, lineterminator="\n")
        out.writerow(COLUMNS)
        out.writerow(["phi", "0.0", "fast", "1e8", "1e8", "0.5", "100", "7"])
    with pytest.raises(SchemaError, match="mean_capacity_rf_bps"):
        load_rows(str(path))


def test_stem_of_strips_directory_and_suffix():
    assert stem_of("/tmp/out/usage_ratio_dp25.csv") == "usage_ratio_dp25"
    assert stem_of("angle_sweep_phi.csv") == "angle_sweep_phi"


@pytest.mark.parametrize(
    "stem, expected",
    [
        ("usage_ratio_dp2", 2.0),
        ("usage_ratio_dp25", 25.0),
        ("usage_ratio_dp2.5", 2.5),
        ("capacity_comparison_random_dp10", 10.0),
        ("angle_sweep_phi", None),
    ],
)
def test_dp_from_stem(stem, expected):
    assert dp_from_stem(stem) == expected


@pytest.mark.parametrize(
    "stem, expected",
    [
        ("capacity_comparison_optimal_dp2", "optimal"),
        ("capacity_comparison_gaussian_dp10", "gaussian"),
        ("capacity_comparison_random_dp25", "random"),
        ("usage_ratio_dp25", None),
    ],
)
def test_policy_from_stem(stem, expected):
    assert policy_from_stem(stem) == expected
