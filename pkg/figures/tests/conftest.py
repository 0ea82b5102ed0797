import csv

import pytest

COLUMNS = (
    "axis_name",
    "axis_value",
    "mean_capacity_rf_bps",
    "mean_capacity_vlc_bps",
    "mean_capacity_hybrid_bps",
    "vlc_usage_ratio",
    "num_drops",
    "seed",
)


@pytest.fixture
def write_export(tmp_path):
    """Write a synthetic CSV in the simulator's export format."""

    def writer(name, axis_name, points):
        path = tmp_path / name
        with open(path, "w", encoding="utf-8", newline="") as fh:
            out = csv.writer(fh, lineterminator="\n")
            out.writerow(COLUMNS)
            for axis_value, rf, vlc, usage in points:
                hybrid = max(rf, vlc)
                out.writerow(
                    [axis_name, repr(float(axis_value)), repr(float(rf)),
                     repr(float(vlc)), repr(float(hybrid)), repr(float(usage)),
                     100, 7]
                )
        return str(path)

    return writer
