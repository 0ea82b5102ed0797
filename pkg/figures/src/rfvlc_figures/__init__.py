"""Figure rendering for rfvlc CSV exports."""

from .figures import (
    FIGURE_KINDS,
    render_angle_capacity,
    render_capacity_comparison,
    render_figure,
    render_usage_ratio,
)
from .schema import (
    REQUIRED_COLUMNS,
    SchemaError,
    dp_from_stem,
    load_rows,
    policy_from_stem,
    stem_of,
)

__version__ = "0.1.0"
