"""Equal-area choropleth classification toolkit."""

from .classify import (DEFAULT_PALETTE, NO_DATA_COLOR, ClassificationResult,
                       DataRecord, build_series, classify, resolve_palette)
from .geo import (RegionGeometry, Viewport, fit_viewport, parse_geojson,
                  project, projected_area)
from .kernels import BACKEND
from .partition import (balanced_greedy, compute_breaks, dp_equal_area,
                        dp_weighted, equal_interval_breaks, error_abs,
                        find_last_break_candidates, greedy_equal_area,
                        greedy_equal_area_2, jenks_breaks, partition_stats,
                        quantile_breaks, snap_ties, weighted_objective)
from .series import (Breaks, MethodSpec, PartitionStats, SortedSeries,
                     prefix_sums, psum)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Breaks", "ClassificationResult", "DataRecord",
    "DEFAULT_PALETTE", "MethodSpec", "NO_DATA_COLOR", "PartitionStats",
    "RegionGeometry", "SortedSeries", "Viewport", "balanced_greedy",
    "build_series", "classify", "compute_breaks", "dp_equal_area",
    "dp_weighted", "equal_interval_breaks", "error_abs",
    "find_last_break_candidates", "fit_viewport", "greedy_equal_area",
    "greedy_equal_area_2", "jenks_breaks", "parse_geojson", "partition_stats",
    "prefix_sums", "project", "projected_area", "psum", "quantile_breaks",
    "resolve_palette", "snap_ties", "weighted_objective",
]
