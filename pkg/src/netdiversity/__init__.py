"""Tie-strength diversity, distance-limited betweenness and structural-hole metrics."""

__version__ = "0.1.0"

from .betweenness import BetweennessParams, CountConvention, betweenness_oracle, k_betweenness, parse_cutoff
from .errors import (
    DegenerateInputError,
    DegenerateNodeError,
    GraphTooLargeError,
    NetDiversityError,
    NodeLookupError,
    ParseError,
    ValidationError,
)
from .fixtures import broker_specialist, complete, fig1, generate_fixture, random_graph, ring, star
from .graph import (
    Graph,
    ThresholdMode,
    ThresholdPolicy,
    apply_threshold,
    load_edge_list,
    out_neighbors,
    serialize_edge_list,
)
from .metrics import (
    MetricReport,
    NodeMetrics,
    ProportionalWeights,
    burt_constraint,
    compute_report,
    local_clustering,
    normalized_entropy,
    proportional_weights,
    self_weight_share,
)
from .stats import (
    CorrelationResult,
    CorrelationTable,
    NetworkSummary,
    PerformanceVector,
    correlate_report,
    load_performance,
    pearson,
    summarize,
)
