"""Correlation of metric columns with node performance, and network summaries."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .errors import DegenerateInputError, ParseError, ValidationError
from .formatting import csv_text, dump_json
from .graph import Graph, ThresholdPolicy, apply_threshold
from .metrics import METRIC_COLUMNS, MetricReport


def _is_missing(x):
    return x is None or (isinstance(x, float) and math.isnan(x))


@dataclass(frozen=True)
class PerformanceVector:
    """Outcome value per node label. Absent nodes count as missing."""

    entries: Mapping[str, float] = field(default_factory=dict)

    def get(self, node):
        return self.entries.get(str(node))

    def check_nodes(self, g: Graph):
        unknown = sorted(k for k in self.entries if k not in g)
        if unknown:
            raise ValidationError(f"performance vector names nodes not in the graph: {', '.join(unknown[:5])}")

    def to_csv(self):
        return csv_text(("node", "value"), ([k, v] for k, v in self.entries.items()))


def load_performance(source, graph: Optional[Graph] = None) -> PerformanceVector:
    """Read a ``node,value`` CSV (header optional)."""
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    entries = {}
    first = True
    for lineno, line in enumerate(source.splitlines(), start=1):
        line = line.strip().lstrip("\ufeff")
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if first:
            first = False
            if [p.lower() for p in parts] == ["node", "value"]:
                continue
        if len(parts) != 2 or not parts[0]:
            raise ParseError(f"expected 'node,value', got {line!r}", lineno)
        try:
            value = float(parts[1])
        except ValueError:
            raise ParseError(f"non-numeric value {parts[1]!r}", lineno) from None
        if not math.isfinite(value):
            raise ParseError(f"non-finite value {parts[1]!r}", lineno)
        if parts[0] in entries:
            raise ParseError(f"duplicate node {parts[0]!r}", lineno)
        entries[parts[0]] = value
    perf = PerformanceVector(entries)
    if graph is not None:
        perf.check_nodes(graph)
    return perf


@dataclass(frozen=True)
class CorrelationResult:
    r: float
    n_used: int


def pearson(xs: Sequence, ys: Sequence) -> CorrelationResult:
    """Product-moment correlation after pairwise deletion of missing values.

    ``None`` and NaN count as missing in either sequence. Raises
    :class:`DegenerateInputError` with reason ``insufficient-pairs`` (fewer
    than two pairs) or ``zero-variance``.
    """
    if len(xs) != len(ys):
        raise ValueError("sequences must be aligned (equal length)")
    pairs = [(float(x), float(y)) for x, y in zip(xs, ys) if not (_is_missing(x) or _is_missing(y))]
    n = len(pairs)
    if n < 2:
        raise DegenerateInputError("insufficient-pairs", n)
    mx = math.fsum(x for x, _ in pairs) / n
    my = math.fsum(y for _, y in pairs) / n
    sxx = math.fsum((x - mx) ** 2 for x, _ in pairs)
    syy = math.fsum((y - my) ** 2 for _, y in pairs)
    if sxx == 0 or syy == 0:
        raise DegenerateInputError("zero-variance", n)
    sxy = math.fsum((x - mx) * (y - my) for x, y in pairs)
    r = sxy / (math.sqrt(sxx) * math.sqrt(syy))
    return CorrelationResult(max(-1.0, min(1.0, r)), n)


@dataclass(frozen=True)
class CorrelationRow:
    metric: str
    r: Optional[float]
    n_used: int
    status: str  # "ok" or the DegenerateInputError reason


@dataclass(frozen=True)
class CorrelationTable:
    rows: tuple

    def __getitem__(self, metric) -> CorrelationRow:
        for row in self.rows:
            if row.metric == metric:
                return row
        raise KeyError(metric)

    def to_csv(self):
        return csv_text(("metric", "r", "n_used", "status"), ([r.metric, r.r, r.n_used, r.status] for r in self.rows))

    def to_json(self):
        return dump_json({"correlations": [{"metric": r.metric, "r": r.r, "n_used": r.n_used, "status": r.status} for r in self.rows]})


def correlate_report(report: MetricReport, perf: PerformanceVector) -> CorrelationTable:
    """One correlation row per metric column; degenerate columns are reported, not raised."""
    ys = [perf.get(r.node) for r in report.rows]
    rows = []
    for metric in METRIC_COLUMNS:
        xs = [getattr(r, metric) for r in report.rows]
        try:
            res = pearson(xs, ys)
        except DegenerateInputError as exc:
            rows.append(CorrelationRow(metric, None, exc.n_used, exc.reason))
        else:
            rows.append(CorrelationRow(metric, res.r, res.n_used, "ok"))
    return CorrelationTable(tuple(rows))


@dataclass(frozen=True)
class NetworkSummary:
    """Whole-network statistics.

    ``mean_geodesic_distance`` is ``distance_sum / reachable_pairs`` over
    ordered pairs ``j != l`` with a path; ``None`` when there are none.
    ``diameter_capped`` is the largest such distance if it is within the
    cutoff, ``math.inf`` if it exceeds it, ``None`` without reachable pairs.
    """

    n: int
    mean_out_degree: float
    mean_self_weight_share: Optional[float]
    mean_geodesic_distance: Optional[float]
    diameter_capped: Optional[float]
    reachable_pairs: int
    distance_sum: int
    cutoff: Optional[int] = 3

    def as_dict(self):
        return {
            "n": self.n,
            "mean_out_degree": self.mean_out_degree,
            "mean_self_weight_share": self.mean_self_weight_share,
            "mean_geodesic_distance": self.mean_geodesic_distance,
            "diameter_capped": self.diameter_capped,
            "reachable_pairs": self.reachable_pairs,
            "distance_sum": self.distance_sum,
            "cutoff": "inf" if self.cutoff is None else self.cutoff,
        }

    def to_json(self):
        return dump_json(self.as_dict())

    def to_csv(self):
        d = self.as_dict()
        return csv_text(tuple(d), [list(d.values())])


def _bfs_distances(g: Graph, s: int):
    dist = {s: 0}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for w in g.successors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def summarize(g: Graph, cutoff: Optional[int] = 3, policy: ThresholdPolicy = ThresholdPolicy()) -> NetworkSummary:
    """Degree, self-weight and path-length statistics of the thresholded graph."""
    weighted = apply_threshold(g, ThresholdPolicy(policy.theta))
    t = apply_threshold(g, policy)
    n = t.n
    mean_degree = sum(len(t.successors(i)) for i in range(n)) / n if n else 0.0

    shares = []
    for i in range(n):
        total = weighted.out_weight(i)
        if total > 0:
            shares.append(weighted.weight(i, i) / total)
    mean_share = math.fsum(shares) / len(shares) if shares else None

    pairs = 0
    dist_sum = 0
    longest = 0
    for s in range(n):
        for v, d in _bfs_distances(t, s).items():
            if v != s:
                pairs += 1
                dist_sum += d
                longest = max(longest, d)
    if pairs:
        mean_dist = dist_sum / pairs
        diameter = longest if cutoff is None or longest <= cutoff else math.inf
    else:
        mean_dist = None
        diameter = None
    return NetworkSummary(n, mean_degree, mean_share, mean_dist, diameter, pairs, dist_sum, cutoff)
