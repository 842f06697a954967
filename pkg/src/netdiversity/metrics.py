"""Per-node diversity metrics and the combined metric report.

Tie-strength diversity (normalized entropy, self-weight share) reads the
weighted graph. Topological metrics (k-betweenness, constraint,
clustering, degree) read the thresholded graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import Optional

from .betweenness import BetweennessParams, k_betweenness
from .errors import DegenerateNodeError
from .formatting import csv_text, dump_json, fmt_float
from .graph import Graph, ThresholdMode, ThresholdPolicy, apply_threshold

REPORT_COLUMNS = ("node", "degree", "self_weight_share", "entropy", "k_betweenness", "constraint", "clustering")
METRIC_COLUMNS = ("entropy", "k_betweenness", "constraint", "clustering")


@dataclass(frozen=True)
class ProportionalWeights:
    focal: str
    entries: tuple  # ((label, p), ...) with every p > 0

    @property
    def k(self):
        return len(self.entries)

    def as_dict(self):
        return dict(self.entries)


def _row_shares(g: Graph, i: int, include_self: bool):
    row = g.neighbors(i, include_self)
    total = math.fsum(w for _, w in row)
    if total <= 0:
        return None
    return [(j, w / total) for j, w in row]


def proportional_weights(g: Graph, node, include_self=True) -> ProportionalWeights:
    """Row-normalized tie strengths of ``node``.

    ``include_self`` decides whether a reflexive tie is one of the
    contacts. Raises :class:`DegenerateNodeError` when the selected ties
    carry no weight.
    """
    i = g.index(node)
    shares = _row_shares(g, i, include_self)
    if shares is None:
        raise DegenerateNodeError(f"node {node!r} has no outgoing weight")
    return ProportionalWeights(g.label(i), tuple((g.label(j), p) for j, p in shares))


def entropy_of_weights(weights, base=math.e) -> Optional[float]:
    """Shannon entropy of a positive weight vector over ``log(k)``.

    ``None`` when fewer than two weights are given. Equal weights give
    exactly 1.0.
    """
    weights = [float(w) for w in weights if w > 0]
    k = len(weights)
    if k <= 1:
        return None
    if all(w == weights[0] for w in weights):
        return 1.0
    total = math.fsum(weights)
    h = -math.fsum((w / total) * math.log(w / total, base) for w in weights)
    return min(1.0, max(0.0, h / math.log(k, base)))


def normalized_entropy(g: Graph, node, include_self=True, base=math.e) -> Optional[float]:
    """Normalized entropy of ``node``'s tie strengths, or ``None`` if it has at most one contact.

    The result does not depend on ``base``; it is exposed so that can be
    checked.
    """
    i = g.index(node)
    return entropy_of_weights([w for _, w in g.neighbors(i, include_self)], base)


def self_weight_share(g: Graph, node) -> float:
    """Share of the node's total outgoing weight kept on its own self-loop (0 when it has none)."""
    i = g.index(node)
    total = g.out_weight(i, include_self=True)
    if total <= 0:
        return 0.0
    return g.weight(i, i) / total


def burt_constraint(g: Graph, node) -> Optional[float]:
    """Burt's aggregate constraint.

    ``sum_j (p_ij + sum_q p_iq * p_qj) ** 2`` over the non-self contacts
    ``j`` of ``node``, with ``q`` ranging over its other contacts.
    Proportions come from out-ties with self-loops excluded. ``None`` if
    the node has no non-self contacts.
    """
    return _constraint(g, g.index(node), _ShareRows(g))


class _ShareRows(dict):
    """Lazily computed non-self proportion rows, keyed by node index."""

    def __init__(self, g):
        super().__init__()
        self.g = g

    def __missing__(self, i):
        shares = _row_shares(self.g, i, include_self=False)
        row = self[i] = dict(shares) if shares else {}
        return row


def _constraint(g, i, rows):
    p_i = rows[i]
    if not p_i:
        return None
    indirect = {j: [] for j in p_i}
    for q, p_iq in p_i.items():
        for j, p_qj in rows[q].items():
            if j != i and j != q and j in indirect:
                indirect[j].append(p_iq * p_qj)
    return math.fsum((p_ij + math.fsum(indirect[j])) ** 2 for j, p_ij in p_i.items())


def local_clustering(g: Graph, node) -> Optional[float]:
    """Fraction of ordered neighbor pairs ``(u, v)`` with a tie ``u -> v``.

    For undirected graphs this is the usual triangle ratio. ``None`` for
    nodes with fewer than two non-self neighbors.
    """
    i = g.index(node)
    nbrs = g.successors(i)
    k = len(nbrs)
    if k < 2:
        return None
    members = set(nbrs)
    links = sum(1 for u in nbrs for v in g.successors(u) if v in members and v != u)
    return links / (k * (k - 1))


@dataclass(frozen=True)
class NodeMetrics:
    node: str
    degree: int
    self_weight_share: float
    entropy: Optional[float]
    k_betweenness: float
    constraint: Optional[float]
    clustering: Optional[float]

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class MetricReport:
    rows: tuple
    cutoff: Optional[int] = 3
    theta: float = 0.0
    threshold_mode: str = ThresholdMode.FILTER_WEIGHTED.value
    include_self: bool = True
    directed: bool = False

    def __len__(self):
        return len(self.rows)

    def row(self, node) -> NodeMetrics:
        for r in self.rows:
            if r.node == str(node):
                return r
        raise KeyError(node)

    def column(self, name) -> dict:
        """``{node: value}`` for one report column; missing values are ``None``."""
        if name not in REPORT_COLUMNS[1:]:
            raise KeyError(f"unknown report column {name!r}")
        return {r.node: getattr(r, name) for r in self.rows}

    def to_csv(self) -> str:
        return csv_text(REPORT_COLUMNS, ([getattr(r, c) for c in REPORT_COLUMNS] for r in self.rows))

    def to_json(self) -> str:
        return dump_json(
            {
                "params": {
                    "cutoff": "inf" if self.cutoff is None else self.cutoff,
                    "theta": self.theta,
                    "threshold_mode": self.threshold_mode,
                    "include_self": self.include_self,
                    "directed": self.directed,
                },
                "rows": [r.as_dict() for r in self.rows],
            }
        )

    def __str__(self):
        return "\n".join(f"{r.node}: " + " ".join(fmt_float(getattr(r, c)) for c in REPORT_COLUMNS[1:]) for r in self.rows)


def compute_report(
    g: Graph,
    policy: ThresholdPolicy = ThresholdPolicy(),
    params: BetweennessParams = BetweennessParams(),
    include_self: bool = True,
    workers: int = 1,
) -> MetricReport:
    """Every metric for every node, one row per node in index order.

    Entropy and self-weight share use the graph after dropping ties below
    ``policy.theta`` but before any binarization. Degree, k-betweenness,
    constraint and clustering use the fully thresholded graph.
    """
    weighted = apply_threshold(g, ThresholdPolicy(policy.theta, ThresholdMode.FILTER_WEIGHTED))
    topo = weighted if policy.mode is ThresholdMode.FILTER_WEIGHTED else apply_threshold(g, policy)
    btw = k_betweenness(topo, params, workers=workers)
    share_rows = _ShareRows(topo)
    rows = []
    for i, label in enumerate(g.labels):
        rows.append(
            NodeMetrics(
                node=label,
                degree=len(topo.successors(i)),
                self_weight_share=self_weight_share(weighted, label),
                entropy=normalized_entropy(weighted, label, include_self),
                k_betweenness=btw[i],
                constraint=_constraint(topo, i, share_rows),
                clustering=local_clustering(topo, label),
            )
        )
    return MetricReport(
        rows=tuple(rows),
        cutoff=params.cutoff,
        theta=policy.theta,
        threshold_mode=policy.mode.value,
        include_self=include_self,
        directed=g.directed,
    )
