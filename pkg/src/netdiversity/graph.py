"""Weighted directed graphs, edge-list I/O and thresholding.

Nodes carry an external string label and a dense internal index
``0..n-1`` assigned in order of first appearance. Graphs are immutable
once built; thresholding returns a new graph.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Union

from .errors import NodeLookupError, ParseError, ValidationError

HEADER = "src,dst,weight"


class Graph:
    """Immutable weighted graph with optional self-loops.

    Undirected graphs store each tie in both directions with equal
    weight, so every query can treat them as symmetric directed graphs.
    Equality compares labels and weights, not internal indices.
    """

    __slots__ = ("_labels", "_index", "_out", "_directed")

    def __init__(self, labels, adjacency, directed=True):
        labels = tuple(str(lab) for lab in labels)
        if len(set(labels)) != len(labels):
            raise ValidationError("node labels must be unique")
        if len(adjacency) != len(labels):
            raise ValidationError("adjacency size does not match node count")
        n = len(labels)
        out = []
        for i, row in enumerate(adjacency):
            clean = {}
            for j, w in sorted(row.items()):
                if not 0 <= j < n:
                    raise ValidationError(f"edge endpoint index {j} out of range")
                w = float(w)
                if not math.isfinite(w) or w < 0:
                    raise ValidationError(f"invalid weight {w} on edge {labels[i]}->{labels[j]}")
                if w > 0:
                    clean[j] = w
            out.append(clean)
        if not directed:
            for i, row in enumerate(out):
                for j, w in row.items():
                    if out[j].get(i) != w:
                        raise ValidationError("undirected adjacency must be symmetric")
        self._labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._out = tuple(out)
        self._directed = bool(directed)

    @classmethod
    def from_edges(cls, edges, directed=True, nodes=()):
        """Build a graph from ``(src, dst, weight)`` triples.

        Duplicate ordered pairs are summed. For undirected graphs the tie
        ``{a, b}`` takes ``max(sum(a->b), sum(b->a))`` so a mirrored export
        of the same edge is not double counted. Zero-weight triples only
        register their endpoints as nodes.
        """
        index = {}
        labels = []

        def intern(label):
            label = str(label)
            if label not in index:
                index[label] = len(labels)
                labels.append(label)
            return index[label]

        for lab in nodes:
            intern(lab)
        sums = {}
        for src, dst, w in edges:
            i, j = intern(src), intern(dst)
            w = float(w)
            if not math.isfinite(w):
                raise ValidationError(f"non-finite weight on edge {src}->{dst}")
            if w < 0:
                raise ValidationError(f"negative weight {w} on edge {src}->{dst}")
            if w > 0:
                sums[i, j] = sums.get((i, j), 0.0) + w
        adjacency = [dict() for _ in labels]
        for (i, j), w in sums.items():
            if directed:
                adjacency[i][j] = w
            else:
                w = max(w, sums.get((j, i), 0.0))
                adjacency[i][j] = w
                adjacency[j][i] = w
        return cls(labels, adjacency, directed)

    @property
    def n(self):
        return len(self._labels)

    @property
    def directed(self):
        return self._directed

    @property
    def labels(self):
        return self._labels

    @property
    def edge_count(self):
        """Ordered pairs for directed graphs, unordered pairs otherwise."""
        if self._directed:
            return sum(len(row) for row in self._out)
        return sum(1 for i, row in enumerate(self._out) for j in row if j >= i)

    @property
    def self_loops_present(self):
        return any(i in row for i, row in enumerate(self._out))

    def index(self, label):
        try:
            return self._index[str(label)]
        except KeyError:
            raise NodeLookupError(label) from None

    def label(self, i):
        return self._labels[i]

    def __contains__(self, label):
        return str(label) in self._index

    def weight(self, i, j):
        return self._out[i].get(j, 0.0)

    def neighbors(self, i, include_self=False):
        """``(j, weight)`` pairs by ascending index."""
        row = self._out[i]
        if include_self:
            return list(row.items())
        return [(j, w) for j, w in row.items() if j != i]

    def successors(self, i):
        """Non-self neighbor indices, ascending."""
        return [j for j in self._out[i] if j != i]

    def out_weight(self, i, include_self=True):
        return sum(w for j, w in self._out[i].items() if include_self or j != i)

    def edges(self) -> Iterator[tuple[int, int, float]]:
        """Yield ``(i, j, w)``; undirected ties appear once with ``i <= j``."""
        for i, row in enumerate(self._out):
            for j, w in row.items():
                if self._directed or j >= i:
                    yield i, j, w

    def labelled_edges(self):
        """``{(src, dst): w}``; undirected keys are label-sorted."""
        out = {}
        for i, j, w in self.edges():
            a, b = self._labels[i], self._labels[j]
            if not self._directed and b < a:
                a, b = b, a
            out[a, b] = w
        return out

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._directed == other._directed
            and set(self._labels) == set(other._labels)
            and self.labelled_edges() == other.labelled_edges()
        )

    def __hash__(self):
        return hash((self._directed, frozenset(self._labels), frozenset(self.labelled_edges().items())))

    def __repr__(self):
        kind = "directed" if self._directed else "undirected"
        return f"<Graph {kind} n={self.n} edges={self.edge_count}>"


def out_neighbors(g: Graph, node, include_self=False):
    """Label-level neighbor query: ``[(label, weight), ...]`` by ascending index."""
    i = g.index(node)
    return [(g.label(j), w) for j, w in g.neighbors(i, include_self)]


def _rows(text):
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line:
            yield lineno, line


def load_edge_list(source: Union[str, bytes, io.IOBase], directed=False) -> Graph:
    """Parse a ``src,dst[,weight]`` edge list.

    ``source`` may be ``str``, ``bytes`` or a readable file object.
    A leading ``src,dst,weight`` (or ``src,dst``) header is skipped; the
    weight column defaults to 1.0.

    Raises
    ------
    ParseError
        Wrong column count, empty label or non-numeric weight.
    ValidationError
        Negative weight or no rows at all.
    """
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    if source.startswith("\ufeff"):
        source = source[1:]

    triples = []
    first = True
    for lineno, line in _rows(source):
        fields = [f.strip() for f in line.split(",")]
        if first:
            first = False
            if [f.lower() for f in fields] in (["src", "dst", "weight"], ["src", "dst"]):
                continue
        if len(fields) not in (2, 3):
            raise ParseError(f"expected 2 or 3 columns, got {len(fields)}", lineno)
        src, dst = fields[0], fields[1]
        if not src or not dst:
            raise ParseError("empty node label", lineno)
        weight = 1.0
        if len(fields) == 3:
            try:
                weight = float(fields[2])
            except ValueError:
                raise ParseError(f"non-numeric weight {fields[2]!r}", lineno) from None
            if math.isnan(weight) or math.isinf(weight):
                raise ParseError(f"non-finite weight {fields[2]!r}", lineno)
            if weight < 0:
                raise ValidationError(f"line {lineno}: negative weight {weight}")
        triples.append((src, dst, weight))
    if not triples:
        raise ValidationError("empty edge list")
    return Graph.from_edges(triples, directed=directed)


def serialize_edge_list(g: Graph) -> str:
    """Inverse of :func:`load_edge_list`.

    Edges are sorted by ``(src, dst)`` label and weights written with
    ``repr`` so a reload is bit-exact. Nodes without any tie are written
    as zero-weight self rows, which the loader keeps as isolated nodes.
    """
    rows = []
    touched = set()
    for (src, dst), w in g.labelled_edges().items():
        rows.append((src, dst, w))
        touched.update((src, dst))
    rows.extend((lab, lab, 0.0) for lab in g.labels if lab not in touched)
    rows.sort(key=lambda r: (r[0], r[1]))
    lines = [HEADER] + [f"{s},{d},{w!r}" for s, d, w in rows]
    return "\n".join(lines) + "\n"


class ThresholdMode(str, Enum):
    FILTER_WEIGHTED = "filter-weighted"
    BINARIZE = "binarize"


@dataclass(frozen=True)
class ThresholdPolicy:
    theta: float = 0.0
    mode: ThresholdMode = ThresholdMode.FILTER_WEIGHTED

    def __post_init__(self):
        object.__setattr__(self, "mode", ThresholdMode(self.mode))
        object.__setattr__(self, "theta", float(self.theta))
        if not math.isfinite(self.theta) or self.theta < 0:
            raise ValidationError(f"threshold must be a non-negative number, got {self.theta}")


def apply_threshold(g: Graph, policy: ThresholdPolicy) -> Graph:
    """Drop ties with weight below ``policy.theta``.

    ``filter-weighted`` keeps surviving weights; ``binarize`` sets them
    to 1. The node set is never changed.
    """
    binarize = policy.mode is ThresholdMode.BINARIZE
    adjacency = []
    for i in range(g.n):
        adjacency.append(
            {j: (1.0 if binarize else w) for j, w in g.neighbors(i, include_self=True) if w >= policy.theta}
        )
    return Graph(g.labels, adjacency, g.directed)


def graph_from_pairs(pairs: Iterable[tuple], directed=False, nodes=()) -> Graph:
    """Unit-weight graph from ``(src, dst)`` pairs."""
    return Graph.from_edges(((a, b, 1.0) for a, b in pairs), directed=directed, nodes=nodes)
