"""Distance-limited betweenness and its brute-force oracle.

The k-betweenness of ``i`` sums, over node pairs ``(j, l)`` with
``j != i != l`` whose geodesic distance is at most ``cutoff``, the
fraction of shortest ``j``-``l`` paths passing through ``i``. Ties are
unweighted: run these on a thresholded graph.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import GraphTooLargeError, ValidationError
from .graph import Graph

ORACLE_MAX_NODES = 12


class CountConvention(str, Enum):
    UNORDERED = "unordered-pairs"
    ORDERED = "ordered-pairs"


@dataclass(frozen=True)
class BetweennessParams:
    """``cutoff=None`` means unbounded (classic betweenness).

    ``count_convention`` defaults to whatever the graph requires:
    unordered pairs for undirected graphs, ordered pairs for directed.
    """

    cutoff: Optional[int] = 3
    count_convention: Optional[CountConvention] = None

    def __post_init__(self):
        if self.cutoff is not None:
            if isinstance(self.cutoff, bool) or not isinstance(self.cutoff, int) or self.cutoff < 1:
                raise ValidationError(f"cutoff must be a positive integer or None, got {self.cutoff!r}")
        if self.count_convention is not None:
            object.__setattr__(self, "count_convention", CountConvention(self.count_convention))

    def convention_for(self, g: Graph) -> CountConvention:
        expected = CountConvention.ORDERED if g.directed else CountConvention.UNORDERED
        if self.count_convention is not None and self.count_convention is not expected:
            raise ValidationError(
                f"{self.count_convention.value} is not valid for a "
                f"{'directed' if g.directed else 'undirected'} graph"
            )
        return expected


def parse_cutoff(value) -> Optional[int]:
    """``"inf"``/``None`` -> unbounded, otherwise a positive int."""
    if value is None:
        return None
    if isinstance(value, str):
        if value.strip().lower() in ("inf", "infinity", "unbounded"):
            return None
        try:
            value = int(value)
        except ValueError:
            raise ValidationError(f"cutoff must be a positive integer or 'inf', got {value!r}") from None
    BetweennessParams(cutoff=value)
    return value


def _source_dependencies(adj, s, cutoff):
    """Dependencies of ``s`` on every node, BFS truncated at ``cutoff``."""
    n = len(adj)
    dist = [-1] * n
    sigma = [0] * n
    preds = [[] for _ in range(n)]
    dist[s] = 0
    sigma[s] = 1
    order = []
    queue = deque([s])
    while queue:
        v = queue.popleft()
        order.append(v)
        dv = dist[v]
        if cutoff is not None and dv >= cutoff:
            continue
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dv + 1
                queue.append(w)
            if dist[w] == dv + 1:
                sigma[w] += sigma[v]
                preds[w].append(v)
    delta = [0.0] * n
    for w in reversed(order):
        coeff = (1.0 + delta[w]) / sigma[w]
        for v in preds[w]:
            delta[v] += sigma[v] * coeff
    delta[s] = 0.0
    return delta


def _chunk_dependencies(adj, sources, cutoff):
    return [_source_dependencies(adj, s, cutoff) for s in sources]


def k_betweenness(g: Graph, params: BetweennessParams = BetweennessParams(), workers: int = 1) -> list[float]:
    """Exact distance-limited betweenness for every node, by index.

    Shortest paths are counted with a breadth-first search from each
    source that stops expanding at depth ``cutoff``, followed by
    reverse-order dependency accumulation. Self-loops and weights are
    ignored. Undirected scores count each unordered pair once.

    With ``workers > 1`` sources are spread over processes; per-source
    dependency vectors are still added in source order, so the result is
    bit-identical to the sequential one.
    """
    convention = params.convention_for(g)
    adj = [g.successors(i) for i in range(g.n)]
    sources = list(range(g.n))
    if workers > 1 and g.n > 1:
        size = -(-g.n // workers)
        chunks = [sources[k:k + size] for k in range(0, g.n, size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_chunk_dependencies, [adj] * len(chunks), chunks, [params.cutoff] * len(chunks))
            per_source = [d for part in parts for d in part]
    else:
        per_source = (_source_dependencies(adj, s, params.cutoff) for s in sources)

    scores = [0.0] * g.n
    for delta in per_source:
        for v in range(g.n):
            scores[v] += delta[v]
    if convention is CountConvention.UNORDERED:
        scores = [x / 2.0 for x in scores]
    return scores


def betweenness_oracle(g: Graph, params: BetweennessParams = BetweennessParams()) -> list[float]:
    """Brute-force k-betweenness by explicit path enumeration.

    For every pair, simple paths of length 1, 2, ... up to the cutoff
    (or ``n - 1``) are enumerated until some reach the target; those are
    the geodesics and each interior node is credited its share. Shares
    no distances or path counts with :func:`k_betweenness`.
    """
    if g.n > ORACLE_MAX_NODES:
        raise GraphTooLargeError(f"oracle limited to {ORACLE_MAX_NODES} nodes, graph has {g.n}")
    convention = params.convention_for(g)
    n = g.n
    adj = [set(g.successors(i)) for i in range(n)]
    limit = n - 1 if params.cutoff is None else min(params.cutoff, n - 1)

    def paths_of_length(j, l, length):
        found = []

        def extend(path, on_path):
            v = path[-1]
            if len(path) - 1 == length:
                if v == l:
                    found.append(tuple(path))
                return
            for w in adj[v]:
                if w in on_path:
                    continue
                # endpoint may only appear as the final vertex
                if w == l and len(path) != length:
                    continue
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                on_path.discard(w)
                path.pop()

        extend([j], {j})
        return found

    scores = [0.0] * n
    for j in range(n):
        for l in range(n):
            if j == l:
                continue
            if convention is CountConvention.UNORDERED and l < j:
                continue
            for length in range(1, limit + 1):
                geodesics = paths_of_length(j, l, length)
                if geodesics:
                    for path in geodesics:
                        for v in path[1:-1]:
                            scores[v] += 1.0 / len(geodesics)
                    break
    return scores
