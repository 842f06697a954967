"""Deterministic graph generators used by tests, the CLI and demos."""

from __future__ import annotations

import random
import statistics
from dataclasses import dataclass
from typing import Optional

from .errors import ValidationError
from .graph import Graph, graph_from_pairs
from .stats import PerformanceVector

FIG1_EDGES = (("A", "C"), ("A", "D"), ("C", "B"), ("D", "B"), ("B", "E"))

KINDS = ("fig1", "star", "complete", "ring", "random", "broker-specialist")


def fig1(with_cd_link=False) -> Graph:
    """Five-node example: A and B both bridge C and D; B alone reaches E.

    ``with_cd_link`` adds the direct C-D tie that removes A's brokerage.
    """
    edges = FIG1_EDGES + ((("C", "D"),) if with_cd_link else ())
    return graph_from_pairs(edges, directed=False)


def _check_n(n, minimum=2):
    if isinstance(n, bool) or not isinstance(n, int) or n < minimum:
        raise ValidationError(f"n must be an integer >= {minimum}, got {n!r}")


def star(n) -> Graph:
    """Node ``0`` at the center, ``1..n-1`` as leaves."""
    _check_n(n)
    return graph_from_pairs([("0", str(i)) for i in range(1, n)], nodes=[str(i) for i in range(n)])


def complete(n, directed=False) -> Graph:
    _check_n(n)
    labels = [str(i) for i in range(n)]
    pairs = [(a, b) for a in labels for b in labels if a != b and (directed or a < b)]
    return graph_from_pairs(pairs, directed=directed, nodes=labels)


def ring(n) -> Graph:
    _check_n(n)
    return graph_from_pairs([(str(i), str((i + 1) % n)) for i in range(n)], nodes=[str(i) for i in range(n)])


def random_graph(n, p, seed, directed=False) -> Graph:
    """Erdos-Renyi style graph; each candidate tie kept with probability ``p``."""
    _check_n(n)
    if not 0 <= p <= 1:
        raise ValidationError(f"p must lie in [0, 1], got {p!r}")
    rng = random.Random(seed)
    labels = [str(i) for i in range(n)]
    pairs = []
    for i in range(n):
        for j in range(n):
            if i == j or (not directed and j < i):
                continue
            if rng.random() < p:
                pairs.append((labels[i], labels[j]))
    return graph_from_pairs(pairs, directed=directed, nodes=labels)


def planted_brokerage(groups) -> list[int]:
    """Closed-form 3-betweenness of each hub in a broker-specialist graph.

    With ``h`` fully linked hubs, hub ``i`` holding ``m`` leaves out of
    ``L`` in total routes every pair among its own leaves, every own leaf
    to another hub, and every own leaf to a foreign leaf (the latter at
    distance 3, so the count is the same for any cutoff >= 3).
    """
    h = len(groups)
    total = sum(groups)
    return [m * (m - 1) // 2 + m * (h - 1) + m * (total - m) for m in groups]


@dataclass(frozen=True)
class BrokerSpecialist:
    graph: Graph
    performance: PerformanceVector
    planted: dict  # label -> closed-form 3-betweenness
    hubs: tuple


def broker_specialist(n=60, seed=0, noise=0.1) -> BrokerSpecialist:
    """Synthetic population of brokers and self-specialized nodes.

    About a fifth of the nodes are hubs forming a clique; every other
    node is a specialist tied to exactly one hub and carrying a heavy
    self-loop. Leaves are spread over hubs unevenly so hub brokerage
    varies. Performance is synthetic:

        perf = 10 + 2 * planted + N(0, (noise * sd(2 * planted))**2)

    where ``planted`` is the closed-form 3-betweenness.
    """
    _check_n(n, minimum=4)
    rng = random.Random(seed)
    h = max(2, n // 5)
    hubs = [f"h{i}" for i in range(h)]
    groups = [1] * h
    skew = [rng.random() ** 2 + 0.05 for _ in range(h)]
    for _ in range(n - 2 * h):
        groups[rng.choices(range(h), weights=skew)[0]] += 1

    edges = []
    for a in range(h):
        edges.append((hubs[a], hubs[a], rng.uniform(0.5, 2.0)))
        for b in range(a + 1, h):
            edges.append((hubs[a], hubs[b], rng.uniform(1.0, 3.0)))
    leaves_of = []
    counter = 0
    for a, m in enumerate(groups):
        members = []
        for _ in range(m):
            leaf = f"s{counter}"
            counter += 1
            members.append(leaf)
            edges.append((leaf, leaf, rng.uniform(5.0, 20.0)))
            edges.append((hubs[a], leaf, rng.uniform(1.0, 3.0)))
        leaves_of.append(members)

    labels = hubs + [leaf for members in leaves_of for leaf in members]
    graph = Graph.from_edges(edges, directed=False, nodes=labels)
    planted = dict.fromkeys(labels, 0)
    planted.update(zip(hubs, planted_brokerage(groups)))
    signal = {lab: 2.0 * v for lab, v in planted.items()}
    spread = statistics.pstdev(signal.values()) or 1.0
    perf = {lab: 10.0 + signal[lab] + rng.gauss(0.0, noise * spread) for lab in labels}
    return BrokerSpecialist(graph, PerformanceVector(perf), planted, tuple(hubs))


@dataclass(frozen=True)
class Fixture:
    graph: Graph
    performance: Optional[PerformanceVector] = None


def generate_fixture(kind, n=None, p=0.3, seed=0, directed=False) -> Fixture:
    """Dispatch on ``kind`` (one of :data:`KINDS`)."""
    if kind == "fig1":
        return Fixture(fig1())
    if kind == "broker-specialist":
        bs = broker_specialist(60 if n is None else n, seed)
        return Fixture(bs.graph, bs.performance)
    if n is None:
        raise ValidationError(f"fixture {kind!r} needs n")
    if kind == "star":
        return Fixture(star(n))
    if kind == "complete":
        return Fixture(complete(n, directed))
    if kind == "ring":
        return Fixture(ring(n))
    if kind == "random":
        return Fixture(random_graph(n, p, seed, directed))
    raise ValidationError(f"unknown fixture kind {kind!r}; expected one of {', '.join(KINDS)}")
