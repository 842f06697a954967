"""Exit criteria. Each test records one PASS/FAIL line in the terminal summary."""

import random
import time

import pytest

from netdiversity import (
    BetweennessParams,
    broker_specialist,
    burt_constraint,
    compute_report,
    fig1,
    k_betweenness,
    normalized_entropy,
    pearson,
    random_graph,
    star,
    summarize,
)
from netdiversity.cli import main, oracle_check
from netdiversity.fixtures import complete, ring
from netdiversity.graph import Graph
from netdiversity.metrics import entropy_of_weights

from .conftest import ACCEPTANCE_LINES, FIG1_CSV
from .test_entropy import mp_entropy


@pytest.fixture
def record(request):
    state = {}

    def check(number, title, ok, detail=""):
        state["line"] = f"AC{number:>2} {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else "")
        assert ok, state["line"]

    yield check
    if "line" in state:
        ACCEPTANCE_LINES.append(state["line"])


def close(a, b, tol):
    return abs(a - b) <= tol


def test_ac01_fig1_three_betweenness(record):
    g = fig1()
    start = time.perf_counter()
    scores = dict(zip(g.labels, k_betweenness(g, BetweennessParams(3))))
    elapsed = time.perf_counter() - start
    expected = {"A": 0.5, "B": 3.5, "C": 1.0, "D": 1.0, "E": 0.0}
    ok = all(close(scores[k], v, 1e-9) for k, v in expected.items()) and scores["A"] < scores["B"] and elapsed < 1.0
    record(1, "fig1 3-betweenness {A:.5,B:3.5,C:1,D:1,E:0}", ok, f"{scores}, {elapsed:.4f}s")


def test_ac02_fig1_entropy_equal(record):
    g = fig1()
    a, b = normalized_entropy(g, "A"), normalized_entropy(g, "B")
    report = compute_report(g)
    ok = a == 1.0 and b == 1.0 and report.row("A").k_betweenness < report.row("B").k_betweenness
    record(2, "fig1 entropy D(A) = D(B) = 1.0 exactly", ok, f"D(A)={a!r}, D(B)={b!r}")


def test_ac03_direct_link_effect(record):
    base, linked = fig1(), fig1(with_cd_link=True)
    btw_before = dict(zip(base.labels, k_betweenness(base)))["A"]
    btw_after = dict(zip(linked.labels, k_betweenness(linked)))["A"]
    c_before, c_after = burt_constraint(base, "A"), burt_constraint(linked, "A")
    ok = (
        close(btw_before, 0.5, 1e-9)
        and close(btw_after, 0.0, 1e-9)
        and close(c_before, 0.5, 1e-9)
        and close(c_after, 8 / 9, 1e-9)
    )
    record(3, "C-D link: A's 3-betweenness 0.5 -> 0, constraint 0.5 -> 8/9", ok,
           f"btw {btw_before}->{btw_after}, constraint {c_before}->{c_after}")


def test_ac04_oracle_equivalence(record):
    start = time.perf_counter()
    result = oracle_check(trials=100, max_n=10, p=0.3, seed=1, tolerance=1e-9)
    elapsed = time.perf_counter() - start
    ok = result["status"] == "pass" and result["comparisons"] == 400 and elapsed < 30
    record(4, "oracle equivalence on 100 random graphs x 4 cutoffs", ok,
           f"max dev {result['max_deviation']:.2e}, {elapsed:.2f}s")


def _test_graphs():
    rng = random.Random(2024)
    graphs = [fig1(), fig1(with_cd_link=True), star(5), complete(5), ring(7), broker_specialist(12, 1).graph]
    for t in range(100):
        graphs.append(random_graph(rng.randint(2, 10), 0.3, rng.randrange(10**9), directed=bool(t % 2)))
    return graphs


def test_ac05_cutoff_saturation(record):
    mismatches = 0
    graphs = _test_graphs()
    for g in graphs:
        saturated = k_betweenness(g, BetweennessParams(max(1, g.n - 1)))
        if saturated != k_betweenness(g, BetweennessParams(None)):
            mismatches += 1
    fig = fig1()
    same_as_three = k_betweenness(fig, BetweennessParams(3)) == k_betweenness(fig, BetweennessParams(None))
    record(5, "cutoff n-1 equals unbounded betweenness exactly", mismatches == 0 and same_as_three,
           f"{len(graphs)} graphs, {mismatches} mismatches")


def test_ac06_entropy_properties(record):
    rng = random.Random(6)
    uniform = all(entropy_of_weights([2.5] * k) == 1.0 for k in range(2, 11))
    scale = base = True
    for _ in range(200):
        w = [rng.uniform(0.01, 100) for _ in range(rng.randint(2, 12))]
        c = rng.uniform(0.001, 1000)
        d = entropy_of_weights(w)
        scale &= close(entropy_of_weights([c * x for x in w]), d, 1e-12)
        base &= close(entropy_of_weights(w, base=2), d, 1e-12)
    single = normalized_entropy(Graph.from_edges([("a", "b", 3)]), "a") is None
    d211 = entropy_of_weights([2, 1, 1])
    reference = mp_entropy([2, 1, 1])
    ok = uniform and scale and base and single and close(d211, 0.946395, 1e-6) and close(d211, reference, 1e-12)
    record(6, "entropy: uniform=1, scale/base invariance, k=1 missing, {2,1,1}=0.946395", ok,
           f"uniform={uniform} scale={scale} base={base} k1={single} d211={d211:.9f}")


def test_ac07_star(record):
    g = star(5)
    report = compute_report(g)
    center = report.row("0")
    leaves = [report.row(str(i)) for i in range(1, 5)]
    ok = (
        close(center.k_betweenness, 6.0, 1e-9)
        and all(close(r.k_betweenness, 0.0, 1e-9) for r in leaves)
        and all(r.entropy is None for r in leaves)
        and close(center.constraint, 0.25, 1e-9)
    )
    record(7, "star(5): center 6.0, leaves 0, leaf entropy missing, center constraint 1/4", ok,
           f"center btw={center.k_betweenness} constraint={center.constraint}")


def test_ac08_fig1_mean_geodesic(record):
    s = summarize(fig1())
    ok = s.mean_geodesic_distance == 1.7 and s.distance_sum == 34 and s.reachable_pairs == 20
    record(8, "summarize(fig1) mean geodesic distance = 1.7 (34/20)", ok,
           f"got {s.distance_sum}/{s.reachable_pairs} = {s.mean_geodesic_distance}")


def test_ac09_correlation_harness(record):
    bs = broker_specialist(60, seed=1)
    report = compute_report(bs.graph)
    xs = [r.k_betweenness for r in report.rows]
    ys = [bs.performance.get(r.node) for r in report.rows]
    r = pearson(xs, ys).r
    rng = random.Random(9)
    props = True
    for _ in range(100):
        a = [rng.gauss(0, 1) for _ in range(20)]
        b = [rng.gauss(0, 1) for _ in range(20)]
        scale, shift = rng.uniform(0.01, 100), rng.uniform(-100, 100)
        base = pearson(a, b).r
        props &= close(pearson(b, a).r, base, 1e-9)
        props &= close(pearson([scale * x + shift for x in a], b).r, base, 1e-9)
        props &= close(pearson(a, [scale * y + shift for y in b]).r, base, 1e-9)
    record(9, "broker-specialist r(k_betweenness, perf) > 0.9; pearson symmetry/affine", r > 0.9 and props,
           f"r={r:.4f}")


def test_ac10_determinism(record, tmp_path, capsys):
    graph_path = tmp_path / "fig1.csv"
    graph_path.write_text(FIG1_CSV + "\n")
    bs_path, perf_path = tmp_path / "bs.csv", tmp_path / "perf.csv"
    main(["generate", "--kind", "broker-specialist", "--n", "30", "--seed", "4",
          "--output", str(bs_path), "--perf-output", str(perf_path)])
    commands = [
        ["metrics", "--input", str(graph_path), "--format", "json"],
        ["metrics", "--input", str(bs_path), "--format", "csv", "--cutoff", "inf"],
        ["correlate", "--input", str(bs_path), "--perf", str(perf_path), "--format", "json"],
        ["correlate", "--input", str(bs_path), "--perf", str(perf_path), "--format", "csv"],
        ["summarize", "--input", str(graph_path), "--format", "json"],
        ["summarize", "--input", str(bs_path), "--format", "csv"],
        ["generate", "--kind", "random", "--n", "9", "--p", "0.3", "--seed", "7"],
        ["generate", "--kind", "broker-specialist", "--n", "20", "--seed", "3"],
        ["oracle-check", "--trials", "10", "--seed", "3", "--format", "json"],
    ]
    capsys.readouterr()
    differing = []
    for argv in commands:
        outputs = []
        for _ in range(2):
            assert main(argv) == 0
            outputs.append(capsys.readouterr().out)
        if outputs[0] != outputs[1] or not outputs[0]:
            differing.append(argv[0])
    record(10, "every command byte-identical across two runs",
           not differing, f"{len(commands)} commands, differing={differing}")
