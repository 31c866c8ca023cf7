"""The ten acceptance criteria, one test each.

Every test prints a single ``criterion N PASS|FAIL`` line (collected again in
the terminal summary) and then asserts.
"""

import logging
import time

import networkx as nx
import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, load_derived, named_corpus, small_corpus

from planarcut.bench import bench, format_csv
from planarcut.cuts import face_intersection, neighborhood_cut, verify_cut
from planarcut.embedding import embed, large_faces
from planarcut.generators import GeneratorSpec, generate, named, random_triangulation
from planarcut.graph import Graph
from planarcut.mindisccut import min_disc_cut, min_disc_cut_trace
from planarcut.oracle import (
    check_component_bound,
    check_menger,
    check_near_triangulation_cut_shapes,
    check_no_stable_cut,
    check_unique_extension,
    enumerate_minimal_cuts,
)


BUILD_SECONDS: dict[str, float] = {}


def record(number: int, ok: bool, title: str, detail: str) -> None:
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)


def _nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(1, G.n + 1))
    H.add_edges_from(G.edges())
    return H


def _two_connected_extras():
    """2-connected planar graphs that are not 4-connected: cycles, thinned
    stacked triangulations, and a near-triangulation with a pentagonal face."""
    out = []
    for n in (4, 5, 8):
        G = Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])
        out.append((f"cycle-{n}", G, embed(G)))
    rng = np.random.default_rng(11)
    for i in range(40):
        n = int(rng.integers(6, 13))
        T, _ = random_triangulation(n, seed=100 + i)
        H = _nx(T)
        edges = list(H.edges())
        for j in rng.permutation(len(edges))[: int(rng.integers(1, n))]:
            u, v = edges[j]
            H.remove_edge(u, v)
            if not nx.is_biconnected(H):
                H.add_edge(u, v)
        G = Graph.from_edges(n, H.edges())
        out.append((f"thinned-stacked-{i}", G, embed(G)))
    derived = load_derived()
    G = Graph.from_edges(15, [tuple(e) for e in derived["near_triangulation_edges"]])
    out.append(("near-triangulation-15", G, embed(G)))
    G, rot = named("paper-fig-3conn-counter")
    out.append(("fig-3conn-counter", G, rot))
    return out


@pytest.fixture(scope="module")
def four_connected():
    """Generated and named 4-connected planar graphs with n <= 14, with inventories."""
    t0 = time.perf_counter()
    out = []
    for name, G, rot in list(small_corpus()) + [x for x in named_corpus() if x[1].n <= 14]:
        out.append((name, G, rot, enumerate_minimal_cuts(G)))
    BUILD_SECONDS["four_connected"] = time.perf_counter() - t0
    return out


@pytest.fixture(scope="module")
def oracle_scale(four_connected):
    extra = [(name, G, rot, enumerate_minimal_cuts(G, bound=15)) for name, G, rot in _two_connected_extras()]
    return four_connected + extra


@pytest.fixture(scope="module")
def kappa(oracle_scale):
    return {name: nx.node_connectivity(_nx(G)) for name, G, _, _ in oracle_scale}


def test_criterion_01_characterization(four_connected):
    t0 = time.perf_counter()
    bad = []
    not4 = [name for name, G, _, _ in four_connected if nx.node_connectivity(_nx(G)) < 4]
    counts = {True: 0, False: 0}
    for name, G, rot, inv in four_connected:
        cut = min_disc_cut(G, rot, verify=True)
        flags = (cut is not None, bool(inv.disconnected), large_faces(G, rot).k >= 2)
        counts[flags[0]] += 1
        if len(set(flags)) != 1 or (cut is not None and cut not in inv):
            bad.append((name, flags))
    # generation and oracle enumeration happen in the fixture; count them too
    elapsed = time.perf_counter() - t0 + BUILD_SECONDS.get("four_connected", 0.0)
    total = len(four_connected)
    ok = not bad and not not4 and total >= 200 and elapsed < 300
    record(1, ok, "characterization equivalence",
           f"{total - len(bad)}/{total} agree ({counts[True]} with cuts, {counts[False]} null), "
           f"{len(not4)} not 4-connected, {elapsed:.1f}s")
    assert not not4, not4[:5]
    assert total >= 200
    assert not bad, bad[:5]
    assert elapsed < 300


def _large_instances():
    specs = []
    for n in (100, 1000, 10_000):
        for faces in (2, 3, 8, 30):
            for seed in range(3):
                specs.append(GeneratorSpec("carved", n=n, faces=faces, seed=seed))
        for seed in range(3):
            specs.append(GeneratorSpec("carved", n=n, faces=6, seed=seed, allow_touching=True))
    for n in (300, 3000):
        for seed in range(40):
            specs.append(GeneratorSpec("carved", n=n, faces=n // 12, seed=seed))
    for seed in range(3):
        specs.append(GeneratorSpec("carved", n=60, faces=4, seed=seed, allow_touching=True, deep=True))
    specs += [
        GeneratorSpec("carved", n=100_000, faces=2, seed=0),
        GeneratorSpec("carved", n=100_000, faces=40, seed=1),
        GeneratorSpec("carved", n=100_000, faces=6, seed=2, allow_touching=True),
        GeneratorSpec("carved", n=100_000, faces=2, seed=3, spread=True, order="bfs"),
    ]
    return specs


def test_criterion_02_witness_validity(four_connected, caplog):
    caplog.set_level(logging.INFO, logger="planarcut.mindisccut")
    checked = failures = multi = unlogged = 0
    largest = 0

    def one(G, rot, label):
        nonlocal checked, failures, multi, unlogged, largest
        caplog.clear()
        trace = min_disc_cut_trace(G, rot, verify=False)
        if trace.cut is None:
            return
        checked += 1
        largest = max(largest, G.n)
        rep = verify_cut(G, trace.cut)
        if not (rep.minimal and rep.disconnected):
            failures += 1
        if trace.skippers and max(s.passes for s in trace.skippers) > 1:
            multi += 1
            if not any("passes" in r.getMessage() for r in caplog.records):
                unlogged += 1

    for name, G, rot, _ in four_connected:
        one(G, rot, name)
    # quiet the generator's shortfall warnings without touching the pipeline's log
    gen_log = logging.getLogger("planarcut.generators")
    level = gen_log.level
    gen_log.setLevel(logging.ERROR)
    try:
        for spec in _large_instances():
            G, rot = generate(spec)
            one(G, rot, spec)
    finally:
        gen_log.setLevel(level)
    ok = failures == 0 and unlogged == 0 and largest >= 100_000
    record(2, ok, "witness validity",
           f"{checked - failures}/{checked} cuts minimal and disconnected, largest n={largest}, "
           f"{multi} multi-pass skips, {unlogged} unlogged")
    assert failures == 0 and unlogged == 0
    assert largest >= 100_000


def test_criterion_03_near_triangulation_shapes(four_connected):
    near = [(name, G, rot, inv) for name, G, rot, inv in four_connected if large_faces(G, rot).k <= 1]
    with_face = sum(large_faces(G, rot).k == 1 for _, G, rot, _ in near)
    results = [check_near_triangulation_cut_shapes(G, rot, inv) for _, G, rot, inv in near]
    bad = [(near[i][0], r.violations[:2]) for i, r in enumerate(results) if not r.ok]
    cuts = sum(r.checked for r in results)
    ok = not bad and len(near) >= 50
    record(3, ok, "near-triangulation cut shapes",
           f"{len(near) - len(bad)}/{len(near)} graphs ({with_face} with one large face), {cuts} cuts")
    assert len(near) >= 50
    assert not bad, bad[:3]


def test_criterion_04_component_bound(oracle_scale):
    results = [(name, check_component_bound(G, rot, inv)) for name, G, rot, inv in oracle_scale]
    bad = [(name, r.violations[:2]) for name, r in results if not r.ok]
    record(4, not bad, "component bound",
           f"{len(results) - len(bad)}/{len(results)} 2-connected graphs, {sum(r.checked for _, r in results)} cuts")
    assert not bad, bad[:3]


def test_criterion_05_no_stable_cut(oracle_scale, kappa):
    eligible = [
        (name, G, rot, inv)
        for name, G, rot, inv in oracle_scale
        if kappa[name] >= 3 and face_intersection(G.n, large_faces(G, rot)) is None
    ]
    results = [(name, check_no_stable_cut(G, rot, inv)) for name, G, rot, inv in eligible]
    bad = [(name, r.violations[:2]) for name, r in results if r.status != "pass"]
    record(5, not bad and bool(eligible), "no stable minimal cut",
           f"{len(results) - len(bad)}/{len(results)} 3-connected graphs with disjoint large faces, "
           f"{sum(r.checked for _, r in results)} cuts")
    assert eligible
    assert not bad, bad[:3]


def test_criterion_06_unique_extension(oracle_scale, kappa):
    eligible = [(name, G, rot, inv) for name, G, rot, inv in oracle_scale if kappa[name] >= 3]
    results = [(name, check_unique_extension(G, rot, inv)) for name, G, rot, inv in eligible]
    bad = [(name, r.status, r.violations[:2], r.note) for name, r in results if r.status != "pass"]
    record(6, not bad, "unique auxiliary extension",
           f"{len(results) - len(bad)}/{len(results)} 3-connected graphs, {sum(r.checked for _, r in results)} cuts")
    assert not bad, bad[:3]


def test_criterion_07_shared_vertex_shortcut(four_connected):
    hits = bad = 0
    instances = [(G, rot) for _, G, rot, _ in four_connected]
    logging.disable(logging.WARNING)
    try:
        for n in (30, 200, 2000):
            for seed in range(15):
                instances.append(generate(GeneratorSpec("carved", n=n, faces=5, seed=seed, allow_touching=True)))
    finally:
        logging.disable(logging.NOTSET)
    for G, rot in instances:
        v = face_intersection(G.n, large_faces(G, rot))
        if v is None:
            continue
        hits += 1
        rep = verify_cut(G, neighborhood_cut(G, v))
        bad += not (rep.minimal and rep.disconnected)
    ok = bad == 0 and hits > 0
    record(7, ok, "shared-vertex shortcut", f"{hits - bad}/{hits} neighbourhoods minimal and disconnected")
    assert hits > 0 and bad == 0


def test_criterion_08_menger(oracle_scale):
    results = [(name, check_menger(G)) for name, G, _, _ in oracle_scale]
    bad = [(name, r.violations[:2]) for name, r in results if not r.ok]
    pairs = sum(r.checked for _, r in results)
    record(8, not bad, "Menger correctness", f"{len(results) - len(bad)}/{len(results)} graphs, {pairs} non-adjacent pairs")
    assert not bad, bad[:3]


@pytest.mark.slow
def test_criterion_09_linear_scaling():
    sizes = [2**e for e in range(10, 21)]
    t0 = time.perf_counter()
    logging.disable(logging.WARNING)
    try:
        rows = bench(sizes, family="carved", faces=2, reps=5)
    finally:
        logging.disable(logging.NOTSET)
    total = time.perf_counter() - t0
    print(format_csv(rows))
    ratios = [r.ratio for r in rows if r.ratio is not None]
    worst = max(ratios)
    ok = worst <= 2.5 and total < 600
    record(9, ok, "linear scaling",
           f"max doubling ratio {worst:.2f} (limit 2.5), t(2^20)={rows[-1].ms:.0f} ms, total {total:.0f}s")
    assert worst <= 2.5, format_csv(rows)
    assert total < 600


def _canonical(S, autos):
    return min(tuple(sorted(a[v] for v in S)) for a in autos)


def test_criterion_10_golden_antiprism():
    G, rot = named("antiprism(4)")
    derived = load_derived()
    cut = min_disc_cut(G, rot, verify=True)
    rep = verify_cut(G, cut)
    H = _nx(G)
    autos = list(nx.algorithms.isomorphism.GraphMatcher(H, H).isomorphisms_iter())
    inv = enumerate_minimal_cuts(G)
    oracle_forms = {_canonical(S, autos) for S in inv.disconnected}
    ours = {_canonical(cut, autos)}
    frozen = {tuple(S) for S in derived["antiprism4_disconnected_canonical"]}
    single_edges = len(rep.cut_components) == 2 and all(
        len(c) == 2 and H.has_edge(*c) for c in rep.cut_components
    )
    ok = len(cut) == 4 and rep.minimal and single_edges and ours == oracle_forms == frozen
    record(10, ok, "golden antiprism(4)",
           f"cut {sorted(cut)}, parts {rep.cut_components}, canonical {sorted(ours)} vs inventory {sorted(oracle_forms)}")
    assert len(cut) == 4 and rep.minimal and single_edges
    assert ours == oracle_forms == frozen
