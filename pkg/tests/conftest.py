import json
import logging
import os
from functools import lru_cache
from pathlib import Path

import pytest

# Self-checks on for every min_disc_cut call made by the suite.
os.environ.setdefault("PLANARCUT_CHECK", "1")

from planarcut.embedding import RotationSystem, embed  # noqa: E402
from planarcut.generators import GeneratorSpec, generate, named  # noqa: E402
from planarcut.graph import Graph  # noqa: E402

DATA = Path(__file__).parent / "data"
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def derived():
    """Expected values computed by tests/oracles/derive.py (networkx only)."""
    return json.loads((DATA / "derived.json").read_text())


def load_derived() -> dict:
    return json.loads((DATA / "derived.json").read_text())


def graph_from(edges, n=None):
    n = n or max(max(e) for e in edges)
    G = Graph.from_edges(n, [tuple(e) for e in edges])
    return G, embed(G)


@pytest.fixture(scope="session")
def octahedron():
    return named("octahedron")


@pytest.fixture(scope="session")
def icosahedron():
    return named("icosahedron")


@pytest.fixture(scope="session")
def antiprism4():
    return named("antiprism(4)")


@pytest.fixture(scope="session")
def near_triangulation(derived):
    return graph_from(derived["near_triangulation_edges"])


@pytest.fixture(scope="session")
def c4():
    G = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    return G, RotationSystem.from_lists([[], [2, 4], [3, 1], [4, 2], [1, 3]])


@lru_cache(maxsize=None)
def small_corpus() -> tuple:
    """Distinct 4-connected planar instances with 9 <= n <= 14.

    Triangulations and carved graphs with one to three large faces, with
    and without faces sharing vertices.
    """
    seen = set()
    out = []
    configs = [(0, False), (1, False), (2, False), (3, False), (2, True), (3, True)]
    previous = logging.root.manager.disable
    logging.disable(logging.WARNING)
    try:
        for n in range(9, 15):
            for seed in range(10):
                for faces, touch in configs:
                    family = "random-triangulation" if faces == 0 else "carved"
                    spec = GeneratorSpec(family, n=n, faces=faces, seed=seed, allow_touching=touch)
                    G, rot = generate(spec)
                    key = (G.n, tuple(sorted(G.edges())))
                    if key not in seen:
                        seen.add(key)
                        out.append((f"{family}-n{n}-f{faces}-s{seed}{'-t' if touch else ''}", G, rot))
    finally:
        logging.disable(previous)
    return tuple(out)


def named_corpus() -> list:
    names = ["octahedron", "icosahedron", "antiprism(4)", "antiprism(5)", "antiprism(6)", "antiprism(7)"]
    return [(name, *named(name)) for name in names]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
