"""Seeded test instances: named graphs, random triangulations and face carving.

Every generator returns a ``(Graph, RotationSystem)`` pair whose rotation is a
planar embedding of the graph. Rotations are edited as plain Python lists
and converted to CSR once at the end.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order

from .connectivity import local_connectivity
from .embedding import DCEL, RotationSystem, embed
from .graph import Graph, bfs_distances

log = logging.getLogger(__name__)

Instance = tuple[Graph, RotationSystem]

# Two quadrilateral faces {1,4,3,2} and {5,8,7,6}; 3-connected but every
# minimal cut is connected.
FIG_COUNTER_EDGES = [
    (1, 4), (1, 6), (6, 4), (1, 2), (2, 3), (3, 4), (8, 2), (8, 3),
    (5, 8), (8, 7), (5, 6), (6, 7), (1, 8), (8, 4), (1, 5), (7, 4),
]


def _from_nx(H: nx.Graph) -> Instance:
    H = nx.convert_node_labels_to_integers(H, first_label=1, ordering="sorted")
    G = Graph.from_edges(H.number_of_nodes(), H.edges())
    return G, embed(G)


def antiprism(k: int) -> Instance:
    """The k-gonal antiprism: top cycle ``1..k``, bottom cycle ``k+1..2k``.

    Top vertex ``i`` is joined to bottom vertices ``k+i`` and ``k+i+1``.
    """
    if k < 3:
        raise ValueError("antiprism needs k >= 3")
    edges = []
    for i in range(1, k + 1):
        j = i % k + 1
        edges += [(i, j), (k + i, k + j), (i, k + i), (i, k + j)]
    G = Graph.from_edges(2 * k, edges)
    return G, embed(G)


def named(name: str) -> Instance:
    """A named instance with its (unique up to mirror image) embedding.

    Known names: ``octahedron``, ``icosahedron``, ``antiprism(k)`` (or
    ``antiprismK``) and ``paper-fig-3conn-counter``.
    """
    key = name.strip().lower()
    if key == "octahedron":
        return _from_nx(nx.octahedral_graph())
    if key == "icosahedron":
        return _from_nx(nx.icosahedral_graph())
    if key == "paper-fig-3conn-counter":
        G = Graph.from_edges(8, FIG_COUNTER_EDGES)
        return G, embed(G)
    m = re.fullmatch(r"antiprism\(?(\d+)\)?", key)
    if m:
        k = int(m.group(1))
        if k < 4:
            raise ValueError("antiprism(k) is 4-connected only for k >= 4")
        return antiprism(k)
    raise ValueError(f"unknown instance {name!r}")


def _finish(lists: list[list[int]]) -> Instance:
    rot = RotationSystem.from_lists(lists)
    return rot.graph(), rot


def _after(r: list[int], a: int) -> int:
    return r[(r.index(a) + 1) % len(r)]


def random_triangulation(n: int, seed: int = 0) -> Instance:
    """Stacked triangulation: start from K4 and insert vertices into random faces.

    Each new vertex goes into a uniformly chosen face and is joined to its
    three corners, so the result always has ``3n - 6`` edges. For ``n >= 5``
    the last vertex has degree 3, so these graphs are never 4-connected.
    """
    if n < 4:
        raise ValueError("random_triangulation needs n >= 4")
    rng = np.random.default_rng(seed)
    # K4 with vertex 4 inside the triangle 1, 2, 3
    lists: list[list[int]] = [[], [2, 4, 3], [3, 4, 1], [1, 4, 2], [1, 2, 3]]
    faces = [(1, 2, 3), (1, 4, 2), (1, 3, 4), (2, 4, 3)]
    picks = rng.random(n - 4)
    for z, r in zip(range(5, n + 1), picks):
        i = int(r * len(faces))
        a, b, c = faces[i]
        lists[b].insert(lists[b].index(a) + 1, z)
        lists[c].insert(lists[c].index(b) + 1, z)
        lists[a].insert(lists[a].index(c) + 1, z)
        lists.append([c, b, a])
        faces[i] = (a, b, z)
        faces += [(b, c, z), (c, a, z)]
    return _finish(lists)


def _flip_ok(lists: list[list[int]], u: int, v: int, w: int, x: int) -> bool:
    # a flip uv -> wx keeps a triangulation 4-connected iff it creates no
    # separating triangle through wx
    if len(lists[u]) < 5 or len(lists[v]) < 5 or x in lists[w]:
        return False
    return not (set(lists[w]) & set(lists[x])) - {u, v}


def random_4connected_triangulation(n: int, seed: int = 0, flips: int | None = None) -> Instance:
    """Random 4-connected triangulation grown from the octahedron.

    Each step splits a random edge ``uv`` with faces ``uvw`` and ``vux``: the
    edge is replaced by a new vertex joined to ``u, w, v, x``. Splitting never
    creates a separating triangle. Afterwards ``flips`` random edge flips
    (default ``n``) are tried, each kept only if it creates no separating
    triangle.
    """
    if n < 6:
        raise ValueError("4-connected triangulations need n >= 6")
    rng = np.random.default_rng(seed)
    G0, rot0 = named("octahedron")
    lists = rot0.to_lists()
    eu, ev = (list(a) for a in zip(*G0.edges()))
    picks = rng.random(n - 6)
    for z, r in zip(range(7, n + 1), picks):
        i = int(r * len(eu))
        u, v = eu[i], ev[i]
        w = _after(lists[v], u)
        x = _after(lists[u], v)
        ru, rv = lists[u], lists[v]
        ru[ru.index(v)] = z
        rv[rv.index(u)] = z
        lists[w].insert(lists[w].index(v) + 1, z)
        lists[x].insert(lists[x].index(u) + 1, z)
        lists.append([w, v, x, u])
        ev[i] = z
        eu += [z, z, z]
        ev += [v, w, x]
    if flips is None:
        flips = n
    for r in rng.random(flips):
        i = int(r * len(eu))
        u, v = eu[i], ev[i]
        w = _after(lists[v], u)
        x = _after(lists[u], v)
        if not _flip_ok(lists, u, v, w, x):
            continue
        lists[u].remove(v)
        lists[v].remove(u)
        lists[w].insert(lists[w].index(v) + 1, x)
        lists[x].insert(lists[x].index(u) + 1, w)
        eu[i], ev[i] = w, x
    return _finish(lists)


def has_separating_triangle(G: Graph, rot: RotationSystem) -> bool:
    """True iff some triangle of ``G`` is not a face of the embedding."""
    dcel = DCEL(rot)
    tri = np.flatnonzero(dcel.face_length == 3)
    face_sets = {frozenset(dcel.face_boundary(int(f))) for f in tri}
    nbrs = G.neighbor_sets
    for u in range(1, G.n + 1):
        for v in nbrs[u]:
            if v <= u:
                continue
            for w in nbrs[u] & nbrs[v]:
                if w > v and frozenset((u, v, w)) not in face_sets:
                    return True
    return False


def carve_large_faces(
    G: Graph,
    rot: RotationSystem,
    k: int,
    seed: int = 0,
    *,
    allow_touching: bool = False,
    deep: bool = False,
    spread: bool = False,
) -> Instance:
    """Delete up to ``k`` edges of a 4-connected triangulation, each making a quadrilateral.

    Deleting ``uv`` merges its faces ``uvw`` and ``vux``. With the new faces
    kept vertex-disjoint, the graph stays 4-connected exactly when ``w`` and
    ``x`` have no common neighbour besides ``u`` and ``v``, which is checked
    locally. With ``allow_touching`` faces may share vertices and each
    deletion is checked with one capped flow between ``u`` and ``v`` instead
    (see :func:`_still_4connected`); ``deep`` then grows every quadrilateral
    further by deleting one of its edges whenever that keeps 4-connectivity.

    Edges are drawn uniformly unless ``spread`` is set: then the faces are
    placed at evenly spaced breadth-first distances from a random root, the
    last one as far away as possible. Gives up after ``50 * k`` attempts and
    returns what it has.
    """
    if G.m != 3 * G.n - 6:
        raise ValueError("carve_large_faces needs a triangulation")
    rng = np.random.default_rng(seed)
    lists = rot.to_lists()
    if k <= 0:
        return _finish(lists)
    src, dst = rot.sources[rot.indptr[1] :], rot.indices
    if spread:
        dist = bfs_distances(G, int(rng.integers(1, G.n + 1)))
        far = int(dist.max())
        rounds = []
        for i in range(k):
            layer = round(i * far / max(k - 1, 1))
            pool = np.flatnonzero(np.abs(dist[src] - layer) <= 1)
            rounds.append(rng.choice(pool, size=50))
    else:
        rounds = [rng.integers(0, len(dst), size=50 * k)]
    used: set[int] = set()
    carved = 0
    for picks in rounds:
        target = carved + 1 if spread else k
        for h in picks.tolist():
            if carved >= target:
                break
            if _carve_one(lists, int(src[h]), int(dst[h]), used, allow_touching, deep):
                carved += 1
    if carved < k:
        log.warning("carved %d of %d requested large faces", carved, k)
    if deep:
        _deepen(lists, rng)
    return _finish(lists)


def _carve_one(lists: list[list[int]], u: int, v: int, used: set[int], allow_touching: bool, deep: bool) -> bool:
    if v not in lists[u]:
        return False
    w = _after(lists[v], u)
    x = _after(lists[u], v)
    # both sides must still be triangles
    if _after(lists[w], v) != u or _after(lists[x], u) != v:
        return False
    quad = {u, v, w, x}
    if not allow_touching and quad & used:
        return False
    if allow_touching or deep:
        if len(lists[u]) < 5 or len(lists[v]) < 5:
            return False
        saved = list(lists[u]), list(lists[v])
        lists[u].remove(v)
        lists[v].remove(u)
        if not _still_4connected(lists, u, v):
            lists[u], lists[v] = saved
            return False
    else:
        if len(lists[u]) < 5 or len(lists[v]) < 5:
            return False
        if (set(lists[w]) & set(lists[x])) - {u, v}:
            return False
        lists[u].remove(v)
        lists[v].remove(u)
    used |= quad
    return True


def _still_4connected(lists: list[list[int]], u: int, v: int) -> bool:
    """Whether deleting the edge ``uv`` from a 4-connected graph (already done
    in ``lists``) left it 4-connected.

    A separator of size three in ``G - uv`` that does not split ``u`` from
    ``v`` would separate ``G`` as well, so one flow between ``u`` and ``v``
    decides it.
    """
    if len(lists[u]) < 4 or len(lists[v]) < 4:
        return False
    G = RotationSystem.from_lists(lists).graph()
    return local_connectivity(G, u, v, cap=4) >= 4


def _deepen(lists: list[list[int]], rng: np.random.Generator) -> None:
    """Delete one more edge on the boundary of every large face where 4-connectivity survives."""
    rot = RotationSystem.from_lists(lists)
    dcel = DCEL(rot)
    for f in np.flatnonzero(dcel.face_length >= 4).tolist():
        W = dcel.face_boundary(f)
        L = len(W)
        for j in rng.permutation(L).tolist():
            a, b = W[j], W[(j + 1) % L]
            # face on the far side of a -> b is traced b -> a -> c
            c = _after(lists[a], b)
            if _after(lists[c], a) != b:
                continue
            saved = list(lists[a]), list(lists[b])
            lists[a].remove(b)
            lists[b].remove(a)
            if _still_4connected(lists, a, b):
                break
            lists[a], lists[b] = saved



def relabel(G: Graph, rot: RotationSystem, order: np.ndarray) -> Instance:
    """Renumber so that old vertex ``order[i]`` becomes ``i + 1``; rotations keep their order."""
    n = rot.n
    order = np.asarray(order, dtype=np.int64)
    if len(order) != n or not np.array_equal(np.sort(order), np.arange(1, n + 1)):
        raise ValueError("order must be a permutation of 1..n")
    new = np.zeros(n + 1, dtype=np.int64)
    new[order] = np.arange(1, n + 1)
    deg = np.diff(rot.indptr)[order]
    indptr = np.zeros(n + 2, dtype=np.int64)
    np.cumsum(deg, out=indptr[2:])
    # old slot of each new slot: row start plus offset within the row
    offset = np.arange(indptr[-1]) - np.repeat(indptr[1:-1], deg)
    old = np.repeat(rot.indptr[order], deg) + offset
    out = RotationSystem(n, indptr, new[rot.indices[old]])
    return out.graph(), out


def bfs_order(G: Graph, root: int = 1) -> np.ndarray:
    """Vertices in breadth-first order from ``root``, unreached ones appended."""
    A = csr_matrix((np.ones(len(G.indices), dtype=np.int8), G.indices, G.indptr), shape=(G.n + 1, G.n + 1))
    seen = breadth_first_order(A, root, directed=False, return_predecessors=False)
    seen = seen[seen > 0]
    rest = np.setdiff1d(np.arange(1, G.n + 1), seen)
    return np.concatenate([seen, rest])


@dataclass(frozen=True)
class GeneratorSpec:
    """What to build. Equal specs give identical graphs.

    ``family`` is ``named`` (uses ``name``), ``random-triangulation`` (a
    4-connected triangulation on ``n`` vertices), ``stacked`` (face-insertion
    triangulation, not 4-connected) or ``carved`` (a 4-connected triangulation
    with ``faces`` quadrilaterals carved out, far apart if ``spread``). ``order="bfs"`` renumbers the
    result breadth-first from vertex 1, which gives neighbouring vertices
    nearby ids as in typical mesh files; ``"native"`` keeps construction order.
    """

    family: str
    n: int = 0
    faces: int = 0
    seed: int = 0
    name: str | None = None
    allow_touching: bool = False
    deep: bool = False
    spread: bool = False
    order: str = "native"


FAMILIES = ("named", "random-triangulation", "stacked", "carved")


def generate(spec: GeneratorSpec) -> Instance:
    G, rot = _build(spec)
    if spec.order == "bfs":
        return relabel(G, rot, bfs_order(G))
    if spec.order != "native":
        raise ValueError(f"unknown order {spec.order!r}; expected native or bfs")
    return G, rot


def _build(spec: GeneratorSpec) -> Instance:
    if spec.family == "named":
        if not spec.name:
            raise ValueError("family 'named' needs a name")
        return named(spec.name)
    if spec.family == "stacked":
        return random_triangulation(spec.n, spec.seed)
    if spec.family == "random-triangulation":
        return random_4connected_triangulation(spec.n, spec.seed)
    if spec.family == "carved":
        G, rot = random_4connected_triangulation(spec.n, spec.seed)
        return carve_large_faces(
            G,
            rot,
            spec.faces,
            spec.seed,
            allow_touching=spec.allow_touching,
            deep=spec.deep,
            spread=spec.spread,
        )
    raise ValueError(f"unknown family {spec.family!r}; expected one of {', '.join(FAMILIES)}")
