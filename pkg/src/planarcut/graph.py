"""Undirected simple graphs on vertices ``1..n`` and the index-array helpers.

Graphs are stored in compressed sparse row form: the neighbours of ``v`` are
``indices[indptr[v]:indptr[v + 1]]``. Slot 0 of ``indptr`` is padding so that
vertex ids can be used directly as row numbers.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from functools import cached_property

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components


class GraphError(ValueError):
    """Raised when a graph or vertex list violates its invariants."""


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class Graph:
    """Immutable undirected simple graph with vertex ids ``1..n``.

    The order of each adjacency list is preserved from construction, which
    lets a graph double as the carrier of a rotation system.
    """

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray, *, check: bool = True):
        self.n = int(n)
        self.indptr = _frozen(np.asarray(indptr, dtype=np.int64))
        self.indices = _frozen(np.asarray(indices, dtype=np.int64))
        if self.indptr.shape != (self.n + 2,):
            raise GraphError(f"indptr must have n + 2 = {self.n + 2} entries")
        if check:
            self._check()

    def _check(self) -> None:
        n, ptr, idx = self.n, self.indptr, self.indices
        if ptr[0] != 0 or ptr[1] != 0 or np.any(np.diff(ptr) < 0) or ptr[-1] != len(idx):
            raise GraphError("malformed indptr")
        if len(idx) and (idx.min() < 1 or idx.max() > n):
            raise GraphError("neighbour id out of range 1..n")
        src = np.repeat(np.arange(n + 1), np.diff(ptr))
        if np.any(src == idx):
            raise GraphError(f"self-loop at vertex {int(src[src == idx][0])}")
        key = src * (n + 1) + idx
        skey = np.sort(key)
        if len(skey) > 1 and np.any(skey[1:] == skey[:-1]):
            dup = int(skey[1:][skey[1:] == skey[:-1]][0])
            raise GraphError(f"duplicate edge {dup // (n + 1)}-{dup % (n + 1)}")
        rkey = np.sort(idx * (n + 1) + src)
        if not np.array_equal(skey, rkey):
            raise GraphError("adjacency is not symmetric")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from an edge list; each edge is listed once."""
        e = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        e = e.reshape(-1, 2)
        src = np.concatenate([e[:, 0], e[:, 1]])
        dst = np.concatenate([e[:, 1], e[:, 0]])
        if len(src) and (src.min() < 1 or src.max() > n):
            raise GraphError("edge endpoint out of range 1..n")
        order = np.argsort(src, kind="stable")
        counts = np.bincount(src, minlength=n + 1)
        indptr = np.zeros(n + 2, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        return cls(n, indptr, dst[order])

    @classmethod
    def from_adjacency(cls, adj: Mapping[int, Iterable[int]] | Sequence[Iterable[int]], n: int | None = None) -> Graph:
        """Build a graph from per-vertex neighbour lists, keeping their order.

        ``adj`` is a mapping ``v -> neighbours`` or a sequence indexed by vertex
        id whose entry 0 is ignored.
        """
        if isinstance(adj, Mapping):
            n = max(adj, default=0) if n is None else n
            rows = [list(adj.get(v, ())) for v in range(1, n + 1)]
        else:
            rows = [list(a) for a in adj[1:]]
            n = len(rows) if n is None else n
            rows += [[] for _ in range(n - len(rows))]
        indptr = np.zeros(n + 2, dtype=np.int64)
        np.cumsum([len(r) for r in rows], out=indptr[2:])
        flat = [v for r in rows for v in r]
        return cls(n, indptr, np.array(flat, dtype=np.int64))

    # -- queries ----------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    def adj(self, v: int) -> np.ndarray:
        """Neighbours of ``v`` as a read-only array view."""
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def neighbors(self, v: int) -> list[int]:
        return self.adjacency_lists[v]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    @cached_property
    def degrees(self) -> np.ndarray:
        """Degree array with padding slot 0."""
        return _frozen(np.diff(self.indptr)[: self.n + 1].copy())

    @cached_property
    def adjacency_lists(self) -> list[list[int]]:
        """Python lists of neighbours, index 0 empty."""
        ptr = self.indptr.tolist()
        idx = self.indices.tolist()
        return [idx[ptr[v] : ptr[v + 1]] for v in range(self.n + 1)]

    @cached_property
    def neighbor_sets(self) -> list[frozenset[int]]:
        return [frozenset(a) for a in self.adjacency_lists]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each edge once, as ``(u, v)`` with ``u < v``."""
        for u, nbrs in enumerate(self.adjacency_lists):
            for v in nbrs:
                if u < v:
                    yield u, v

    def edge_array(self) -> np.ndarray:
        src = np.repeat(np.arange(self.n + 1), np.diff(self.indptr))
        keep = src < self.indices
        return np.stack([src[keep], self.indices[keep]], axis=1)

    @cached_property
    def sources(self) -> np.ndarray:
        """Row vertex of every CSR slot (the tail of each directed edge)."""
        return _frozen(np.repeat(np.arange(self.n + 1), np.diff(self.indptr)))

    def to_csr(self) -> csr_matrix:
        """Symmetric 0/1 adjacency matrix including the padding row 0."""
        size = self.n + 1
        data = np.ones(len(self.indices), dtype=np.int8)
        return csr_matrix((data, self.indices, self.indptr[: size + 1]), shape=(size, size))

    def with_vertices(self, extra: Sequence[Iterable[int]]) -> Graph:
        """Return a new graph with vertices ``n+1, n+2, ...`` appended.

        ``extra[i]`` lists the neighbours of vertex ``n + 1 + i`` among the
        existing vertices (or earlier new ones).
        """
        new_edges = [(self.n + 1 + i, int(v)) for i, nbrs in enumerate(extra) for v in nbrs]
        e = np.concatenate([self.edge_array(), np.array(new_edges, dtype=np.int64).reshape(-1, 2)])
        return Graph.from_edges(self.n + len(extra), e)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and set(self.edges()) == set(other.edges())

    __hash__ = None  # type: ignore[assignment]


# -- index arrays -----------------------------------------------------------


def _checked(A: Sequence[int], n: int) -> np.ndarray:
    a = np.asarray(A, dtype=np.int64).reshape(-1)
    if len(a) and (a.min() < 1 or a.max() > n):
        raise GraphError(f"list element out of range 1..{n}")
    return a


def subset_array(A: Sequence[int], n: int, *, padded: bool = False) -> np.ndarray:
    """0/1 membership array of the vertex list ``A`` over ``1..n``.

    With ``padded=True`` the result has ``n + 1`` entries and is indexed by
    vertex id directly; otherwise entry ``i - 1`` describes vertex ``i``.
    """
    a = _checked(A, n)
    out = np.zeros(n + 1, dtype=np.int8)
    out[a] = 1
    return out if padded else out[1:]


def lookup_array(A: Sequence[int], n: int, *, padded: bool = False) -> np.ndarray:
    """Array whose entry for vertex ``a_j`` is ``j`` (1-based), else 0."""
    a = _checked(A, n)
    out = np.zeros(n + 1, dtype=np.int64)
    out[a] = np.arange(1, len(a) + 1)
    if len(np.unique(a)) != len(a):
        raise GraphError("vertex list has repeated entries")
    return out if padded else out[1:]


def append(A: list[int], v: int) -> list[int]:
    """Append ``v`` to the vertex list ``A`` in place and return it."""
    A.append(v)
    return A


# -- connectivity primitives --------------------------------------------------


def component_labels(G: Graph, removed: Iterable[int] = ()) -> np.ndarray:
    """Label each vertex of ``G - removed`` by component; removed vertices get -1.

    Labels are canonical: components are numbered in order of their
    smallest vertex. Slot 0 is -1.
    """
    mask = np.ones(G.n + 1, dtype=bool)
    mask[0] = False
    rem = np.fromiter(removed, dtype=np.int64) if not isinstance(removed, np.ndarray) else removed
    mask[rem] = False
    keep_edge = mask[G.sources] & mask[G.indices]
    size = G.n + 1
    data = keep_edge.astype(np.int8)
    A = csr_matrix((data, G.indices, G.indptr[: size + 1]), shape=(size, size))
    A.eliminate_zeros()
    _, raw = connected_components(A, directed=False)
    labels = np.full(size, -1, dtype=np.int64)
    live = np.flatnonzero(mask)
    if len(live) == 0:
        return labels
    # renumber by smallest member; `live` is sorted, so first occurrence wins
    _, first = np.unique(raw[live], return_index=True)
    order = np.argsort(first)
    rank = np.empty(len(order), dtype=np.int64)
    rank[order] = np.arange(len(order))
    uniq = np.unique(raw[live])
    labels[live] = rank[np.searchsorted(uniq, raw[live])]
    return labels


def components(G: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of ``G - removed``, each sorted, ordered by minimum."""
    removed = list(removed)
    for v in removed:
        if not 1 <= v <= G.n:
            raise GraphError(f"vertex {v} not in graph")
    labels = component_labels(G, np.asarray(removed, dtype=np.int64))
    live = np.flatnonzero(labels >= 0)
    if len(live) == 0:
        return []
    order = np.argsort(labels[live], kind="stable")
    groups = np.split(live[order], np.flatnonzero(np.diff(labels[live][order])) + 1)
    return [g.tolist() for g in groups]


def is_connected(G: Graph, removed: Iterable[int] = ()) -> bool:
    return len(components(G, removed)) <= 1


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``S``, relabelled ``1..|S|`` in increasing order.

    Returns the subgraph and ``mapping`` with ``mapping[i - 1]`` the original
    id of new vertex ``i``.
    """
    verts = sorted(set(S))
    for v in verts:
        if not 1 <= v <= G.n:
            raise GraphError(f"vertex {v} not in graph")
    new_id = np.zeros(G.n + 1, dtype=np.int64)
    new_id[verts] = np.arange(1, len(verts) + 1)
    e = G.edge_array()
    keep = (new_id[e[:, 0]] > 0) & (new_id[e[:, 1]] > 0)
    return Graph.from_edges(len(verts), new_id[e[keep]]), verts


def csr_rows(indptr: np.ndarray, indices: np.ndarray, F: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """All ``(row, entry)`` pairs of the CSR rows listed in ``F``, row by row."""
    lo = indptr[F]
    deg = indptr[F + 1] - lo
    total = int(deg.sum())
    if total == 0:
        return F[:0], indices[:0]
    first = np.cumsum(deg) - deg
    offs = np.arange(total) - np.repeat(first, deg)
    return np.repeat(F, deg), indices[np.repeat(lo, deg) + offs]


def bfs_distances(G: Graph, root: int) -> np.ndarray:
    """Hop distance from ``root`` to every vertex (``-1`` if unreachable, entry 0 unused)."""
    dist = np.full(G.n + 1, -1, dtype=np.int64)
    dist[root] = 0
    frontier = np.array([root], dtype=np.int64)
    d = 0
    while len(frontier):
        d += 1
        _, nxt = csr_rows(G.indptr, G.indices, frontier)
        nxt = np.unique(nxt[dist[nxt] < 0])
        dist[nxt] = d
        frontier = nxt
    return dist
