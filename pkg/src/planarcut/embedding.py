"""Combinatorial planar embeddings, their half-edge realisation, and faces.

A rotation system lists the neighbours of every vertex in clockwise order.
Faces are traced with ``next(u -> v) = (v -> w)`` where ``w`` follows ``u``
in the rotation at ``v``.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .graph import Graph, GraphError, is_connected


class NotPlanarError(ValueError):
    """The input graph has no planar embedding."""


class EmbeddingError(ValueError):
    """A rotation system is inconsistent with its graph or is not planar."""


class NotTwoConnectedError(ValueError):
    """A face boundary is not a simple cycle."""


class RotationSystem:
    """Clockwise cyclic neighbour order for every vertex ``1..n``."""

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray):
        self.n = int(n)
        self.indptr = np.asarray(indptr, dtype=np.int64)
        self.indices = np.asarray(indices, dtype=np.int64)
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)

    @classmethod
    def from_lists(cls, rot: Mapping[int, Sequence[int]] | Sequence[Sequence[int]], n: int | None = None) -> RotationSystem:
        """Build from ``v -> [neighbours in clockwise order]``.

        Sequences are indexed by vertex id; entry 0 is ignored.
        """
        if isinstance(rot, Mapping):
            n = max(rot, default=0) if n is None else n
            rows = [list(rot.get(v, ())) for v in range(1, n + 1)]
        else:
            rows = [list(r) for r in rot[1:]]
            n = len(rows) if n is None else n
        indptr = np.zeros(n + 2, dtype=np.int64)
        np.cumsum([len(r) for r in rows], out=indptr[2:])
        return cls(n, indptr, np.array([v for r in rows for v in r], dtype=np.int64))

    @classmethod
    def from_graph(cls, G: Graph) -> RotationSystem:
        """Use the adjacency order of ``G`` as the rotation."""
        return cls(G.n, G.indptr, G.indices)

    def order(self, v: int) -> list[int]:
        return self.indices[self.indptr[v] : self.indptr[v + 1]].tolist()

    def to_lists(self) -> list[list[int]]:
        ptr = self.indptr.tolist()
        idx = self.indices.tolist()
        return [idx[ptr[v] : ptr[v + 1]] for v in range(self.n + 1)]

    def graph(self) -> Graph:
        """The underlying graph, with adjacency in rotation order."""
        return Graph(self.n, self.indptr, self.indices)

    @cached_property
    def sources(self) -> np.ndarray:
        return np.repeat(np.arange(self.n + 1), np.diff(self.indptr))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RotationSystem):
            return NotImplemented
        return self.n == other.n and self.to_lists() == other.to_lists()

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"RotationSystem(n={self.n}, m={len(self.indices) // 2})"


@dataclass(frozen=True)
class Face:
    boundary: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.boundary)


@dataclass(frozen=True)
class FaceCatalog:
    """The large faces ``W_1, ..., W_k`` of an embedding, in boundary order."""

    faces: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.faces)

    def __len__(self) -> int:
        return len(self.faces)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.faces)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.faces[i]

    @cached_property
    def flat(self) -> np.ndarray:
        """All face vertices concatenated in catalogue order."""
        if not self.faces:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate([np.asarray(f, dtype=np.int64) for f in self.faces])

    @cached_property
    def face_ids(self) -> np.ndarray:
        """Face index of every entry of :attr:`flat`."""
        return np.repeat(np.arange(self.k), [len(f) for f in self.faces])

    @cached_property
    def pairwise_disjoint(self) -> bool:
        return len(np.unique(self.flat)) == len(self.flat)


class DCEL:
    """Half-edge structure of a rotation system.

    Half-edge ``h`` is slot ``h`` of the rotation's CSR arrays, running from
    ``origin[h]`` to ``target[h]``.
    """

    def __init__(self, rot: RotationSystem):
        n = rot.n
        self.rot = rot
        self.n = n
        src = rot.sources
        dst = rot.indices
        H = len(dst)
        self.origin = src
        self.target = dst
        # the two half-edges of an edge share the key (min, max); pairing them
        # needs one sort and no searching
        lo, hi = np.minimum(src, dst), np.maximum(src, dst)
        key = lo * (n + 1) + hi
        order = np.argsort(key)
        a, b = order[0::2], order[1::2]
        if H % 2 or not (
            np.array_equal(key[a], key[b])
            and np.all(src[a] != src[b])
            and np.all(key[a[1:]] > key[b[:-1]])
        ):
            raise EmbeddingError("rotation is not symmetric: some edge lacks its reverse")
        self.twin = np.empty(H, dtype=np.int64)
        self.twin[a] = b
        self.twin[b] = a
        deg = np.diff(rot.indptr)
        start = rot.indptr[dst]
        self.next = start + (self.twin - start + 1) % np.maximum(deg[dst], 1)
        self.prev = np.empty(H, dtype=np.int64)
        self.prev[self.next] = np.arange(H)
        self._label_faces(H)

    def _label_faces(self, H: int) -> None:
        """Number faces by their smallest half-edge, in increasing order."""
        nxt = self.next
        n2 = nxt[nxt]
        tri = nxt[n2] == np.arange(H)
        rep = np.minimum(np.minimum(np.arange(H), nxt), n2)
        rest = np.flatnonzero(~tri)
        if len(rest):
            # other faces: components of the next-permutation restricted to them
            local = np.full(H, -1, dtype=np.int64)
            local[rest] = np.arange(len(rest))
            perm = csr_matrix(
                (np.ones(len(rest), dtype=np.int8), local[nxt[rest]], np.arange(len(rest) + 1)),
                shape=(len(rest), len(rest)),
            )
            nc, lab = connected_components(perm, directed=True, connection="strong")
            low = np.full(nc, H, dtype=np.int64)
            np.minimum.at(low, lab, rest)
            rep[rest] = low[lab]
        is_rep = rep == np.arange(H)
        rank = np.cumsum(is_rep) - 1
        self.face = rank[rep]
        self.face_start = np.flatnonzero(is_rep)
        self.num_faces = len(self.face_start)
        self.face_length = np.bincount(self.face, minlength=self.num_faces)

    @property
    def num_half_edges(self) -> int:
        return len(self.target)

    def face_boundary(self, f: int) -> tuple[int, ...]:
        """Vertices of face ``f`` in walk order, starting at its first half-edge."""
        h0 = int(self.face_start[f])
        out = [int(self.origin[h0])]
        h = int(self.next[h0])
        nxt, org = self.next, self.origin
        while h != h0:
            out.append(int(org[h]))
            h = int(nxt[h])
        return tuple(out)

    def faces(self) -> list[Face]:
        return [Face(self.face_boundary(f)) for f in range(self.num_faces)]

    def simple_faces(self) -> bool:
        """True iff no face boundary repeats a vertex."""
        pairs = self.face * (self.n + 1) + self.origin
        return len(np.unique(pairs)) == len(pairs)


def build_dcel(G: Graph, rot: RotationSystem) -> DCEL:
    """Realise ``rot`` as a DCEL, checking it is a planar rotation of ``G``."""
    reason = validate_embedding(G, rot)
    if reason is not None:
        raise EmbeddingError(reason)
    return DCEL(rot)


def _euler_gap(dcel: DCEL) -> int:
    """``V - E + F - 2``; zero for a planar rotation of a connected graph."""
    return dcel.n - dcel.num_half_edges // 2 + dcel.num_faces - 2


def validate_embedding(G: Graph, rot: RotationSystem) -> str | None:
    """Return ``None`` if ``rot`` is a planar embedding of ``G``, else the first failed check."""
    if rot.n != G.n:
        return f"vertex count mismatch: graph has {G.n}, rotation has {rot.n}"
    if not np.array_equal(np.diff(rot.indptr), np.diff(G.indptr)):
        bad = int(np.flatnonzero(np.diff(rot.indptr) != np.diff(G.indptr))[0])
        return f"rotation at vertex {bad} is not a permutation of its adjacency"
    a = np.sort(rot.sources * (G.n + 1) + rot.indices)
    b = np.sort(G.sources * (G.n + 1) + G.indices)
    if not np.array_equal(a, b):
        src = rot.sources[np.argmax(a != b)] if len(a) else 0
        return f"rotation at vertex {int(src)} is not a permutation of its adjacency"
    if G.n > 1 and not is_connected(G):
        return "graph is not connected"
    try:
        dcel = DCEL(rot)
    except EmbeddingError as exc:
        return str(exc)
    gap = _euler_gap(dcel)
    if G.n > 0 and G.m > 0 and gap != 0:
        return f"Euler formula violated: V - E + F = {gap + 2}, expected 2"
    return None


def embed(G: Graph) -> RotationSystem:
    """Compute a planar rotation system of a connected graph.

    Raises :class:`NotPlanarError` for non-planar input and ``GraphError``
    for disconnected input.
    """
    if G.n > 1 and not is_connected(G):
        raise GraphError("embed needs a connected graph")
    H = nx.Graph()
    H.add_nodes_from(range(1, G.n + 1))
    H.add_edges_from(G.edges())
    planar, emb = nx.check_planarity(H)
    if not planar:
        raise NotPlanarError("graph is not planar")
    data = emb.get_data()
    return RotationSystem.from_lists({v: data.get(v, []) for v in range(1, G.n + 1)}, n=G.n)


def list_large_faces(dcel: DCEL) -> FaceCatalog:
    """All faces of length at least 4, each as its boundary vertex list."""
    large = np.flatnonzero(dcel.face_length >= 4)
    faces = tuple(dcel.face_boundary(int(f)) for f in large)
    # faces of length 3 or less cannot repeat a vertex in a simple graph
    for W in faces:
        if len(set(W)) != len(W):
            raise NotTwoConnectedError("a face boundary repeats a vertex; graph is not 2-connected")
    return FaceCatalog(faces)


def large_faces(G: Graph, rot: RotationSystem, *, check: bool = True) -> FaceCatalog:
    """Shortcut for ``list_large_faces(build_dcel(G, rot))``."""
    dcel = build_dcel(G, rot) if check else DCEL(rot)
    return list_large_faces(dcel)
