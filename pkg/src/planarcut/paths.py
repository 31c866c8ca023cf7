"""Path surgery: truncation, greedy chord removal and face skipping.

Paths are vertex sequences. A host may carry extra directed *arcs*, given as
a mapping ``u -> [v, ...]``; arcs are usable only from ``u`` to ``v``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from .embedding import FaceCatalog
from .graph import Graph, lookup_array, subset_array


class PathError(ValueError):
    """A path violates the precondition of a path operation."""


def truncate_path(A: Iterable[int], B: Iterable[int], P: Sequence[int], n: int | None = None) -> list[int]:
    """Shortest tail-to-head segment of ``P`` running from ``A`` to ``B``.

    Walks ``P`` remembering the latest vertex of ``A`` and stops at the first
    vertex of ``B``; the segment between them is internally disjoint from
    ``A`` and ``B``.
    """
    P = list(P)
    if not P:
        raise PathError("empty path")
    A, B = list(A), list(B)
    if n is None:
        n = max(P + A + B)
    inA = subset_array(A, n, padded=True)[P]
    inB = subset_array(B, n, padded=True)[P]
    if not inA[0]:
        raise PathError(f"path starts at {P[0]}, outside A")
    hits = np.flatnonzero(inB)
    if len(hits) == 0:
        raise PathError("path never reaches B")
    b = int(hits[0])
    a = int(np.flatnonzero(inA[: b + 1])[-1])
    return P[a : b + 1]


def remove_chords(G: Graph, P: Sequence[int], arcs: Mapping[int, Sequence[int]] | None = None) -> list[int]:
    """Greedy chordless subpath of ``P`` from its first to its last vertex.

    From the current vertex, jump to the neighbour (or arc head) that lies
    furthest along ``P``. Ties cannot occur since positions are distinct.
    """
    P = list(P)
    k = len(P)
    X = lookup_array(P, G.n, padded=True)
    ptr, idx = G.indptr, G.indices
    Q = [P[0]]
    i = 1
    while i < k:
        p = P[i - 1]
        row = idx[ptr[p] : ptr[p + 1]]
        j = int(X[row].max()) if len(row) else 0
        if arcs is not None:
            for v in arcs.get(p, ()):
                j = max(j, int(X[v]))
        if j <= i:
            raise PathError(f"no forward step from {p}; consecutive path vertices must be adjacent")
        Q.append(P[j - 1])
        i = j
    return Q


@dataclass(frozen=True)
class Skipper:
    """Subsequence of a path with no middle vertex relative to a face list.

    ``hops`` maps a position ``i`` of :attr:`vertices` to the index of the
    face whose shortcut joins ``vertices[i]`` to ``vertices[i + 1]``.
    """

    vertices: tuple[int, ...]
    hops: dict[int, int] = field(default_factory=dict)
    passes: int = 1

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


def _face_arcs(P: Sequence[int], faces: FaceCatalog, n: int) -> dict[tuple[int, int], int]:
    """Arc from the first to the last vertex of ``P`` on each face it meets twice or more."""
    X = lookup_array(P, n, padded=True)
    if faces.k == 0:
        return {}
    pos = X[faces.flat]
    hit = pos > 0
    if not hit.any():
        return {}
    fid, pos = faces.face_ids[hit], pos[hit]
    lo = np.full(faces.k, np.iinfo(np.int64).max)
    hi = np.zeros(faces.k, dtype=np.int64)
    np.minimum.at(lo, fid, pos)
    np.maximum.at(hi, fid, pos)
    used = np.flatnonzero((hi > 0) & (lo < hi))
    return {(P[lo[f] - 1], P[hi[f] - 1]): int(f) for f in used.tolist()}


def path_skipper(G: Graph, P: Sequence[int], faces: FaceCatalog, max_passes: int | None = None) -> Skipper:
    """Skipper of ``P`` relative to the pairwise disjoint faces in ``faces``.

    One pass adds, for every face meeting the current path in at least two
    vertices, an arc from its first to its last vertex on the path, then
    removes chords greedily. Passes repeat until nothing changes (or
    ``max_passes`` is reached); at that point every face meets the result in
    at most two consecutive vertices.
    """
    if not faces.pairwise_disjoint:
        raise PathError("path_skipper needs pairwise disjoint faces")
    cur = list(P)
    passes = 0
    arc_face: dict[tuple[int, int], int] = {}
    while True:
        passes += 1
        arc_face = _face_arcs(cur, faces, G.n)
        arcs: dict[int, list[int]] = {}
        for a, b in arc_face:
            arcs.setdefault(a, []).append(b)
        nxt = remove_chords(G, cur, arcs)
        done = len(nxt) == len(cur)
        cur = nxt
        if done or (max_passes is not None and passes >= max_passes):
            break
    nbrs = G.neighbor_sets if G.n < 4096 else None
    hops = {}
    for i in range(len(cur) - 1):
        a, b = cur[i], cur[i + 1]
        if (a, b) in arc_face and not _adjacent(G, a, b, nbrs):
            hops[i] = arc_face[(a, b)]
    return Skipper(tuple(cur), hops, passes)


def _adjacent(G: Graph, a: int, b: int, nbrs) -> bool:
    if nbrs is not None:
        return b in nbrs[a]
    return bool(np.any(G.adj(a) == b))


def middle_vertices(P: Sequence[int], faces: Iterable[Iterable[int]]) -> list[int]:
    """Vertices of ``P`` with an earlier and a later vertex of ``P`` on the same face."""
    pos = {v: i for i, v in enumerate(P)}
    out = []
    for W in faces:
        hits = sorted(pos[v] for v in W if v in pos)
        out.extend(P[i] for i in hits[1:-1])
    return sorted(out, key=pos.__getitem__)
