"""Internally disjoint paths and vertex-connectivity checks.

Paths are found with unit-capacity flow on the vertex-split digraph: vertex
``v`` becomes ``v_in -> v_out`` of capacity 1 and every edge ``uv`` becomes
``u_out -> v_in`` and ``v_out -> u_in``. Augmentation is breadth-first.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .graph import Graph, GraphError, csr_rows


@dataclass(frozen=True)
class PathBundle:
    """Internally disjoint ``s``-``t`` paths."""

    s: int
    t: int
    paths: tuple[tuple[int, ...], ...]

    @property
    def kappa(self) -> int:
        return len(self.paths)

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)


def _split_network(G: Graph, s: int, t: int, cap: int) -> csr_matrix:
    n = G.n
    v = np.arange(1, n + 1)
    inner_cap = np.ones(n, dtype=np.int32)
    inner_cap[[s - 1, t - 1]] = cap
    rows = np.concatenate([2 * v, 2 * G.sources[G.indptr[1] :] + 1])
    cols = np.concatenate([2 * v + 1, 2 * G.indices])
    data = np.concatenate([inner_cap, np.ones(len(G.indices), dtype=np.int32)])
    size = 2 * n + 2
    return csr_matrix((data, (rows, cols)), shape=(size, size))


def menger_paths(G: Graph, s: int, t: int, cap: int | None = None) -> PathBundle:
    """A maximum family of internally disjoint ``s``-``t`` paths, at most ``cap`` of them.

    If ``s`` and ``t`` are adjacent the edge ``st`` counts as one path.
    Every returned path is simple and starts at ``s``, ends at ``t``.
    """
    if s == t:
        raise GraphError("menger_paths needs distinct endpoints")
    for x in (s, t):
        if not 1 <= x <= G.n:
            raise GraphError(f"vertex {x} not in graph")
    limit = G.degree(s) if cap is None else min(cap, G.degree(s))
    if limit <= 0:
        return PathBundle(s, t, ())
    net = _split_network(G, s, t, limit)
    # source s_in carries at most `limit` units through s_in -> s_out
    res = maximum_flow(net, 2 * s, 2 * t, method="edmonds_karp")
    flow = res.flow.tocoo()
    pos = flow.data > 0
    r, c = flow.row[pos], flow.col[pos]
    hop = (r % 2 == 1) & (c % 2 == 0)
    succ: dict[int, list[int]] = {}
    for a, b in zip((r[hop] // 2).tolist(), (c[hop] // 2).tolist()):
        if a != b:
            succ.setdefault(a, []).append(b)
    paths = []
    for first in sorted(succ.get(s, ())):
        path = [s, first]
        while path[-1] != t:
            path.append(succ[path[-1]][0])
        paths.append(tuple(path))
    bundle = PathBundle(s, t, tuple(paths))
    _check_bundle(bundle)
    return bundle


def _check_bundle(bundle: PathBundle) -> None:
    seen: set[int] = set()
    for p in bundle.paths:
        if p[0] != bundle.s or p[-1] != bundle.t:
            raise AssertionError("path endpoints wrong")
        inner = p[1:-1]
        if len(set(inner)) != len(inner) or seen.intersection(inner) or {bundle.s, bundle.t} & set(inner):
            raise AssertionError("paths not internally disjoint")
        seen.update(inner)


def local_connectivity(G: Graph, s: int, t: int, cap: int | None = None) -> int:
    return menger_paths(G, s, t, cap).kappa


def is_k_connected(G: Graph, k: int) -> bool:
    """True iff ``G`` has more than ``k`` vertices and no cut of fewer than ``k`` vertices.

    Any cut ``T`` with ``|T| < k`` misses one of the vertices ``1..k``, and
    that vertex is separated from some non-neighbour; so it suffices to test
    those ``k`` vertices against every non-neighbour.
    """
    if G.n < k + 1:
        return False
    if k <= 0:
        return True
    nbrs = G.neighbor_sets
    for v in range(1, k + 1):
        if G.degree(v) < k:
            return False
        for w in range(1, G.n + 1):
            if w == v or w in nbrs[v]:
                continue
            if local_connectivity(G, v, w, cap=k) < k:
                return False
    return True


def disjoint_paths(G: Graph, A, B, cap: int | None = None) -> list[list[int]]:
    """A maximum family of vertex-disjoint ``A``-``B`` paths, at most ``cap`` of them.

    Same answer as unit-capacity flow on the vertex-split digraph with a
    source joined to ``A`` and a sink joined from ``B``, but the residual
    graph is never built: each augmenting path is found by a breadth-first
    search that expands a whole level at once and stops at the sink, so a
    search costs the size of the region it explores.

    Flow is kept as ``pred``/``succ`` per vertex: ``0`` unused, ``-1`` the
    source (for ``pred``) or sink (for ``succ``), else the neighbouring vertex.
    """
    n = G.n
    A = np.unique(np.asarray(list(A), dtype=np.int64))
    B = np.unique(np.asarray(list(B), dtype=np.int64))
    if len(A) == 0 or len(B) == 0:
        return []
    if A.min() < 1 or B.min() < 1 or max(A.max(), B.max()) > n:
        raise GraphError("terminal vertex not in graph")
    limit = min(len(A), len(B)) if cap is None else min(cap, len(A), len(B))
    ptr, idx = G.indptr, G.indices
    pred = np.zeros(n + 1, dtype=np.int64)
    succ = np.zeros(n + 1, dtype=np.int64)
    in_b = np.zeros(n + 1, dtype=bool)
    in_b[B] = True
    count = 0
    while count < limit:
        end = _augment(ptr, idx, A, in_b, pred, succ)
        if end is None:
            break
        count += 1
    paths = []
    for a in np.flatnonzero(pred == -1).tolist():
        path = [a]
        while succ[path[-1]] != -1:
            path.append(int(succ[path[-1]]))
        paths.append(path)
    return sorted(paths)


def _augment(ptr, idx, A, in_b, pred, succ) -> int | None:
    n = len(pred) - 1
    # parent of in(v): -1 source, 2u + 1 for out(u); parent of out(u): 2v for in(v)
    par_in = np.full(n + 1, -2, dtype=np.int64)
    par_out = np.full(n + 1, -2, dtype=np.int64)
    f_in = A[pred[A] != -1]
    par_in[f_in] = -1
    f_out = f_in[:0]
    end = None
    while len(f_in) or len(f_out):
        # out-nodes that can reach the sink
        hit = f_out[in_b[f_out] & (succ[f_out] != -1)]
        if len(hit):
            end = int(hit[0])
            break
        new_out_src, new_out = [], []
        p = pred[f_in]
        fwd = f_in[p == 0]
        new_out_src.append(fwd)
        new_out.append(fwd)
        rev = p > 0
        new_out_src.append(f_in[rev])
        new_out.append(p[rev])
        new_in_src, new_in = [], []
        u, w = csr_rows(ptr, idx, f_out)
        ok = w != succ[u]
        new_in_src.append(u[ok])
        new_in.append(w[ok])
        back = f_out[pred[f_out] != 0]
        new_in_src.append(back)
        new_in.append(back)

        src_o, tgt_o = np.concatenate(new_out_src), np.concatenate(new_out)
        fresh = par_out[tgt_o] == -2
        src_o, tgt_o = src_o[fresh], tgt_o[fresh]
        par_out[tgt_o] = 2 * src_o
        # several sources may claim one target; the last write wins
        keep = par_out[tgt_o] == 2 * src_o
        src_i, tgt_i = np.concatenate(new_in_src), np.concatenate(new_in)
        fresh = par_in[tgt_i] == -2
        src_i, tgt_i = src_i[fresh], tgt_i[fresh]
        par_in[tgt_i] = 2 * src_i + 1
        f_out = tgt_o[keep]
        f_in = tgt_i[par_in[tgt_i] == 2 * src_i + 1]
    if end is None:
        return None
    cancel, add = [], []
    node = 2 * end + 1
    add.append(("sink", end))
    while node != -1:
        if node % 2:
            u = node // 2
            parent = int(par_out[u])
            v = parent // 2
            if v != u:
                cancel.append((u, v))  # in(v) -> out(u) undoes flow u -> v
        else:
            v = node // 2
            parent = int(par_in[v])
            if parent == -1:
                add.append(("source", v))
            else:
                u = parent // 2
                if u != v:
                    add.append(("edge", u, v))
        node = parent
    for u, v in cancel:
        succ[u] = 0
        pred[v] = 0
    for item in add:
        if item[0] == "sink":
            succ[item[1]] = -1
        elif item[0] == "source":
            pred[item[1]] = -1
        else:
            succ[item[1]] = item[2]
            pred[item[2]] = item[1]
    return end
