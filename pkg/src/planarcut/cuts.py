"""Cuts, the auxiliary triangulation, and how large faces sit relative to cycles."""

from __future__ import annotations

import enum
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .embedding import FaceCatalog, RotationSystem, validate_embedding
from .graph import Graph, GraphError, component_labels, components


class ContractError(RuntimeError):
    """An internal postcondition failed; the input violated an unchecked precondition."""


# -- large faces ----------------------------------------------------------------


def face_intersection(n: int, faces: FaceCatalog) -> int | None:
    """First vertex met twice when scanning the faces in order, or ``None``."""
    flat = faces.flat
    if len(flat) == 0:
        return None
    if flat.min() < 1 or flat.max() > n:
        raise GraphError("face vertex out of range")
    _, first = np.unique(flat, return_index=True)
    repeat = np.ones(len(flat), dtype=bool)
    repeat[first] = False
    hits = np.flatnonzero(repeat)
    return int(flat[hits[0]]) if len(hits) else None


@dataclass(frozen=True)
class AuxiliaryGraph:
    """The triangulation obtained by adding an apex inside every large face.

    The apex of ``faces[i]`` is vertex ``n + 1 + i``.
    """

    graph: Graph
    rotation: RotationSystem
    faces: FaceCatalog
    n: int

    def face_vertex(self, i: int) -> int:
        return self.n + 1 + i

    def face_index(self, W: int | Sequence[int]) -> int:
        if isinstance(W, (int, np.integer)):
            if not 0 <= W < self.faces.k:
                raise IndexError(f"no large face {W}")
            return int(W)
        key = frozenset(W)
        for i, f in enumerate(self.faces):
            if frozenset(f) == key:
                return i
        raise GraphError("not a large face of this graph")

    def is_face_vertex(self, v: int) -> bool:
        return v > self.n


def build_auxiliary(G: Graph, rot: RotationSystem, faces: FaceCatalog) -> AuxiliaryGraph:
    """Add a vertex inside each large face, joined to the whole boundary.

    The apex's rotation is the reversed boundary and at each boundary vertex it
    is inserted into the angle the face occupies, so the result stays plane.
    """
    reason = validate_embedding(G, rot)
    if reason is not None:
        raise GraphError(f"invalid rotation: {reason}")
    lists = rot.to_lists()
    n = G.n
    for i, W in enumerate(faces):
        a = n + 1 + i
        L = len(W)
        for j, v in enumerate(W):
            pred, succ = W[j - 1], W[(j + 1) % L]
            r = lists[v]
            if pred not in r or succ not in r:
                raise GraphError(f"face {i} is not a face of the rotation at vertex {v}")
            p = r.index(pred)
            if r[(p + 1) % len(r)] != succ:
                raise GraphError(f"face {i} is not a face of the rotation at vertex {v}")
            r.insert(p + 1, a)
        lists.append(list(reversed(W)))
    aux_rot = RotationSystem.from_lists(lists)
    return AuxiliaryGraph(aux_rot.graph(), aux_rot, faces, n)


def neighborhood_cut(G: Graph, u: int) -> frozenset[int]:
    """The neighbourhood of ``u``; a minimal cut when ``G`` is 4-connected and planar."""
    return frozenset(G.neighbors(u))


# -- cycles of the auxiliary graph ---------------------------------------------


def _check_cycle(H: Graph, C: Sequence[int], *, chordless: bool = True) -> None:
    if len(C) < 3 or len(set(C)) != len(C):
        raise GraphError("a cycle needs at least 3 distinct vertices")
    nbrs = H.neighbor_sets
    L = len(C)
    for i, v in enumerate(C):
        if not 1 <= v <= H.n:
            raise GraphError(f"vertex {v} not in graph")
        if C[(i + 1) % L] not in nbrs[v]:
            raise GraphError(f"{v} and {C[(i + 1) % L]} are not adjacent")
    if chordless:
        on = set(C)
        for i, v in enumerate(C):
            if len(nbrs[v] & on) != 2:
                raise GraphError(f"cycle has a chord at {v}")


def is_chordless_cycle(H: Graph, S: Iterable[int]) -> bool:
    """True iff ``H[S]`` is a single cycle (so chordless as a cycle of ``H``)."""
    S = set(S)
    if len(S) < 3:
        return False
    nbrs = H.neighbor_sets
    if any(len(nbrs[v] & S) != 2 for v in S):
        return False
    start = next(iter(S))
    seen, todo = {start}, [start]
    while todo:
        for w in nbrs[todo.pop()] & S:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen == S


def cycle_order(H: Graph, S: Iterable[int]) -> list[int]:
    """Vertices of the induced cycle ``H[S]`` in cyclic order."""
    S = set(S)
    if not is_chordless_cycle(H, S):
        raise GraphError("set does not induce a cycle")
    nbrs = H.neighbor_sets
    start = min(S)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = min(w for w in nbrs[cur] & S if w != prev)
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def cycle_sides(aux: AuxiliaryGraph, C: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
    """Vertex sets of the two regions of a cycle of the auxiliary triangulation.

    The first region is the one on the clockwise side of the traversal
    direction: at each ``c_i`` it contains the neighbours that come after
    ``c_{i+1}`` and before ``c_{i-1}`` in the rotation. Reversing ``C`` swaps
    the two regions.
    """
    H = aux.graph
    _check_cycle(H, C, chordless=False)
    on = set(C)
    lists = aux.rotation.to_lists()
    seeds: tuple[set[int], set[int]] = (set(), set())
    L = len(C)
    for i, c in enumerate(C):
        r = lists[c]
        d = len(r)
        p = r.index(C[(i + 1) % L])
        side = 0
        for step in range(1, d):
            w = r[(p + step) % d]
            if w == C[i - 1]:
                side = 1
                continue
            if w not in on:
                seeds[side].add(w)
    regions = []
    nbrs = H.neighbor_sets
    for s in seeds:
        seen = set(s)
        todo = deque(s)
        while todo:
            for w in nbrs[todo.popleft()]:
                if w not in on and w not in seen:
                    seen.add(w)
                    todo.append(w)
        regions.append(frozenset(seen))
    if regions[0] & regions[1]:
        raise ContractError("cycle regions overlap; rotation is not planar")
    return regions[0], regions[1]


class Relation(str, enum.Enum):
    TOUCHES = "touches"
    INSIDE = "inside"
    OUTSIDE = "outside"
    COVERS = "covers"
    CROSSES = "crosses"


@dataclass(frozen=True)
class FaceCycleRelation:
    kind: Relation
    split: bool | None = None


def _face_adjacent(W: Sequence[int], x: int, y: int) -> bool:
    i, L = W.index(x), len(W)
    return W[(i + 1) % L] == y or W[i - 1] == y


def classify_face_vs_cycle(
    W: int | Sequence[int],
    C: Sequence[int],
    aux: AuxiliaryGraph,
    pair: tuple[int, int] | None = None,
) -> FaceCycleRelation:
    """How large face ``W`` relates to the chordless cycle ``C`` of the auxiliary graph.

    ``W`` is a face index or its boundary. When ``pair`` is given, also
    report whether ``W`` splits those two cycle vertices.
    """
    _check_cycle(aux.graph, C)
    i = aux.face_index(W)
    face = list(aux.faces[i])
    apex = aux.face_vertex(i)
    on = set(C)
    meet = [v for v in face if v in on]
    if apex in on:
        kind = Relation.COVERS
    elif any(not _face_adjacent(face, x, y) for a, x in enumerate(meet) for y in meet[a + 1 :]):
        kind = Relation.CROSSES
    elif meet:
        kind = Relation.TOUCHES
    else:
        interior, _ = cycle_sides(aux, C)
        kind = Relation.INSIDE if apex in interior else Relation.OUTSIDE
    split = None if pair is None else splits(face, C, *pair)
    return FaceCycleRelation(kind, split)


def splits(W: Iterable[int], C: Sequence[int], s: int, t: int) -> bool:
    """True iff ``W`` has a vertex strictly inside each of the two ``s``-``t`` arcs of ``C``."""
    C = list(C)
    L = len(C)
    i, j = C.index(s), C.index(t)
    if (j - i) % L in (0, 1, L - 1):
        raise GraphError(f"{s} and {t} must be distinct and non-adjacent on the cycle")
    if i > j:
        i, j = j, i
    arc1 = set(C[i + 1 : j])
    arc2 = set(C[j + 1 :] + C[:i])
    Wset = set(W)
    return bool(Wset & arc1) and bool(Wset & arc2)


def zeta(C: Sequence[int], aux: AuxiliaryGraph) -> int:
    """Number of large faces crossing the chordless cycle ``C``."""
    return sum(classify_face_vs_cycle(i, C, aux).kind is Relation.CROSSES for i in range(aux.faces.k))


# -- cut verification -------------------------------------------------------------


@dataclass(frozen=True)
class CutReport:
    """Evidence about a vertex set ``S`` as a cut.

    ``witnesses[v]`` lists the side components (by index) that ``v`` has a
    neighbour in; ``S`` is minimal iff every list is complete.
    """

    cut: frozenset[int]
    side_components: list[list[int]]
    cut_components: list[list[int]]
    witnesses: dict[int, tuple[int, ...]] = field(repr=False)

    @property
    def is_cut(self) -> bool:
        return len(self.side_components) >= 2

    @property
    def minimal(self) -> bool:
        k = len(self.side_components)
        return self.is_cut and all(len(w) == k for w in self.witnesses.values())

    @property
    def disconnected(self) -> bool:
        return len(self.cut_components) >= 2

    @property
    def stable(self) -> bool:
        return len(self.cut_components) == len(self.cut)


def verify_cut(G: Graph, S: Iterable[int]) -> CutReport:
    """Components on both sides of ``S`` and per-vertex minimality witnesses.

    A cut is minimal exactly when every vertex of it has a neighbour in every
    component of ``G - S``.
    """
    S = frozenset(int(v) for v in S)
    for v in S:
        if not 1 <= v <= G.n:
            raise GraphError(f"vertex {v} not in graph")
    s_arr = np.fromiter(sorted(S), dtype=np.int64, count=len(S))
    labels = component_labels(G, s_arr)
    sides = _groups(labels)
    witnesses = {}
    for v in s_arr.tolist():
        lab = labels[G.adj(v)]
        witnesses[v] = tuple(np.unique(lab[lab >= 0]).tolist())
    inside = np.ones(G.n + 1, dtype=bool)
    inside[s_arr] = False
    inside[0] = False
    cut_labels = component_labels(G, np.flatnonzero(inside))
    return CutReport(S, sides, _groups(cut_labels), witnesses)


def _groups(labels: np.ndarray) -> list[list[int]]:
    live = np.flatnonzero(labels >= 0)
    if len(live) == 0:
        return []
    order = np.argsort(labels[live], kind="stable")
    return [g.tolist() for g in np.split(live[order], np.flatnonzero(np.diff(labels[live][order])) + 1)]


def extend_min_cut_to_auxiliary(G: Graph, aux: AuxiliaryGraph, R: Iterable[int]) -> frozenset[int]:
    """The minimal cut of the auxiliary graph whose trace on ``G`` is ``R``.

    An apex joins ``R`` exactly when its face meets ``R`` in two vertices that
    are not consecutive on the face.
    """
    R = frozenset(R)
    if not verify_cut(G, R).minimal:
        raise GraphError("R is not a minimal cut of G")
    S = set(R)
    for i, W in enumerate(aux.faces):
        meet = [v for v in W if v in R]
        if len(meet) == 2 and not _face_adjacent(list(W), *meet):
            S.add(aux.face_vertex(i))
    if not is_chordless_cycle(aux.graph, S):
        raise ContractError("extension does not induce a chordless cycle; is G 3-connected?")
    return frozenset(S)
