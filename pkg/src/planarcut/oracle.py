"""Brute-force ground truth on small graphs.

Vertex sets are Python ints used as bitmasks (bit ``v - 1`` is vertex
``v``). Minimal cuts are found either by scanning every subset or by closing
the set of minimal separators under the usual neighbourhood moves, then
keeping the separators all of whose components are full.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import combinations

from .connectivity import is_k_connected, menger_paths
from .cuts import (
    CutReport,
    build_auxiliary,
    extend_min_cut_to_auxiliary,
    face_intersection,
    is_chordless_cycle,
    verify_cut,
)
from .embedding import RotationSystem, large_faces
from .graph import Graph

DEFAULT_BOUND = 14


class OracleBoundError(ValueError):
    """The graph is too large for exhaustive enumeration."""


# -- bitmask helpers --------------------------------------------------------------


def _masks(G: Graph) -> list[int]:
    nb = [0] * G.n
    for v in range(1, G.n + 1):
        m = 0
        for w in G.adj(v).tolist():
            m |= 1 << (w - 1)
        nb[v - 1] = m
    return nb


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(S) -> int:
    m = 0
    for v in S:
        m |= 1 << (v - 1)
    return m


def _vertices(mask: int) -> frozenset[int]:
    return frozenset(b + 1 for b in _bits(mask))


def _reach(nb: list[int], start: int, allowed: int) -> int:
    comp = frontier = start
    while frontier:
        new = 0
        for b in _bits(frontier):
            new |= nb[b]
        new &= allowed & ~comp
        comp |= new
        frontier = new
    return comp


def _components(nb: list[int], allowed: int) -> list[int]:
    comps = []
    rest = allowed
    while rest:
        comp = _reach(nb, rest & -rest, rest)
        comps.append(comp)
        rest &= ~comp
    return comps


def _boundary(nb: list[int], C: int) -> int:
    out = 0
    for b in _bits(C):
        out |= nb[b]
    return out & ~C


def _is_minimal_cut(nb: list[int], full: int, S: int) -> bool:
    comps = _components(nb, full & ~S)
    return len(comps) >= 2 and all(_boundary(nb, C) == S for C in comps)


# -- inventory --------------------------------------------------------------------


@dataclass(frozen=True)
class MinimalCutInventory:
    """Every minimal cut of a graph, canonically sorted, with its report."""

    graph: Graph
    cuts: tuple[frozenset[int], ...]
    reports: tuple[CutReport, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.cuts)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.cuts)

    def __contains__(self, S) -> bool:
        return frozenset(S) in set(self.cuts)

    @property
    def disconnected(self) -> list[frozenset[int]]:
        return [S for S, r in zip(self.cuts, self.reports) if r.disconnected]


def _scan(nb: list[int], n: int) -> set[int]:
    full = (1 << n) - 1
    return {S for S in range(1, full) if _is_minimal_cut(nb, full, S)}


def _separators(nb: list[int], n: int) -> set[int]:
    full = (1 << n) - 1
    found: set[int] = set()
    todo: list[int] = []

    def push(removed: int) -> None:
        for C in _components(nb, full & ~removed):
            S = _boundary(nb, C)
            if S and S not in found:
                found.add(S)
                todo.append(S)

    for v in range(n):
        push(nb[v] | (1 << v))
    while todo:
        S = todo.pop()
        for x in _bits(S):
            push(S | nb[x])
    return {S for S in found if _is_minimal_cut(nb, full, S)}


def _canonical(cuts) -> tuple[frozenset[int], ...]:
    return tuple(sorted((frozenset(S) for S in cuts), key=lambda S: (len(S), sorted(S))))


def enumerate_minimal_cuts(G: Graph, bound: int = DEFAULT_BOUND, method: str = "separators") -> MinimalCutInventory:
    """All minimal cuts of ``G``: sets ``S`` whose every vertex sees every component of ``G - S``.

    ``method`` is ``"separators"`` (closure over minimal separators, fast) or
    ``"scan"`` (every subset, slow but obviously complete). Refuses graphs
    with more than ``bound`` vertices.
    """
    if G.n > bound:
        raise OracleBoundError(f"graph has {G.n} vertices, oracle bound is {bound}")
    nb = _masks(G)
    if method == "scan":
        masks = _scan(nb, G.n)
    elif method == "separators":
        masks = _separators(nb, G.n)
    else:
        raise ValueError(f"unknown method {method!r}")
    cuts = _canonical(_vertices(S) for S in masks)
    return MinimalCutInventory(G, cuts, tuple(verify_cut(G, S) for S in cuts))


def is_cleavable(G: Graph, bound: int = DEFAULT_BOUND) -> bool:
    """True iff every minimal cut of ``G`` induces a connected subgraph."""
    return not enumerate_minimal_cuts(G, bound).disconnected


def min_separator_size(G: Graph, s: int, t: int) -> int:
    """Smallest number of vertices (other than ``s``, ``t``) separating two non-adjacent vertices."""
    nb = _masks(G)
    if nb[s - 1] >> (t - 1) & 1:
        raise ValueError("s and t are adjacent")
    full = (1 << G.n) - 1
    others = [v for v in range(G.n) if v not in (s - 1, t - 1)]
    for size in range(len(others) + 1):
        for T in combinations(others, size):
            removed = _mask_of(v + 1 for v in T)
            if not _reach(nb, 1 << (s - 1), full & ~removed) >> (t - 1) & 1:
                return size
    raise AssertionError("unreachable: removing every other vertex separates s and t")


# -- checks -----------------------------------------------------------------------


@dataclass
class CheckResult:
    """Outcome of one oracle check over one graph.

    ``status`` is ``"pass"``, ``"fail"`` or ``"skip"``; ``checked`` counts
    the objects (cuts, pairs) examined.
    """

    name: str
    status: str = "pass"
    checked: int = 0
    violations: list[str] = field(default_factory=list)
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def fail(self, msg: str) -> None:
        self.status = "fail"
        self.violations.append(msg)

    def line(self) -> str:
        extra = f" ({self.note})" if self.note else ""
        head = f"{self.name}: {self.status.upper()} [{self.checked} checked]{extra}"
        return "\n".join([head] + [f"  - {v}" for v in self.violations[:10]])


def _skip(name: str, why: str) -> CheckResult:
    return CheckResult(name, "skip", note=why)


def _shape(nb: list[int], S: int) -> tuple[str, list[int]]:
    """``("cycle", [])``, ``("path", [end1, end2])`` or ``("other", [])`` for ``G[S]``."""
    degs = {b: bin(nb[b] & S).count("1") for b in _bits(S)}
    connected = _reach(nb, S & -S, S) == S
    if not connected or max(degs.values()) > 2:
        return "other", []
    ends = [b for b, d in degs.items() if d <= 1]
    if not ends and len(degs) >= 3:
        return "cycle", []
    if len(ends) == 2 or len(degs) == 1:
        return "path", ends if len(ends) == 2 else ends * 2
    return "other", []


def check_near_triangulation_cut_shapes(
    G: Graph, rot: RotationSystem, inventory: MinimalCutInventory | None = None
) -> CheckResult:
    """Each minimal cut is a chordless cycle meeting the large face in nothing, a
    vertex or an edge, or a path meeting the large face exactly in its ends."""
    res = CheckResult("shapes")
    faces = large_faces(G, rot)
    if faces.k > 1:
        raise ValueError(f"not a near-triangulation: {faces.k} large faces")
    inv = inventory or enumerate_minimal_cuts(G)
    nb = _masks(G)
    W = _mask_of(faces[0]) if faces.k else 0
    for cut in inv:
        S = _mask_of(cut)
        kind, ends = _shape(nb, S)
        X = S & W
        res.checked += 1
        if kind == "cycle":
            size = bin(X).count("1")
            if size == 2:
                a, b = _bits(X)
                good = bool(nb[a] >> b & 1)
            else:
                good = size <= 1
            if not good:
                res.fail(f"cycle {sorted(cut)} meets the large face in {sorted(_vertices(X))}")
        elif kind == "path":
            if X != _mask_of(e + 1 for e in ends):
                res.fail(f"path {sorted(cut)} meets the large face in {sorted(_vertices(X))}")
        else:
            res.fail(f"{sorted(cut)} induces neither a cycle nor a path")
    return res


def check_component_bound(G: Graph, rot: RotationSystem, inventory: MinimalCutInventory | None = None) -> CheckResult:
    """Every minimal cut induces at most ``max(k, 1)`` components, ``k`` the number of large faces."""
    faces = large_faces(G, rot)
    bound = max(faces.k, 1)
    res = CheckResult("bound", note=f"k={faces.k}")
    inv = inventory or enumerate_minimal_cuts(G)
    worst = 0
    for cut, rep in zip(inv.cuts, inv.reports):
        res.checked += 1
        c = len(rep.cut_components)
        worst = max(worst, c)
        if c > bound:
            res.fail(f"{sorted(cut)} induces {c} components, bound {bound}")
    res.note += f", max components={worst}"
    return res


def check_no_stable_cut(G: Graph, rot: RotationSystem, inventory: MinimalCutInventory | None = None) -> CheckResult:
    """No minimal cut is edgeless, for 3-connected graphs with pairwise disjoint large faces."""
    faces = large_faces(G, rot)
    if not is_k_connected(G, 3):
        return _skip("stable", "precondition: graph is not 3-connected")
    if face_intersection(G.n, faces) is not None:
        return _skip("stable", "precondition: large faces intersect")
    res = CheckResult("stable")
    inv = inventory or enumerate_minimal_cuts(G)
    for cut, rep in zip(inv.cuts, inv.reports):
        res.checked += 1
        if rep.stable:
            res.fail(f"{sorted(cut)} is a stable minimal cut")
    return res


def check_two_sides(G: Graph, inventory: MinimalCutInventory | None = None) -> CheckResult:
    """In a 3-connected planar graph every minimal cut leaves exactly two components."""
    if not is_k_connected(G, 3):
        return _skip("two-sides", "precondition: graph is not 3-connected")
    res = CheckResult("two-sides")
    inv = inventory or enumerate_minimal_cuts(G)
    for cut, rep in zip(inv.cuts, inv.reports):
        res.checked += 1
        if len(rep.side_components) != 2:
            res.fail(f"{sorted(cut)} leaves {len(rep.side_components)} components")
    return res


def check_unique_extension(
    G: Graph, rot: RotationSystem, inventory: MinimalCutInventory | None = None, aux_bound: int = 22
) -> CheckResult:
    """Each minimal cut ``R`` of ``G`` is the trace of exactly one minimal cut of the
    auxiliary graph, that cut is what :func:`extend_min_cut_to_auxiliary` returns,
    and every minimal cut of the auxiliary graph induces a chordless cycle."""
    if not is_k_connected(G, 3):
        return _skip("extension", "precondition: graph is not 3-connected")
    faces = large_faces(G, rot)
    aux = build_auxiliary(G, rot, faces)
    if aux.graph.n > aux_bound:
        return _skip("extension", f"auxiliary graph has {aux.graph.n} vertices, bound {aux_bound}")
    res = CheckResult("extension")
    inv = inventory or enumerate_minimal_cuts(G)
    aux_inv = enumerate_minimal_cuts(aux.graph, bound=aux_bound)
    traces: dict[frozenset[int], list[frozenset[int]]] = {}
    for S in aux_inv:
        if not is_chordless_cycle(aux.graph, S):
            res.fail(f"auxiliary minimal cut {sorted(S)} is not a chordless cycle")
        traces.setdefault(frozenset(v for v in S if v <= G.n), []).append(S)
    for R in inv:
        res.checked += 1
        hits = traces.get(R, [])
        if len(hits) != 1:
            res.fail(f"{sorted(R)} is the trace of {len(hits)} auxiliary minimal cuts")
            continue
        ext = extend_min_cut_to_auxiliary(G, aux, R)
        if ext != hits[0]:
            res.fail(f"extension of {sorted(R)} is {sorted(ext)}, oracle says {sorted(hits[0])}")
    return res


def check_menger(G: Graph) -> CheckResult:
    """Flow paths are internally disjoint and their count equals the brute-force
    separator size, on every non-adjacent pair."""
    res = CheckResult("menger")
    nbrs = G.neighbor_sets
    for s in range(1, G.n + 1):
        for t in range(s + 1, G.n + 1):
            if t in nbrs[s]:
                continue
            res.checked += 1
            bundle = menger_paths(G, s, t)
            inner: list[int] = []
            for p in bundle:
                if p[0] != s or p[-1] != t or len(set(p)) != len(p):
                    res.fail(f"path {p} is not a simple {s}-{t} path")
                if any(b not in nbrs[a] for a, b in zip(p, p[1:])):
                    res.fail(f"path {p} uses a non-edge")
                inner += p[1:-1]
            if len(set(inner)) != len(inner):
                res.fail(f"pair ({s}, {t}): paths share an internal vertex")
            want = min_separator_size(G, s, t)
            if bundle.kappa != want:
                res.fail(f"pair ({s}, {t}): {bundle.kappa} paths, separator size {want}")
    return res


def check_characterization(
    G: Graph, rot: RotationSystem, inventory: MinimalCutInventory | None = None
) -> CheckResult:
    """For a 4-connected planar graph: a cut is returned, a disconnected minimal
    cut exists, and there are two or more large faces, all three or none."""
    from .mindisccut import min_disc_cut

    res = CheckResult("characterization", checked=1)
    inv = inventory or enumerate_minimal_cuts(G)
    cut = min_disc_cut(G, rot, verify=True)
    k = large_faces(G, rot).k
    flags = (cut is not None, bool(inv.disconnected), k >= 2)
    res.note = f"k={k}"
    if len(set(flags)) != 1:
        res.fail(f"returned={flags[0]} oracle-disconnected={flags[1]} two-large-faces={flags[2]}")
    elif cut is not None and cut not in inv:
        res.fail(f"returned cut {sorted(cut)} is not in the inventory")
    return res


CHECKS = ("shapes", "bound", "stable", "cleavable", "two-sides", "extension", "menger")


@dataclass
class OracleReport:
    results: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def text(self) -> str:
        return "\n".join(r.line() for r in self.results)


def run_checks(G: Graph, rot: RotationSystem, which: str = "all", bound: int = DEFAULT_BOUND) -> OracleReport:
    """Run the named check (or ``all``) and collect the results.

    ``all`` runs the checks whose preconditions hold and reports the rest as
    skipped.
    """
    names = CHECKS if which == "all" else (which,)
    inv = enumerate_minimal_cuts(G, bound)
    out = []
    for name in names:
        if name == "shapes":
            k = large_faces(G, rot).k
            out.append(
                check_near_triangulation_cut_shapes(G, rot, inv)
                if k <= 1
                else _skip("shapes", f"precondition: {k} large faces")
            )
        elif name == "bound":
            out.append(check_component_bound(G, rot, inv))
        elif name == "stable":
            out.append(check_no_stable_cut(G, rot, inv))
        elif name == "cleavable":
            out.append(
                CheckResult("cleavable", checked=len(inv), note=f"cleavable={'yes' if not inv.disconnected else 'no'}")
            )
        elif name == "two-sides":
            out.append(check_two_sides(G, inv))
        elif name == "extension":
            out.append(check_unique_extension(G, rot, inv))
        elif name == "menger":
            out.append(check_menger(G))
        else:
            raise ValueError(f"unknown check {name!r}; expected one of {', '.join(CHECKS)} or all")
    return OracleReport(out)
