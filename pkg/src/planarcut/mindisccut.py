"""Minimal disconnected cuts of 4-connected planar graphs in linear time.

A 4-connected planar graph has a minimal disconnected cut exactly when its
embedding has at least two large faces. If two large faces share a vertex,
that vertex's neighbourhood is such a cut. Otherwise four disjoint paths run
between the first two large faces; two opposite ones, after chord removal
and face skipping, make up the cut.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass

import numpy as np

from .connectivity import disjoint_paths, is_k_connected
from .cuts import (
    ContractError,
    Relation,
    build_auxiliary,
    classify_face_vs_cycle,
    cycle_sides,
    face_intersection,
    neighborhood_cut,
    verify_cut,
)
from .embedding import DCEL, FaceCatalog, RotationSystem, _euler_gap, embed, list_large_faces, validate_embedding
from .graph import Graph, lookup_array
from .paths import Skipper, path_skipper, remove_chords, truncate_path

log = logging.getLogger(__name__)


CHECK_ENV = "PLANARCUT_CHECK"


def checks_enabled() -> bool:
    """Whether self-checks are on (environment variable ``PLANARCUT_CHECK`` set and not ``0``)."""
    return os.environ.get(CHECK_ENV, "0") not in ("", "0")


class PreconditionError(ValueError):
    """The input is not a 4-connected planar graph (or its embedding is wrong)."""


@dataclass(frozen=True)
class MinDiscCutTrace:
    """Result of :func:`min_disc_cut_trace` with the intermediate objects.

    ``branch`` is ``"near-triangulation"`` (no cut), ``"face-intersection"``
    or ``"menger"``. For the last, ``paths`` holds the four chordless
    face-to-face paths sorted by where they leave the first face, and
    ``skippers`` the skippers of the first and third.
    """

    cut: frozenset[int] | None
    branch: str
    faces: FaceCatalog
    meet: int | None = None
    paths: tuple[tuple[int, ...], ...] = ()
    skippers: tuple[Skipper, Skipper] | None = None


def face_to_face_paths(G: Graph, A: list[int], B: list[int], cap: int = 4) -> list[list[int]]:
    """Up to ``cap`` disjoint paths from ``A`` to ``B``, sorted by first vertex.

    Equivalent to adding a vertex adjacent to all of ``A`` and one adjacent to
    all of ``B``, taking internally disjoint paths between them and
    stripping the two added vertices.
    """
    return disjoint_paths(G, A, B, cap)


def _check_embedding(G: Graph, rot: RotationSystem | None, validate: bool) -> DCEL:
    if rot is None:
        rot = embed(G)
    elif validate:
        reason = validate_embedding(G, rot)
        if reason is not None:
            raise PreconditionError(f"embedding rejected: {reason}")
    elif rot.n != G.n or len(rot.indices) != len(G.indices):
        raise PreconditionError("rotation does not match the graph")
    dcel = DCEL(rot)
    if _euler_gap(dcel) != 0:
        raise PreconditionError("rotation is not a planar embedding")
    return dcel


def min_disc_cut_trace(
    G: Graph,
    rot: RotationSystem | None = None,
    *,
    validate: bool = False,
    verify: bool | None = None,
) -> MinDiscCutTrace:
    """Run the full pipeline and keep its intermediate results.

    ``validate`` checks 4-connectivity and the embedding up front (this is
    not linear time). ``verify`` checks the returned cut is minimal and
    disconnected, and for the Menger branch also the path invariants and
    the auxiliary cycle (:func:`trace_problems`); any failure raises
    :class:`ContractError`. It defaults to :func:`checks_enabled`.
    """
    if verify is None:
        verify = checks_enabled()
    if validate and not is_k_connected(G, 4):
        raise PreconditionError("graph is not 4-connected")
    dcel = _check_embedding(G, rot, validate)
    faces = list_large_faces(dcel)
    if faces.k < 2:
        return MinDiscCutTrace(None, "near-triangulation", faces)

    meet = face_intersection(G.n, faces)
    if meet is not None:
        trace = MinDiscCutTrace(neighborhood_cut(G, meet), "face-intersection", faces, meet=meet)
    else:
        W1, W2 = list(faces[0]), list(faces[1])
        raw = face_to_face_paths(G, W1[:4], W2[:4])
        if len(raw) < 4:
            raise PreconditionError(
                f"only {len(raw)} disjoint paths between the first two large faces; graph is not 4-connected"
            )
        R = [remove_chords(G, truncate_path(W1, W2, P, G.n)) for P in raw]
        where = lookup_array(W1, G.n, padded=True)
        R.sort(key=lambda p: where[p[0]])
        S1 = path_skipper(G, R[0], faces)
        S3 = path_skipper(G, R[2], faces)
        if S1.passes > 1 or S3.passes > 1:
            log.info("face skipping needed %d and %d passes", S1.passes, S3.passes)
        cut = frozenset(S1.vertices) | frozenset(S3.vertices)
        trace = MinDiscCutTrace(cut, "menger", faces, paths=tuple(map(tuple, R)), skippers=(S1, S3))

    if verify:
        problems = trace_problems(G, dcel.rot, trace)
        if problems:
            raise ContractError(f"{trace.branch} branch: " + "; ".join(problems))
    return trace


def min_disc_cut(
    G: Graph,
    rot: RotationSystem | None = None,
    *,
    validate: bool = False,
    verify: bool | None = None,
) -> frozenset[int] | None:
    """A minimal disconnected cut of a 4-connected planar graph, or ``None``.

    ``None`` means the graph is a near-triangulation, hence every minimal cut
    is connected. Pass ``rot`` to skip the embedding step.
    """
    return min_disc_cut_trace(G, rot, validate=validate, verify=verify).cut


def decide(G: Graph, rot: RotationSystem | None = None) -> bool:
    """Whether ``G`` has a minimal disconnected cut: at least two large faces."""
    dcel = _check_embedding(G, rot, False)
    return int(np.count_nonzero(dcel.face_length >= 4)) >= 2


@dataclass(frozen=True)
class CrossingContract:
    """The cycle through both skippers and both face apexes, and its checks."""

    cycle: tuple[int, ...]
    chordless: bool
    crossing_faces: tuple[int, ...]
    separates: bool

    @property
    def ok(self) -> bool:
        return self.chordless and not self.crossing_faces and self.separates


def crossing_contract(G: Graph, rot: RotationSystem, trace: MinDiscCutTrace) -> CrossingContract:
    """Rebuild the auxiliary cycle behind a Menger-branch cut and check it.

    The cycle must be chordless, crossed by no large face, and must put the
    second and fourth face-to-face paths on opposite sides.
    """
    if trace.branch != "menger" or trace.skippers is None:
        raise ValueError("crossing contract applies to the Menger branch only")
    aux = build_auxiliary(G, rot, trace.faces)

    def lift(sk: Skipper) -> list[int]:
        out = []
        for i, v in enumerate(sk.vertices):
            out.append(v)
            if i in sk.hops:
                out.append(aux.face_vertex(sk.hops[i]))
        return out

    S1, S3 = trace.skippers
    D = lift(S1) + [aux.face_vertex(1)] + lift(S3)[::-1] + [aux.face_vertex(0)]
    on = set(D)
    nbrs = aux.graph.neighbor_sets
    chordless = len(on) == len(D) and all(len(nbrs[v] & on) == 2 for v in D)
    crossing: tuple[int, ...] = ()
    separates = False
    if chordless:
        # A face can only cross D if it has two vertices on it.
        meeting = [i for i, W in enumerate(trace.faces) if sum(v in on for v in W) >= 2]
        crossing = tuple(i for i in meeting if classify_face_vs_cycle(i, D, aux).kind is Relation.CROSSES)
        inner, outer = cycle_sides(aux, D)
        P2, P4 = set(trace.paths[1]), set(trace.paths[3])
        separates = bool(P2) and bool(P4) and (
            (P2 <= inner and P4 <= outer) or (P2 <= outer and P4 <= inner)
        )
    return CrossingContract(tuple(D), chordless, crossing, separates)


def trace_problems(G: Graph, rot: RotationSystem, trace: MinDiscCutTrace) -> list[str]:
    """Everything wrong with a non-null result; empty when all checks pass."""
    if trace.cut is None:
        return []
    report = verify_cut(G, trace.cut)
    problems = []
    if not (report.minimal and report.disconnected):
        problems.append(f"not a minimal disconnected cut (minimal={report.minimal}, disconnected={report.disconnected})")
    if trace.branch != "menger":
        return problems
    R1, R3 = set(trace.paths[0]), set(trace.paths[2])
    on1, on3 = trace.cut & R1, trace.cut & R3
    if trace.cut - (R1 | R3):
        problems.append("cut leaves the first and third paths")
    if not on1 or not on3:
        problems.append("cut misses the first or third path")
    nbrs = G.neighbor_sets
    if any(nbrs[v] & on3 for v in on1):
        problems.append("an edge joins the two halves of the cut")
    contract = crossing_contract(G, rot, trace)
    if not contract.ok:
        problems.append(
            f"auxiliary cycle check failed (chordless={contract.chordless}, "
            f"crossing={list(contract.crossing_faces)}, separates={contract.separates})"
        )
    return problems
