import networkx as nx
import pytest

from planarcut.embedding import (
    DCEL,
    EmbeddingError,
    NotPlanarError,
    NotTwoConnectedError,
    RotationSystem,
    build_dcel,
    embed,
    large_faces,
    list_large_faces,
    validate_embedding,
)
from planarcut.generators import GeneratorSpec, generate
from planarcut.graph import Graph, GraphError


def _faces(G, rot):
    return build_dcel(G, rot).faces()


def test_octahedron_has_eight_faces(octahedron, derived):
    G, rot = octahedron
    assert sorted(G.edges()) == [tuple(e) for e in derived["octahedron_edges"]]
    dcel = build_dcel(G, rot)
    assert dcel.num_half_edges == 24
    assert dcel.num_faces == derived["octahedron_face_count"] == 8


def test_k5_is_not_planar():
    G = Graph.from_edges(5, [(u, v) for u in range(1, 6) for v in range(u + 1, 6)])
    with pytest.raises(NotPlanarError):
        embed(G)


def test_disconnected_input_rejected():
    G = Graph.from_edges(4, [(1, 2), (3, 4)])
    with pytest.raises((GraphError, ValueError)):
        embed(G)


def test_antiprism_faces(antiprism4, derived):
    G, rot = antiprism4
    dcel = build_dcel(G, rot)
    assert dcel.num_half_edges == derived["antiprism4_half_edges"]
    assert dcel.num_faces == derived["antiprism4_face_count"]
    assert sorted(f.length for f in dcel.faces()) == derived["antiprism4_face_lengths"]
    faces = list_large_faces(dcel)
    assert faces.k == 2
    assert sorted(sorted(W) for W in faces) == derived["antiprism4_large_faces"]


def test_triangle_dcel():
    G = Graph.from_edges(3, [(1, 2), (2, 3), (1, 3)])
    dcel = build_dcel(G, embed(G))
    assert dcel.num_half_edges == 6
    assert dcel.num_faces == 2


def test_dcel_twin_and_next_are_consistent(icosahedron):
    G, rot = icosahedron
    d = DCEL(rot)
    h = range(d.num_half_edges)
    assert all(d.twin[d.twin[i]] == i for i in h)
    assert all(d.prev[d.next[i]] == i for i in h)
    assert all(d.face[d.next[i]] == d.face[i] for i in h)
    assert sum(f.length for f in d.faces()) == 2 * G.m


def test_near_triangulation_has_one_large_face(near_triangulation, derived):
    G, rot = near_triangulation
    faces = large_faces(G, rot)
    assert faces.k == 1
    assert [sorted(faces[0])] == derived["near_triangulation_large_faces"]


def test_validate_embedding_accepts_embedder_output(octahedron, antiprism4, near_triangulation):
    for G, rot in (octahedron, antiprism4, near_triangulation):
        assert validate_embedding(G, rot) is None
        assert validate_embedding(G, embed(G)) is None


def test_validate_embedding_rejects_missing_neighbour(octahedron):
    G, rot = octahedron
    lists = rot.to_lists()
    lists[1] = lists[1][:-1]
    bad = RotationSystem.from_lists(lists)
    assert "permutation" in validate_embedding(G, bad)


def test_validate_embedding_reports_euler_violation(octahedron, derived):
    G, _ = octahedron
    rot = {int(v): r for v, r in derived["octahedron_bad_rotation"].items()}
    bad = RotationSystem.from_lists(rot)
    reason = validate_embedding(G, bad)
    assert reason is not None and "Euler" in reason
    # Same face count as the independent trace (6 instead of 8).
    assert DCEL(bad).num_faces == derived["octahedron_bad_rotation_faces"]


def test_rotation_must_be_consistent():
    with pytest.raises(EmbeddingError):
        DCEL(RotationSystem.from_lists([[], [2], []]))


def test_large_faces_require_simple_boundaries():
    # Two triangles sharing vertex 3: the outer face visits 3 twice.
    G = Graph.from_edges(5, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)])
    with pytest.raises(NotTwoConnectedError):
        large_faces(G, embed(G))


@pytest.mark.parametrize("seed", range(5))
def test_large_faces_are_chordless_in_three_connected_graphs(seed):
    G, rot = generate(GeneratorSpec("carved", n=60, faces=4, seed=seed, allow_touching=True, deep=True))
    nbrs = G.neighbor_sets
    for W in large_faces(G, rot):
        L = len(W)
        for i in range(L):
            for j in range(i + 2, L):
                if (i, j) != (0, L - 1):
                    assert W[j] not in nbrs[W[i]]


@pytest.mark.parametrize("seed", range(8))
def test_face_walks_cover_every_dart_once(seed):
    H = nx.random_labeled_tree(12, seed=seed) if hasattr(nx, "random_labeled_tree") else nx.random_tree(12, seed=seed)
    G = Graph.from_edges(12, [(u + 1, v + 1) for u, v in H.edges()])
    d = build_dcel(G, embed(G))
    assert d.num_faces == 1
    assert sum(f.length for f in d.faces()) == 2 * G.m
