"""Walk through the cut pipeline on the square antiprism.

The square antiprism has two square faces and eight triangles. Every vertex
has degree 4 and no three vertices disconnect it, so it is 4-connected. Two
large faces means it must have a minimal cut that induces a disconnected
subgraph; this script finds one and checks it against brute force.
"""

from planarcut import (
    build_auxiliary,
    enumerate_minimal_cuts,
    is_k_connected,
    large_faces,
    min_disc_cut_trace,
    named,
    verify_cut,
)

G, rot = named("antiprism(4)")
print(f"n={G.n} m={G.m} 4-connected={is_k_connected(G, 4)}")
for v in range(1, G.n + 1):
    print(f"  rot {v}: {rot.order(v)}")

# The large faces (length >= 4) come straight from the embedding.
faces = large_faces(G, rot)
print(f"\nlarge faces: {[list(W) for W in faces]}")

# Adding an apex inside each large face gives a triangulation.
aux = build_auxiliary(G, rot, faces)
print(f"auxiliary graph: n={aux.graph.n} m={aux.graph.m} (3n - 6 = {3 * aux.graph.n - 6})")

# The faces are disjoint, so the cut comes from four disjoint paths between them.
trace = min_disc_cut_trace(G, rot, verify=True)
print(f"\nbranch: {trace.branch}")
for i, P in enumerate(trace.paths, 1):
    print(f"  path {i}: {P}")
S1, S3 = trace.skippers
print(f"skippers of paths 1 and 3: {S1.vertices} {S3.vertices}")
print(f"cut: {sorted(trace.cut)}")

rep = verify_cut(G, trace.cut)
print(f"\nminimal={rep.minimal} disconnected={rep.disconnected}")
print(f"  pieces of the cut: {rep.cut_components}")
print(f"  sides: {rep.side_components}")

# Brute force: every minimal cut, and which of them are disconnected.
inv = enumerate_minimal_cuts(G)
print(f"\n{len(inv.cuts)} minimal cuts, disconnected ones: {[sorted(S) for S in inv.disconnected]}")
print(f"returned cut is one of them: {trace.cut in inv.disconnected}")
