"""When two large faces share a vertex, its neighbourhood is the answer.

No paths are needed: the neighbours of the shared vertex form a minimal cut,
and the two faces make it fall apart into at least two pieces.
"""

from planarcut import GeneratorSpec, face_intersection, generate, large_faces, min_disc_cut_trace, verify_cut

for seed in range(10):
    G, rot = generate(GeneratorSpec("carved", n=200, faces=5, seed=seed, allow_touching=True))
    faces = large_faces(G, rot)
    v = face_intersection(G.n, faces)
    if v is None:
        continue
    trace = min_disc_cut_trace(G, rot)
    rep = verify_cut(G, trace.cut)
    shared = [list(W) for W in faces if v in W]
    print(f"seed {seed}: faces {shared} meet at {v}")
    print(f"  branch={trace.branch} cut=N({v})={sorted(trace.cut)}")
    print(f"  minimal={rep.minimal} pieces={rep.cut_components}")
    break
