"""Graphs with at most one large face have only connected minimal cuts.

For 4-connected planar graphs this is an equivalence: the algorithm returns
nothing exactly when there is at most one large face, and brute force agrees.
Here we check it on a batch of small generated graphs and look at the
shapes the minimal cuts take.
"""

import logging
from collections import Counter

from planarcut import GeneratorSpec, enumerate_minimal_cuts, generate, large_faces, min_disc_cut
from planarcut.oracle import check_near_triangulation_cut_shapes

# Small graphs sometimes can't take three disjoint quadrilaterals; skip the warnings.
logging.getLogger("planarcut.generators").setLevel(logging.ERROR)

rows = Counter()
for seed in range(20):
    for faces in (0, 1, 2, 3):
        family = "random-triangulation" if faces == 0 else "carved"
        G, rot = generate(GeneratorSpec(family, n=13, faces=faces, seed=seed))
        k = large_faces(G, rot).k
        cut = min_disc_cut(G, rot)
        brute = bool(enumerate_minimal_cuts(G).disconnected)
        rows[(min(k, 2), cut is not None, brute)] += 1

print("large faces | cut returned | brute force finds one | graphs")
for (k, got, brute), count in sorted(rows.items()):
    print(f"{'>= 2' if k == 2 else k:>11} | {got!s:>12} | {brute!s:>21} | {count}")

# In a near-triangulation each minimal cut is a chordless cycle, or a path
# whose two ends are the only vertices it shares with the large face.
G, rot = generate(GeneratorSpec("carved", n=14, faces=1, seed=4))
W = set(large_faces(G, rot)[0])
res = check_near_triangulation_cut_shapes(G, rot)
print(f"\nlarge face {sorted(W)}: {res.line()}")
nbrs = G.neighbor_sets
for S in list(enumerate_minimal_cuts(G))[:8]:
    ends = [v for v in S if len(nbrs[v] & S) == 1]
    kind = "path" if ends else "cycle"
    print(f"  {kind:5} {sorted(S)} meets face in {sorted(S & W)}")
