"""Time the cut pipeline on carved graphs of doubling size.

Embeddings are built before timing starts, so the numbers cover only the
work after the embedding. A doubling ratio near 2 means linear growth.
Pass a largest exponent to go further (the acceptance suite uses 20).
"""

import sys

from planarcut.bench import bench, format_csv

top = int(sys.argv[1]) if len(sys.argv) > 1 else 16
rows = bench([2**e for e in range(10, top + 1)], family="carved", faces=2, reps=5)
print(format_csv(rows), end="")
ratios = [r.ratio for r in rows if r.ratio is not None]
print(f"largest doubling ratio: {max(ratios):.2f}")
