"""
Scaling
=======

Query counts and recursion depth against the m log m budget.
"""

import math

from kecs.cli import bench_rows
from kecs.static import depth_bound

print(f"{'n':>7} {'m':>7} {'queries':>9} {'depth':>5} {'q/(m(log m+1))':>15} {'ms':>8}")
for n, m, k, queries, depth, ms in bench_rows([1000, 3000, 10000, 30000], 3, 0):
    ratio = queries / (m * depth_bound(m))
    print(f"{n:7d} {m:7d} {queries:9d} {depth:5d} {ratio:15.4f} {ms:8.0f}")

print("\nlog2(m) at the largest size:", round(math.log2(m), 1))
