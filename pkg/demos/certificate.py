"""
Sparse certificates
===================

A dense multigraph shrinks to a union of a few spanning forests without
changing the answer.
"""

# The forest passes run in plain Python, so when the flow oracle is already
# cheap the certificate costs more time than it saves.

import time

from kecs import kecs_certificate, maximal_kecs
from kecs.sparsify import certificate_forests
from kecs.generators import random_multigraph

for n, m, k in [(50, 5000, 2), (50, 20000, 3), (200, 40000, 3)]:
    g = random_multigraph(n, m, seed=1)
    cert = kecs_certificate(g, k)
    t = certificate_forests(n, k)
    print(f"n={n} m={m} k={k}: t={t} forests, certificate keeps {cert.m} edges "
          f"(bound {t * (n - 1)})")

    t0 = time.perf_counter()
    a = maximal_kecs(g, k, use_certificate=False)
    t1 = time.perf_counter()
    b = maximal_kecs(g, k)
    t2 = time.perf_counter()
    print(f"  same partition: {a.partition == b.partition}; "
          f"{(t1 - t0) * 1e3:.0f} ms without, {(t2 - t1) * 1e3:.0f} ms with")
