"""Rings of butterflies: where independence and nucleation-freeness kick in.

    python demos/ring_of_butterflies.py
"""
from rigidkit import catalog as cat
from rigidkit.covers import ie_count, rank_sandwich
from rigidkit.oracle import flex_dim, generic_rank, is_nucleation_free

print(" m   |V|  |E|  rank  flex  nf")
for m in range(3, 10):
    R = cat.ring_of_butterflies(m)
    G = R.graph
    r = generic_rank(G).rank
    print(f"{m:2d}  {G.n:4d} {G.m:4d} {r:5d} {flex_dim(G):5d}  {is_nucleation_free(G)}")

# the link cover pins the rank from above; each hinge then sits in the closure
R7 = cat.ring_of_butterflies(7)
print("IE(R7, links) =", ie_count(R7.graph, R7.cover))
for h in R7.hinges:
    cert = rank_sandwich(R7.graph, R7.cover, h)
    print(h, "implied" if cert.implied else "not implied", "(deterministic)" if cert.deterministic else "")
