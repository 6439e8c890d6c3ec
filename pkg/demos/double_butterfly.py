"""Split a hinge of R7 and glue in a double butterfly.

The exact witness at the hinged framework certifies full row rank; a one-edge
augmentation then shows the stress balance around the split vertices.
"""
from rigidkit import catalog as cat
from rigidkit.oracle import Framework, independence, is_nucleation_free, stress_basis, witness_certificate

G, fw, names = cat.r7_hinged_framework()
w = witness_certificate(fw).to_dict()
print("|E| =", G.m, " witness rank:", w["rank"], w["evidence"]["kind"])
print("independent:", independence(G)[0], " nucleation-free:", is_nucleation_free(G))

# one more edge in the base gives a one-dimensional stress space; with the
# non-trivial split that stress runs through the ear square
from rigidkit.verify import _r7_nontrivial_split  # noqa: E402

R = cat.ring_of_butterflies(7)
G2, fw2, n = cat.hinged_double_butterfly_framework(R.graph, _r7_nontrivial_split(R))
H = G2.add_edges([("L1.c", "L1.d")])
S = stress_basis(Framework(H, 3, fw2.coords))
print("stress space dimension:", len(S))
s = S[0]
print("at c:", [s[(n["c"], n[x])] for x in ("a1", "v", "b1", "u")])
agg = [0, 0, 0]
for x, ys in ((n["a1"], ("u", "v")), (n["a2"], ("u", "v"))):
    for y in ys:
        w = s[(x, n[y])]
        print(f"s[{x},{y}] = {w}")
        agg = [g + w * (fw2.coords[x][k] - fw2.coords[n[y]][k]) for k, g in enumerate(agg)]
print("aggregate at a1, a2:", agg)
