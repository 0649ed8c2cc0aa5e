"""Equivariant maps on a G-set, and where the tuple description needs care.

For G = Z_2 swapping two points and fixing two others, End_G(X) has 16 elements and
Inn has 23.  A generator's (alpha, beta) tuple is only fixed up to translating by a
group element, so we compare canonical representatives.  With the Klein four-group
acting on three coset spaces even that is not enough: one map has tuples that differ
by a different group element on each orbit.
"""
from innaut import gset as G
from innaut.constructors import cyclic_group, direct_product
from innaut.verify import gset_embedding

gs = G.z2_example()
E = G.end_g(gs)
r = gset_embedding(gs, E)
print(f"Z_2 on 4 points: |End_G| = {len(E.maps)}, |Inn| = {r.info['inn_size']}, all checks ok: {r.ok}")
print("valid standard pairs:")
for sp in G.valid_standard_pairs(gs):
    print("   ", sp)

K = direct_product(cyclic_group(2), cyclic_group(2))
twist = G.coset_gset(K, [frozenset({0, 1}), frozenset({0, 2}), frozenset({0, 3})])
r = gset_embedding(twist, G.end_g(twist))
print("\nZ_2 x Z_2 on three coset spaces:")
for k in ("generator_canonical_unique", "embedding_describes", "embedding_homomorphism"):
    p = r.properties[k]
    print(f"    {k}: {p.violations} of {p.checked} violated")
