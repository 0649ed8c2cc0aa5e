"""Partial inner automorphisms and the monoid they generate.

phi_{g,h}: a -> hag is a bijection from D_{g,h} (the elements fixed on both sides
by gh) onto D_{h,g}.  For a group this collapses to the ordinary inner automorphisms
plus the empty map; for the symmetric inverse monoid I_2 the generated monoid is a
copy of I_2 itself.
"""
from innaut.constructors import strict4, symmetric_group, symmetric_inverse_monoid
from innaut.inner import inn, inn_generators, phi_map, reduce_conjugators
from innaut.partial_map import abstract_cayley, sorted_maps
from innaut.semigroup import find_isomorphism

S3 = symmetric_group(3)
I = inn(S3)
print(f"Inn(S_3): {len(inn_generators(S3))} generators, {len(I)} elements")
for f in sorted_maps(I):
    print("   ", f.render(S3.label))

I2, _ = symmetric_inverse_monoid(2)
T, _ = abstract_cayley(inn(I2))
print(f"\nInn(I_2) has {T.n} elements; isomorphic to I_2: {find_isomorphism(T, I2) is not None}")

# replacing (g, h) by a mutually inverse pair can only enlarge the map
S = strict4()
g, h = 0, 2
gb, hb = reduce_conjugators(S, g, h)
print(f"\nstrict4: phi_{{{S.label(g)},{S.label(h)}}} = {phi_map(S, g, h).render(S.label)}")
print(f"reduced to ({S.label(gb)}, {S.label(hb)}): {phi_map(S, gb, hb).render(S.label)}")
