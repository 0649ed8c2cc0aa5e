"""Natural conjugacy in an eight-element Clifford semigroup.

Two elements a, b are conjugate when some g, h satisfy ag = gb, bh = ha, hag = b
and gbh = a.  The demo prints the classes, one witness per class, and shows that
the element c stays alone even though it is D-related to the idempotent f.
"""
from innaut.conjugacy import conjugacy_classes, conjugators, centralizer
from innaut.constructors import clifford8
from innaut.semigroup import adjoin_identity, green

S = clifford8()
lab = adjoin_identity(S).label

D = green(S).D
print("D-classes:", " | ".join(" ".join(lab(x) for x in b) for b in D.blocks))
classes = conjugacy_classes(S)
for block in classes.blocks:
    a = block[0]
    print(f"class [{lab(a)}] = {{{', '.join(lab(x) for x in block)}}}")
    for b in block[1:]:
        w = conjugators(S, a, b)
        print(f"    {lab(a)} ~ {lab(b)} via g={lab(w.g)}, h={lab(w.h)}")

# conjugate elements need not have the same centralizer
for name in ("s1", "s2"):
    C = centralizer(S, S.index(name))
    print(f"C({name}) = {{{', '.join(lab(x) for x in C)}}}")
