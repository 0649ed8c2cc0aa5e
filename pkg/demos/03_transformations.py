"""Inn(T(X)) through the W calculus.

Each partial inner automorphism of the full transformation monoid is determined by
a pair (alpha, beta): a partial bijection alpha on X and a bijection beta between
partitions.  The demo closes Inn(T(3)) by brute force, maps every element into W(X),
and compares the image with the elements accepted by the finite membership test.
"""
import time

from innaut import tx
from innaut.constructors import full_transformation_monoid
from innaut.inner import inn, inn_generators

n = 3
S, codec = full_transformation_monoid(n)
t0 = time.perf_counter()
I = inn(S)
print(f"T({n}): |S| = {S.n}, {len(inn_generators(S))} generators, |Inn| = {len(I)} "
      f"({time.perf_counter() - t0:.1f}s)")

image = {tx.extract_w(f, codec).key() for f in I}
members = {w.key() for w in tx.enumerate_w(n) if tx.finite_membership(w, n)}
print(f"W({n}) has {len(tx.enumerate_w(n))} elements; embedded image {len(image)}; members {len(members)}")
print("image == members:", image == members)

# a few elements, largest domains first
for w in sorted((tx.extract_w(f, codec) for f in I), key=lambda w: -len(tx.w_domain(w)))[:5]:
    print("   ", w)
