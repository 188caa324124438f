"""
Burnside ring arithmetic
========================

Transitive G-sets are coset spaces G/H indexed by subgroup conjugacy
classes.  Products decompose through double cosets, and the table of
marks (fixed-point counts) embeds the ring into a product of integers,
giving an independent check on every product.
"""

import numpy as np

from groupdom import (BurnsideRing, build_group, double_cosets,
                      enumerate_subgroups, gamma_exact, parse_group_spec)

G = build_group(parse_group_spec("S3"))
L = enumerate_subgroups(G)
ring = BurnsideRing(G, L)
labels = ring.labels()
print("S3 subgroup classes:", labels)

# Double cosets of two point stabilizers split S3 into pieces of size 4+2.
c2s = [s for s in L.subgroups if s.order == 2]
dc = double_cosets(G, c2s[0], c2s[1])
print("double coset sizes:", dc.sizes)

print("\nall products [G/H][G/K]:")
for a in range(len(labels)):
    for b in range(a, len(labels)):
        dec = ring.product(a, b)
        pretty = " + ".join(f"{m}*[G/{labels[c]}]" for c, m in dec.coeffs)
        print(f"  [G/{labels[a]}][G/{labels[b]}] = {pretty}")

M = ring.marks_matrix()
print("\ntable of marks (rows: G-sets, columns: acting classes):")
print(M)

# marks are multiplicative: the mark vector of a product is the pointwise
# product of mark vectors
a, b = 1, 2
dec = ring.product(a, b)
assert np.array_equal(ring.mark_vector_of(dec), M[a] * M[b])
print("\nmark multiplicativity holds for", labels[a], "*", labels[b])

# The ring also bounds the domination number: a family of classes meeting
# every vertex class gives gamma <= sum of normalizer indices.
for text in ["Q8", "D8", "S3", "A4"]:
    G = build_group(parse_group_spec(text))
    L = enumerate_subgroups(G)
    ring = BurnsideRing(G, L)
    ib = ring.index_bound()
    print(f"{text:4s} index bound {ib['bound']}  gamma {gamma_exact(L).gamma}  "
          f"gamma1 criterion {ib['gamma1_criterion']}")
