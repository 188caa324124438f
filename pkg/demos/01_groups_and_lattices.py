"""
Building finite groups and walking their subgroup lattices
===========================================================

Groups live as explicit multiplication tables with dense element indices;
index 0 is always the identity.  Subgroups are bitmasks over the element
indices, and the lattice enumerates all of them.
"""

from groupdom import (build_group, characteristic_subgroups, classify_group,
                      enumerate_subgroups, is_normal, parse_group_spec,
                      quotient_group, subgroup_classes)

# The spec grammar covers the usual small-group families.
for text in ["C12", "C2xC2xC3", "D8", "S4", "A5", "Q8", "SD(7,3)"]:
    G = build_group(parse_group_spec(text))
    print(f"{text:10s} order {G.order:4d} abelian={G.is_abelian()}")

# A lattice knows its atoms (prime-order subgroups), coatoms (maximal
# subgroups), and the vertex set of the intersection graph.
G = build_group(parse_group_spec("S4"))
L = enumerate_subgroups(G)
print(f"\nS4: {len(L.subgroups)} subgroups, {len(L.atoms)} atoms, "
      f"{len(L.coatoms)} coatoms, {len(L.vertex_set)} graph vertices")

# Conjugacy classes of subgroups, each with a normalizer.
classes = subgroup_classes(G, L)
print(f"S4 has {len(classes)} conjugacy classes of subgroups:")
for c in classes:
    rep = L.subgroups[c.rep]
    print(f"  order {rep.order:2d}  class size {len(c.members):2d}  "
          f"normalizer order {c.normalizer.order}")

# Characteristic subgroups: the join of all atoms, the Frattini subgroup,
# the nilpotent residual, center, and derived subgroup.
ch = characteristic_subgroups(G, L)
print(f"\nS4 characteristic subgroups: atom join {ch.atom_join.order}, "
      f"Frattini {ch.frattini.order}, residual {ch.nilpotent_residual.order}, "
      f"center {ch.center.order}, derived {ch.derived.order}")

cls = classify_group(G, L)
print(f"S4 classification: solvable={cls.is_solvable} "
      f"nilpotent={cls.is_nilpotent} supersolvable={cls.is_supersolvable} "
      f"exp={cls.exponent} sfp={cls.squarefree_part}")

# Quotients return the coset table plus the projection map.
V4 = next(s for s in L.subgroups if s.order == 4 and is_normal(G, s.mask))
Q, projection = quotient_group(G, V4.mask)
print(f"\nS4 / V4 has order {Q.order} and is "
      f"{'abelian' if Q.is_abelian() else 'non-abelian'} (it is S3)")
