"""
Closed formulas and the structural bound suite
==============================================

Abelian groups are fully classified by their domination number through the
squarefree part and exponent of the group; dihedral groups have an exact
two-case formula; symmetric groups get a degree-driven cover bound.  The
bound suite replays every applicable claim against the computed value.
"""

from groupdom import (build_group, characteristic_subgroups, classify_group,
                      enumerate_subgroups, gamma_abelian_formula,
                      gamma_dihedral_formula, gamma_exact, parse_group_spec,
                      symmetric_cover_bound, verify_bounds)

print("abelian formula vs exact solver:")
for text in ["C4", "C6", "C3xC3", "C2xC2xC3", "C36"]:
    G = build_group(parse_group_spec(text))
    L = enumerate_subgroups(G)
    cls = classify_group(G, L)
    print(f"  {text:10s} formula={gamma_abelian_formula(G, cls)} "
          f"exact={gamma_exact(L).gamma}")

print("\ndihedral formula (order 2n):")
for n in [4, 9, 15, 18, 50]:
    G = build_group(parse_group_spec(f"D{2 * n}"))
    L = enumerate_subgroups(G)
    print(f"  n={n:3d} formula={gamma_dihedral_formula(n)} "
          f"exact={gamma_exact(L).gamma}")

print("\nsymmetric-group cover bound by degree:")
for n in range(3, 11):
    print(f"  theta({n}) = {symmetric_cover_bound(n)}")

# The full report for the solvable-but-awkward alternating group A4:
# a Frobenius group whose domination number 5 exceeds p+1 and q+1.
G = build_group(parse_group_spec("A4"))
L = enumerate_subgroups(G)
reports = verify_bounds(G, L, classify_group(G, L),
                        characteristic_subgroups(G, L), gamma_exact(L))
print("\nA4 bound suite:")
for r in reports:
    if r.verdict != "not-applicable":
        print(f"  {r.theorem:28s} predicted={r.predicted} "
              f"computed={r.computed} -> {r.verdict}")
