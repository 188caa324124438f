"""Burnside ring arithmetic over the conjugacy classes of subgroups.

Transitive G-sets are coset spaces G/H up to conjugacy of H; products
decompose through double cosets: [G/H][G/K] is the sum of [G/(H meet gKg^-1)]
over (H,K)-double coset representatives g.  The table of marks (fixed-point
counts of class representatives on each coset space) is a ring embedding
and serves as an independent oracle: marks of a product must equal the
pointwise product of marks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import GroupTable
from .lattice import (Lattice, Subgroup, SubgroupClass, class_of_subgroup,
                      mask_to_array, array_to_mask, subgroup_classes)


@dataclass(frozen=True)
class DoubleCosetSet:
    reps: tuple[int, ...]   # minimal-index element of each (H,K)-double coset
    sizes: tuple[int, ...]  # |HgK| per representative


@dataclass(frozen=True)
class GSetDecomposition:
    """A Burnside-ring element: multiplicities over subgroup classes."""

    coeffs: tuple[tuple[int, int], ...]  # sorted (class index, multiplicity)

    def coeff(self, class_index: int) -> int:
        for c, m in self.coeffs:
            if c == class_index:
                return m
        return 0

    def support(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.coeffs)

    def is_regular_multiple(self, trivial_class: int = 0) -> bool:
        """True when supported only on the trivial-subgroup class."""
        return all(c == trivial_class for c, _ in self.coeffs)


def double_cosets(G: GroupTable, H: Subgroup, K: Subgroup) -> DoubleCosetSet:
    """(H,K)-double cosets by a greedy sweep in element index order."""
    n = G.order
    h_members = mask_to_array(H.mask, n)
    k_members = mask_to_array(K.mask, n)
    visited = np.zeros(n, dtype=bool)
    reps, sizes = [], []
    for g in range(n):
        if visited[g]:
            continue
        hg = G.mul[h_members, g]
        coset = np.unique(G.mul[np.ix_(hg, k_members)])
        visited[coset] = True
        reps.append(g)
        sizes.append(len(coset))
    return DoubleCosetSet(reps=tuple(reps), sizes=tuple(sizes))


class BurnsideRing:
    """Product, marks and related reports for one group's Burnside ring.

    Classes are sorted by (order, mask) so class 0 is the trivial subgroup
    and the last class is the whole group.
    """

    def __init__(self, G: GroupTable, L: Lattice,
                 classes: list[SubgroupClass] | None = None):
        self.G = G
        self.L = L
        self.classes = classes if classes is not None else subgroup_classes(G, L)
        self.class_of = class_of_subgroup(L, self.classes)
        self.abelian = G.is_abelian()
        self._conj_cache: dict[tuple[int, int], int] = {}
        self._product_cache: dict[tuple[int, int], GSetDecomposition] = {}
        self._marks: np.ndarray | None = None

    # -- helpers ----------------------------------------------------------

    def rep_subgroup(self, ci: int) -> Subgroup:
        return self.L.subgroups[self.classes[ci].rep]

    def class_order(self, ci: int) -> int:
        return self.rep_subgroup(ci).order

    def class_index_of_mask(self, mask: int) -> int:
        return int(self.class_of[self.L.index[mask]])

    def conj_mask(self, mask: int, g: int) -> int:
        key = (mask, g)
        got = self._conj_cache.get(key)
        if got is None:
            members = mask_to_array(mask, self.G.order)
            gm = self.G.mul[g, members]
            got = array_to_mask(self.G.mul[gm, self.G.inv[g]], self.G.order)
            self._conj_cache[key] = got
        return got

    def labels(self) -> tuple[str, ...]:
        return tuple(f"K{self.class_order(ci)}_{ci}" for ci in range(len(self.classes)))

    # -- products ----------------------------------------------------------

    def product(self, ca: int, cb: int) -> GSetDecomposition:
        """[G/H][G/K] for class indices ca (H-class) and cb (K-class)."""
        key = (ca, cb)
        got = self._product_cache.get(key)
        if got is not None:
            return got
        n = self.G.order
        h = self.rep_subgroup(ca)
        k = self.rep_subgroup(cb)
        counts: dict[int, int] = {}
        if self.abelian:
            # double cosets are the |G:HK| cosets of HK, every term is H&K
            inter = h.mask & k.mask
            hk = h.order * k.order // inter.bit_count()
            ci = self.class_index_of_mask(inter)
            counts[ci] = n // hk
        else:
            dc = double_cosets(self.G, h, k)
            for g in dc.reps:
                inter = h.mask & self.conj_mask(k.mask, g)
                ci = self.class_index_of_mask(inter)
                counts[ci] = counts.get(ci, 0) + 1
        dec = GSetDecomposition(coeffs=tuple(sorted(counts.items())))
        self._product_cache[key] = dec
        if ca != cb:
            self._product_cache[(cb, ca)] = dec
        return dec

    def decomposition_points(self, dec: GSetDecomposition) -> int:
        """Total cardinality of the underlying G-set."""
        n = self.G.order
        return sum(m * (n // self.class_order(c)) for c, m in dec.coeffs)

    # -- table of marks -----------------------------------------------------

    def marks_matrix(self) -> np.ndarray:
        """M[i, j] = number of cosets of G/K_i fixed by H_j (class reps).

        Lower triangular because a fixed coset forces H_j inside a
        conjugate of K_i.
        """
        if self._marks is not None:
            return self._marks
        n = self.G.order
        m = len(self.classes)
        M = np.zeros((m, m), dtype=np.int64)
        for i in range(m):
            K = self.rep_subgroup(i)
            index = n // K.order
            if self.abelian:
                for j in range(m):
                    H = self.rep_subgroup(j)
                    M[i, j] = index if H.mask & ~K.mask == 0 else 0
                continue
            k_members = mask_to_array(K.mask, n)
            coset_of = np.full(n, -1, dtype=np.int64)
            reps = []
            for g in range(n):
                if coset_of[g] == -1:
                    coset = self.G.mul[g, k_members]
                    coset_of[coset] = len(reps)
                    reps.append(g)
            reps = np.array(reps)
            for j in range(m):
                if self.class_order(j) > K.order:
                    continue
                h_members = mask_to_array(self.rep_subgroup(j).mask, n)
                acted = coset_of[self.G.mul[np.ix_(h_members, reps)]]
                fixed = (acted == coset_of[reps][None, :]).all(axis=0)
                M[i, j] = int(fixed.sum())
        self._marks = M
        return M

    def mark_vector_of(self, dec: GSetDecomposition) -> np.ndarray:
        M = self.marks_matrix()
        out = np.zeros(M.shape[1], dtype=np.int64)
        for c, mult in dec.coeffs:
            out += mult * M[c]
        return out

    # -- the three characterization predicates ------------------------------

    def product_set_size(self, a_mask: int, b_mask: int) -> int:
        n = self.G.order
        am = mask_to_array(a_mask, n)
        bm = mask_to_array(b_mask, n)
        return len(np.unique(self.G.mul[np.ix_(am, bm)].ravel()))

    def predicate_normal(self, cn: int) -> tuple[bool, list[int]]:
        """[G/K][G/N] = |G:NK| [G/(N meet K)] for every class K."""
        n = self.G.order
        N = self.rep_subgroup(cn)
        failures = []
        for ck in range(len(self.classes)):
            K = self.rep_subgroup(ck)
            nk = self.product_set_size(N.mask, K.mask)
            dec = self.product(ck, cn)
            if n % nk != 0:
                failures.append(ck)
                continue
            target = self.class_index_of_mask(N.mask & K.mask)
            if dec.coeffs != ((target, n // nk),):
                failures.append(ck)
        return (not failures, failures)

    def predicate_minimal(self, ca: int) -> tuple[bool, list[int]]:
        """Every product [G/K][G/A], K non-trivial, is either |G:K| [G/A]
        or a multiple of the regular class [G/1]."""
        n = self.G.order
        failures = []
        for ck in range(1, len(self.classes)):
            dec = self.product(ck, ca)
            expected = ((ca, n // self.class_order(ck)),)
            if dec.coeffs != expected and not dec.is_regular_multiple():
                failures.append(ck)
        return (not failures, failures)

    def predicate_maximal(self, ch: int) -> tuple[bool, list[int]]:
        """[G/K][G/H] has no [G/H] summand unless K is G or conjugate to H."""
        top = len(self.classes) - 1
        failures = []
        for ck in range(len(self.classes)):
            if ck == ch or ck == top:
                continue
            if self.product(ck, ch).coeff(ch) != 0:
                failures.append(ck)
        return (not failures, failures)

    def characterization_report(self) -> dict:
        """Evaluate the three predicates against lattice ground truth.

        Counterexample pairs are reported, not asserted; only the abelian
        case is a hard equivalence.
        """
        L = self.L
        top = len(L.subgroups) - 1
        atom_set = set(L.atoms)
        coatom_set = set(L.coatoms)
        bullets = {"normal": [], "minimal": [], "maximal": []}
        for ci, cls in enumerate(self.classes):
            rep = cls.rep
            proper_nontrivial = 0 < rep < top
            pred_n, fail_n = self.predicate_normal(ci)
            bullets["normal"].append({
                "class": ci, "predicted": pred_n, "actual": len(cls.members) == 1,
                "counterexamples": fail_n if pred_n != (len(cls.members) == 1) else []})
            if proper_nontrivial:
                pred_a, fail_a = self.predicate_minimal(ci)
                bullets["minimal"].append({
                    "class": ci, "predicted": pred_a, "actual": rep in atom_set,
                    "counterexamples": fail_a if pred_a != (rep in atom_set) else []})
                pred_m, fail_m = self.predicate_maximal(ci)
                bullets["maximal"].append({
                    "class": ci, "predicted": pred_m, "actual": rep in coatom_set,
                    "counterexamples": fail_m if pred_m != (rep in coatom_set) else []})
        agree = {name: all(e["predicted"] == e["actual"] for e in entries)
                 for name, entries in bullets.items()}
        return {"bullets": bullets, "biconditional_holds": agree}

    # -- domination bound from the ring -------------------------------------

    def meets_matrix(self) -> np.ndarray:
        """meets[k, h]: does [G/K][G/H] have a summand off the regular class
        (equivalently, K meets some conjugate of H non-trivially)?"""
        m = len(self.classes)
        out = np.zeros((m, m), dtype=bool)
        for a in range(m):
            for b in range(a, m):
                val = not self.product(a, b).is_regular_multiple()
                out[a, b] = out[b, a] = val
        return out

    def index_bound(self, exhaustive_limit: int = 40) -> dict:
        """Smallest found family of classes meeting every vertex class, and
        the resulting bound: the sum of the normalizer indices.

        Families up to size 3 are searched exhaustively over the candidate
        pool; a weighted greedy cover supplements larger cases.  Also
        decides the gamma-equals-1 criterion: a single normal class whose
        products with every vertex class stay off the regular class.
        """
        L = self.L
        top = len(L.subgroups) - 1
        vcls = [ci for ci, c in enumerate(self.classes) if 0 < c.rep < top]
        if not vcls:
            return {"family": [], "bound": None, "gamma1_criterion": False}
        meets = self.meets_matrix()
        n = self.G.order
        weight = {ci: n // self.classes[ci].normalizer.order for ci in vcls}
        pos = {ci: k for k, ci in enumerate(vcls)}
        cover = {}
        for ci in vcls:
            mask = 0
            for ck in vcls:
                if meets[ck, ci]:
                    mask |= 1 << pos[ck]
            cover[ci] = mask
        full = (1 << len(vcls)) - 1

        best: tuple[int, list[int]] | None = None

        def consider(family):
            nonlocal best
            m = 0
            for ci in family:
                m |= cover[ci]
            if m != full:
                return
            w = sum(weight[ci] for ci in family)
            key = (w, sorted(family))
            if best is None or (w, sorted(family)) < (best[0], best[1]):
                best = (w, sorted(family))

        pool = sorted(vcls, key=lambda ci: (weight[ci], ci))[:exhaustive_limit]
        for i, a in enumerate(pool):
            consider([a])
            for j in range(i + 1, len(pool)):
                consider([a, pool[j]])
                for k in range(j + 1, len(pool)):
                    consider([a, pool[j], pool[k]])

        # weighted greedy over the full class list as a fallback
        uncovered = full
        fam = []
        while uncovered:
            pick = None
            for ci in vcls:
                gain = (cover[ci] & uncovered).bit_count()
                if gain == 0:
                    continue
                score = (weight[ci] / gain, weight[ci], ci)
                if pick is None or score < pick[0]:
                    pick = (score, ci)
            if pick is None:
                break
            fam.append(pick[1])
            uncovered &= ~cover[pick[1]]
        if not uncovered:
            consider(fam)

        gamma1 = any(len(self.classes[ci].members) == 1 and cover[ci] == full
                     for ci in vcls)
        if best is None:
            return {"family": [], "bound": None, "gamma1_criterion": gamma1}
        return {"family": best[1], "bound": best[0], "gamma1_criterion": gamma1}


def table_of_marks(G: GroupTable, L: Lattice,
                   ring: BurnsideRing | None = None) -> np.ndarray:
    ring = ring if ring is not None else BurnsideRing(G, L)
    return ring.marks_matrix()
