"""Subgroup complexes and their rational homology.

Four constructions: the intersection complex (faces = sets of proper
subgroups with a common non-trivial intersection), the order complex of
the proper non-trivial subgroup poset (faces = chains), and the two
nerves, of the atom-upset covering and the coatom-downset covering.  All
four are homotopy equivalent, which the library checks by computing their
reduced rational Betti numbers.

Faces are bitmasks over a local vertex list.  Betti numbers come from
exact rank computations over the rationals; complexes are first shrunk by
elementary collapses, which preserve the homotopy type.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction

from .domination import Gamma
from .errors import BudgetExceeded
from .lattice import CharacteristicSubgroups, Lattice

DEFAULT_FACE_BUDGET = 2_000_000


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_labels: tuple[str, ...]
    facets: tuple[int, ...]  # inclusion-maximal faces as vertex bitmasks

    @staticmethod
    def from_facets(labels, masks) -> "SimplicialComplex":
        uniq = sorted(set(m for m in masks if m), key=lambda m: (m.bit_count(), m))
        maximal = [m for m in uniq if not any(m != o and m & ~o == 0 for o in uniq)]
        return SimplicialComplex(vertex_labels=tuple(labels), facets=tuple(maximal))

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_labels)

    def dim(self) -> int:
        if not self.facets:
            return -1
        return max(f.bit_count() for f in self.facets) - 1

    def is_empty(self) -> bool:
        return not self.facets

    def is_simplex(self) -> bool:
        """One facet containing every vertex."""
        return len(self.facets) == 1 and self.facets[0].bit_count() == self.n_vertices

    def faces(self, budget: int = DEFAULT_FACE_BUDGET) -> set[int]:
        """All non-empty faces.  Raises BudgetExceeded past the budget."""
        out: set[int] = set()
        for f in self.facets:
            if f.bit_count() > 21:
                raise BudgetExceeded("facet too large to enumerate faces",
                                     partial=len(out))
            sub = f
            while True:
                if sub and sub not in out:
                    out.add(sub)
                    if len(out) > budget:
                        raise BudgetExceeded("face budget exceeded", partial=len(out))
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return out

    def f_vector(self, budget: int = DEFAULT_FACE_BUDGET) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for face in self.faces(budget):
            k = face.bit_count() - 1
            counts[k] = counts.get(k, 0) + 1
        return tuple(counts.get(k, 0) for k in range(self.dim() + 1))

    def edges(self) -> set[tuple[int, int]]:
        out = set()
        for f in self.facets:
            verts = _bits(f)
            for i in range(len(verts)):
                for j in range(i + 1, len(verts)):
                    out.add((verts[i], verts[j]))
        return out


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class HomologyProfile:
    betti: tuple[int, ...]  # reduced Betti numbers b0..b_dim
    euler: int              # from face counts
    dim: int
    complete: bool
    model: str = ""

    def reduced(self) -> tuple[int, ...]:
        """Betti vector with trailing zeros stripped, for comparisons."""
        b = list(self.betti)
        while b and b[-1] == 0:
            b.pop()
        return tuple(b)


# ---------------------------------------------------------------------------
# Complex constructions
# ---------------------------------------------------------------------------


def _vertex_labels(L: Lattice, vertices) -> tuple[str, ...]:
    return tuple(f"H{L.subgroups[i].order}_{i}" for i in vertices)


def intersection_complex(L: Lattice, vertices: tuple[int, ...] | None = None) -> SimplicialComplex:
    """Faces are sets of proper non-trivial subgroups with non-trivial
    common intersection; facets are indexed by atoms (a common
    intersection always contains some atom)."""
    verts = tuple(vertices) if vertices is not None else L.vertex_set
    pos = {v: k for k, v in enumerate(verts)}
    facets = []
    for a in L.atoms:
        am = L.subgroups[a].mask
        m = 0
        for v in verts:
            if am & ~L.subgroups[v].mask == 0:
                m |= 1 << pos[v]
        facets.append(m)
    return SimplicialComplex.from_facets(_vertex_labels(L, verts), facets)


def order_complex(L: Lattice, vertices: tuple[int, ...] | None = None,
                  max_chains: int = DEFAULT_FACE_BUDGET) -> SimplicialComplex:
    """Facets are the maximal chains of the chosen subposet (default: all
    proper non-trivial subgroups)."""
    verts = tuple(vertices) if vertices is not None else L.vertex_set
    pos = {v: k for k, v in enumerate(verts)}
    by_order = sorted(verts, key=lambda v: (L.subgroups[v].order, L.subgroups[v].mask))
    strict_sups = {v: [w for w in by_order
                       if L.subgroups[w].order > L.subgroups[v].order
                       and L.leq(v, w)] for v in verts}
    covers: dict[int, list[int]] = {}
    for v in verts:
        sups = strict_sups[v]
        covers[v] = [w for w in sups
                     if not any(L.leq(u, w) and u != w for u in sups if u != w and L.leq(u, w))]
    minimal = [v for v in by_order if not any(L.leq(u, v) and u != v for u in verts)]
    facets = []

    def extend(chain_mask: int, last: int):
        nxt = covers[last]
        if not nxt:
            facets.append(chain_mask)
            if len(facets) > max_chains:
                raise BudgetExceeded("maximal chain budget exceeded", partial=len(facets))
            return
        for w in nxt:
            extend(chain_mask | (1 << pos[w]), w)

    for v in minimal:
        extend(1 << pos[v], v)
    return SimplicialComplex.from_facets(_vertex_labels(L, verts), facets)


def nerve(cover_sets: list[int], labels: tuple[str, ...] | None = None) -> SimplicialComplex:
    """Nerve of a covering given as bitmasks over an arbitrary point set.

    J is a face iff the members indexed by J have a common point, so the
    facets are the inclusion-maximal witness sets {i : point in C_i}.
    """
    m = len(cover_sets)
    if labels is None:
        labels = tuple(f"C{i}" for i in range(m))
    union = 0
    for c in cover_sets:
        union |= c
    facets = set()
    rest = union
    while rest:
        low = rest & -rest
        rest ^= low
        j = 0
        for i, c in enumerate(cover_sets):
            if c & low:
                j |= 1 << i
        facets.add(j)
    return SimplicialComplex.from_facets(labels, facets)


def atom_nerve(L: Lattice) -> SimplicialComplex:
    """Nerve of the upward-closed covering by atom up-sets of the proper
    non-trivial subgroup poset."""
    verts = L.vertex_set
    pos = {v: k for k, v in enumerate(verts)}
    covers = []
    for a in L.atoms:
        am = L.subgroups[a].mask
        m = 0
        for v in verts:
            if am & ~L.subgroups[v].mask == 0:
                m |= 1 << pos[v]
        covers.append(m)
    labels = tuple(f"A{L.subgroups[a].order}_{a}" for a in L.atoms)
    return nerve(covers, labels)


def coatom_nerve(L: Lattice) -> SimplicialComplex:
    """Nerve of the downward-closed covering by coatom down-sets."""
    verts = L.vertex_set
    pos = {v: k for k, v in enumerate(verts)}
    covers = []
    for c in L.coatoms:
        cm = L.subgroups[c].mask
        m = 0
        for v in verts:
            if L.subgroups[v].mask & ~cm == 0:
                m |= 1 << pos[v]
        covers.append(m)
    labels = tuple(f"M{L.subgroups[c].order}_{c}" for c in L.coatoms)
    return nerve(covers, labels)


# ---------------------------------------------------------------------------
# Collapses
# ---------------------------------------------------------------------------


def _coface_counts(faces: set[int]) -> tuple[dict, dict]:
    """Immediate-coface count and xor-of-cofaces per face."""
    count: dict[int, int] = {}
    cx: dict[int, int] = {}
    for g in faces:
        m = g
        while m:
            low = m & -m
            m ^= low
            s = g ^ low
            if s:
                count[s] = count.get(s, 0) + 1
                cx[s] = cx.get(s, 0) ^ g
    return count, cx


def _update_removed(alive: set, count: dict, cx: dict, removed: int, push):
    m = removed
    while m:
        low = m & -m
        m ^= low
        s = removed ^ low
        if s and s in alive:
            count[s] = count.get(s, 0) - 1
            cx[s] = cx.get(s, 0) ^ removed
            if count[s] == 1:
                push(s)


def reduce_by_collapses(faces: set[int]) -> set[int]:
    """A maximal sequence of elementary collapses, high dimension first.

    A face is free exactly when it has a single immediate coface (that
    coface is then automatically maximal); removing the pair preserves the
    homotopy type.
    """
    alive = set(faces)
    count, cx = _coface_counts(alive)
    stack = sorted((f for f in alive if count.get(f, 0) == 1),
                   key=lambda f: (f.bit_count(), f))
    while stack:
        f = stack.pop()
        if f not in alive or count.get(f, 0) != 1:
            continue
        g = cx[f]
        if g not in alive:
            continue
        alive.discard(f)
        alive.discard(g)
        _update_removed(alive, count, cx, g, stack.append)
        _update_removed(alive, count, cx, f, stack.append)
    return alive


def greedy_collapse(complex_: SimplicialComplex,
                    budget: int = DEFAULT_FACE_BUDGET) -> dict:
    """Deterministic collapse probe: repeatedly remove the free face of
    minimal dimension with the smallest mask.  Full collapse to a point
    certifies contractibility; anything else is inconclusive."""
    faces = complex_.faces(budget)
    alive = set(faces)
    count, cx = _coface_counts(alive)
    heap = [(f.bit_count(), f) for f in alive if count.get(f, 0) == 1]
    heapq.heapify(heap)

    def push(s):
        heapq.heappush(heap, (s.bit_count(), s))

    steps = 0
    while heap:
        _, f = heapq.heappop(heap)
        if f not in alive or count.get(f, 0) != 1:
            continue
        g = cx[f]
        if g not in alive:
            continue
        alive.discard(f)
        alive.discard(g)
        steps += 1
        _update_removed(alive, count, cx, g, push)
        _update_removed(alive, count, cx, f, push)
    collapsed = len(alive) == 1
    return {"collapsed_to_point": collapsed, "steps": steps,
            "remaining_faces": len(alive)}


# ---------------------------------------------------------------------------
# Exact homology
# ---------------------------------------------------------------------------


def _exact_rank(columns: list[dict[int, int]]) -> int:
    """Rank over the rationals of a matrix given by sparse columns."""
    rank = 0
    pivots: dict[int, dict[int, Fraction]] = {}
    for col in columns:
        cur = {r: Fraction(v) for r, v in col.items() if v}
        while cur:
            r = min(cur)
            if r in pivots:
                factor = cur[r]
                for pr, pv in pivots[r].items():
                    nv = cur.get(pr, Fraction()) - factor * pv
                    if nv:
                        cur[pr] = nv
                    else:
                        cur.pop(pr, None)
            else:
                lead = cur[r]
                pivots[r] = {pr: pv / lead for pr, pv in cur.items()}
                rank += 1
                break
    return rank


def _boundary_ranks(faces: set[int], top_dim: int) -> list[int]:
    """Ranks of the boundary maps d_k for k = 1..top_dim+1 on the complex
    spanned by ``faces`` (must be closed under taking subfaces)."""
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    for k in by_dim:
        by_dim[k].sort()
    ranks = []
    for k in range(1, top_dim + 2):
        if k not in by_dim or (k - 1) not in by_dim:
            ranks.append(0)
            continue
        row_index = {f: i for i, f in enumerate(by_dim[k - 1])}
        cols = []
        for g in by_dim[k]:
            verts = _bits(g)
            col = {}
            for i, v in enumerate(verts):
                s = g ^ (1 << v)
                col[row_index[s]] = -1 if i % 2 else 1
            cols.append(col)
        ranks.append(_exact_rank(cols))
    return ranks


def betti(complex_: SimplicialComplex, face_budget: int = DEFAULT_FACE_BUDGET,
          model: str = "") -> HomologyProfile:
    """Reduced rational Betti numbers and Euler characteristic.

    The complex is reduced by elementary collapses before the exact rank
    computations; the Euler characteristic comes from the original face
    counts, and agreement with the alternating Betti sum is asserted.
    """
    if complex_.is_empty():
        return HomologyProfile(betti=(), euler=0, dim=-1, complete=True, model=model)
    if len(complex_.facets) == 1:
        # a single facet is a full simplex: contractible, chi = 1
        d = complex_.facets[0].bit_count() - 1
        return HomologyProfile(betti=(0,) * (d + 1), euler=1, dim=d,
                               complete=True, model=model)
    try:
        faces = complex_.faces(face_budget)
    except BudgetExceeded:
        return _betti_truncated(complex_, face_budget, model)
    f_counts: dict[int, int] = {}
    for f in faces:
        k = f.bit_count() - 1
        f_counts[k] = f_counts.get(k, 0) + 1
    dim = max(f_counts)
    euler = sum((-1) ** k * c for k, c in f_counts.items())

    core = reduce_by_collapses(faces)
    core_counts: dict[int, int] = {}
    for f in core:
        k = f.bit_count() - 1
        core_counts[k] = core_counts.get(k, 0) + 1
    ranks = _boundary_ranks(core, dim)  # ranks[k-1] = rank d_k
    b = []
    for k in range(dim + 1):
        fk = core_counts.get(k, 0)
        r_k = ranks[k - 1] if k >= 1 else 0
        r_k1 = ranks[k] if k < len(ranks) else 0
        b.append(fk - r_k - r_k1)
    b[0] -= 1  # reduced homology
    profile = HomologyProfile(betti=tuple(b), euler=euler, dim=dim,
                              complete=True, model=model)
    if euler != 1 + sum((-1) ** k * bk for k, bk in enumerate(b)):
        raise AssertionError("Euler characteristic disagrees with Betti numbers")
    return profile


def _betti_truncated(complex_: SimplicialComplex, face_budget: int,
                     model: str) -> HomologyProfile:
    """Best-effort profile when full face enumeration blows the budget:
    enumerate by increasing dimension and stop at the last complete one."""
    from itertools import combinations

    facet_bits = [_bits(f) for f in complex_.facets]
    per_dim: list[set[int]] = []
    total = 0
    k = 0
    while True:
        sk: set[int] = set()
        for fb in facet_bits:
            if len(fb) < k + 1:
                continue
            for combo in combinations(fb, k + 1):
                m = 0
                for v in combo:
                    m |= 1 << v
                sk.add(m)
        if not sk:
            break
        total += len(sk)
        if total > face_budget:
            break
        per_dim.append(sk)
        k += 1
    if len(per_dim) < 2:
        return HomologyProfile(betti=(), euler=0, dim=-1, complete=False, model=model)
    # complete dims: 0..len(per_dim)-1; ranks d_1..d_{len-1} computable
    faces = set().union(*per_dim)
    top = len(per_dim) - 2  # betti reported through this dimension
    ranks = _boundary_ranks(faces, top)
    b = []
    for k in range(top + 1):
        fk = len(per_dim[k])
        r_k = ranks[k - 1] if k >= 1 else 0
        r_k1 = ranks[k]
        b.append(fk - r_k - r_k1)
    b[0] -= 1
    return HomologyProfile(betti=tuple(b), euler=0, dim=top, complete=False, model=model)


# ---------------------------------------------------------------------------
# Per-group topology report
# ---------------------------------------------------------------------------


@dataclass
class TopologyReport:
    group: str
    profiles: dict          # model name -> HomologyProfile or None
    simplex_atom_nerve: bool
    simplex_coatom_nerve: bool
    frattini_nontrivial: bool
    gamma_is_one: bool
    profiles_agree: bool | None
    betti_vanish: bool | None   # for gamma = 1 groups, on the preferred model
    collapse: dict | None       # greedy collapse probe of the intersection complex
    checks: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "profiles": {k: (None if p is None else {
                "betti": list(p.betti), "euler": p.euler, "dim": p.dim,
                "complete": p.complete}) for k, p in sorted(self.profiles.items())},
            "simplex_atom_nerve": self.simplex_atom_nerve,
            "simplex_coatom_nerve": self.simplex_coatom_nerve,
            "frattini_nontrivial": self.frattini_nontrivial,
            "gamma_is_one": self.gamma_is_one,
            "profiles_agree": self.profiles_agree,
            "betti_vanish": self.betti_vanish,
            "collapse": self.collapse,
            "checks": {k: v for k, v in sorted(self.checks.items())},
        }


def topology_report(G, L: Lattice, chars: CharacteristicSubgroups,
                    gamma: Gamma, face_budget: int = DEFAULT_FACE_BUDGET,
                    full_models: bool = True) -> TopologyReport:
    """Build the four complexes, compare Betti profiles, and evaluate the
    simplex criteria: the coatom nerve is a simplex iff the Frattini
    subgroup is non-trivial, and the atom nerve is a simplex iff gamma
    is 1."""
    na = atom_nerve(L)
    nm = coatom_nerve(L)
    profiles: dict[str, HomologyProfile | None] = {}

    def safe_betti(cx, name):
        try:
            return betti(cx, face_budget, model=name)
        except BudgetExceeded:
            return None

    profiles["atom_nerve"] = safe_betti(na, "atom_nerve")
    profiles["coatom_nerve"] = safe_betti(nm, "coatom_nerve")
    if full_models:
        kg = intersection_complex(L)
        profiles["intersection"] = safe_betti(kg, "intersection")
        try:
            oc = order_complex(L, max_chains=face_budget)
            profiles["order"] = safe_betti(oc, "order")
        except BudgetExceeded:
            profiles["order"] = None
    else:
        kg = None
        profiles["intersection"] = None
        profiles["order"] = None

    complete = [p for p in profiles.values() if p is not None and p.complete]
    agree: bool | None
    if len(complete) < 2:
        agree = None
    else:
        first = complete[0].reduced()
        agree = all(p.reduced() == first for p in complete[1:])

    gamma_is_one = gamma == Gamma.of(1)
    frattini_nontrivial = chars.frattini.order > 1

    betti_vanish: bool | None = None
    if gamma_is_one:
        preferred = profiles.get("intersection") or profiles["atom_nerve"]
        if preferred is not None and preferred.complete:
            betti_vanish = all(bk == 0 for bk in preferred.betti)

    collapse = None
    if kg is not None and not kg.is_empty():
        try:
            collapse = greedy_collapse(kg, budget=face_budget)
        except BudgetExceeded:
            collapse = None

    checks = {
        "coatom_nerve_simplex_iff_frattini": nm.is_simplex() == frattini_nontrivial,
        "atom_nerve_simplex_iff_gamma_one": na.is_simplex() == gamma_is_one,
    }
    return TopologyReport(
        group=G.label, profiles=profiles,
        simplex_atom_nerve=na.is_simplex(), simplex_coatom_nerve=nm.is_simplex(),
        frattini_nontrivial=frattini_nontrivial, gamma_is_one=gamma_is_one,
        profiles_agree=agree, betti_vanish=betti_vanish, collapse=collapse,
        checks=checks)
