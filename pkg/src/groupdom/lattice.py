"""Subgroup lattice enumeration and subgroup-level invariants.

Subgroups are bitmasks over element indices (bit 0, the identity, is always
set).  The enumeration seeds with all cyclic subgroups and closes under
"join with a cyclic subgroup", which reaches every subgroup because each
subgroup is generated by its cyclic subgroups.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import BudgetExceeded
from .groups import GroupTable, indices_to_mask, is_prime, mask_to_indices


@dataclass(frozen=True)
class Subgroup:
    mask: int
    order: int

    @staticmethod
    def from_mask(mask: int) -> "Subgroup":
        return Subgroup(mask=mask, order=mask.bit_count())

    def contains(self, other: "Subgroup") -> bool:
        return other.mask & ~self.mask == 0


def mask_to_array(mask: int, n: int) -> np.ndarray:
    nbytes = (n + 7) // 8
    buf = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.nonzero(np.unpackbits(buf, bitorder="little", count=n))[0]


def array_to_mask(members, n: int) -> int:
    bits = np.zeros(n, dtype=np.uint8)
    bits[members] = 1
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def close_subset(G: GroupTable, seed_mask: int) -> int:
    """Smallest subgroup mask containing the seed elements."""
    n = G.order
    full = (1 << n) - 1
    members = mask_to_array(seed_mask | 1, n)
    size = len(members)
    while True:
        if size > n // 2:
            return full
        prod = np.unique(G.mul[np.ix_(members, members)])
        if len(prod) == size:
            return array_to_mask(prod, n)
        members = prod
        size = len(members)


def _close_join(G: GroupTable, base: np.ndarray, add: np.ndarray) -> int:
    """Closure of (closed subgroup base) union add, skipping base x base."""
    n = G.order
    in_set = np.zeros(n, dtype=bool)
    in_set[base] = True
    in_set[add] = True
    members = np.flatnonzero(in_set)
    new = add
    while True:
        if len(members) > n // 2:
            return (1 << n) - 1
        prods = np.concatenate([G.mul[np.ix_(new, members)].ravel(),
                                G.mul[np.ix_(members, new)].ravel()])
        novel = prods[~in_set[prods]]
        if novel.size == 0:
            return array_to_mask(members, n)
        in_set[novel] = True
        new = np.unique(novel)
        members = np.flatnonzero(in_set)


def generated_subgroup(G: GroupTable, seed_mask: int) -> Subgroup:
    if seed_mask == 0:
        raise ValueError("seed must be non-empty")
    return Subgroup.from_mask(close_subset(G, seed_mask))


def cyclic_subgroup_masks(G: GroupTable) -> list[int]:
    """Masks of all cyclic subgroups, trivial one excluded, deduplicated."""
    seen = set()
    for g in range(1, G.order):
        m = 1 | (1 << g)
        x = g
        while x != 0:
            x = int(G.mul[x, g])
            m |= 1 << x
        seen.add(m)
    return sorted(seen, key=lambda m: (m.bit_count(), m))


def _pack(masks, n: int) -> np.ndarray:
    words = (n + 63) // 64 or 1
    out = np.zeros((len(masks), words), dtype=np.uint64)
    for i, m in enumerate(masks):
        out[i] = np.frombuffer(m.to_bytes(words * 8, "little"), dtype="<u8")
    return out


class Lattice:
    """The complete subgroup lattice of a group.

    ``subgroups`` is sorted by (order, mask): index 0 is the trivial
    subgroup and the last index is the whole group.  Immutable once built.
    """

    def __init__(self, G: GroupTable, masks: set[int]):
        self.group = G
        self.subgroups = [Subgroup.from_mask(m) for m in sorted(masks, key=lambda m: (m.bit_count(), m))]
        self.index = {s.mask: i for i, s in enumerate(self.subgroups)}

    def __len__(self) -> int:
        return len(self.subgroups)

    def leq(self, i: int, j: int) -> bool:
        """Is subgroup i contained in subgroup j?"""
        return self.subgroups[i].mask & ~self.subgroups[j].mask == 0

    @cached_property
    def _packed(self) -> np.ndarray:
        return _pack([s.mask for s in self.subgroups], self.group.order)

    def superset_indices(self, i: int) -> np.ndarray:
        """Indices of all subgroups containing subgroup i (including i)."""
        row = self._packed[i]
        return np.nonzero(((self._packed & row) == row).all(axis=1))[0]

    def subset_indices(self, i: int) -> np.ndarray:
        row = self._packed[i]
        return np.nonzero(((self._packed & row) == self._packed).all(axis=1))[0]

    @cached_property
    def atoms(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.subgroups) if is_prime(s.order))

    @cached_property
    def coatoms(self) -> tuple[int, ...]:
        top = len(self.subgroups) - 1
        out = []
        for i, s in enumerate(self.subgroups):
            if i == top:
                continue
            if len(self.superset_indices(i)) == 2:  # exactly i and G
                out.append(i)
        return tuple(out)

    @cached_property
    def vertex_set(self) -> tuple[int, ...]:
        top = len(self.subgroups) - 1
        return tuple(i for i in range(len(self.subgroups)) if 0 < i < top)

    def join(self, i: int, j: int) -> int:
        """Index of the subgroup generated by subgroups i and j."""
        m = self.subgroups[i].mask | self.subgroups[j].mask
        return self.index[close_subset(self.group, m)]

    def meet(self, i: int, j: int) -> int:
        return self.index[self.subgroups[i].mask & self.subgroups[j].mask]


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = prime_factors(n)
    return len(p) == 1


def _orbit_of_mask(G: GroupTable, mask: int) -> set[int]:
    """Conjugacy orbit of a subgroup mask under the group's generators."""
    gens = list(G.generators) or list(range(G.order))
    orbit = {mask}
    queue = [mask]
    while queue:
        m = queue.pop()
        members = mask_to_array(m, G.order)
        for g in gens:
            gm = G.mul[g, members]
            c = array_to_mask(G.mul[gm, G.inv[g]], G.order)
            if c not in orbit:
                orbit.add(c)
                queue.append(c)
    return orbit


def enumerate_subgroups(G: GroupTable, budget_ms: float | None = None,
                        max_subgroups: int | None = None) -> Lattice:
    """All subgroups of G via cyclic seeds plus join-with-cyclic closure.

    Two shortcuts keep this tractable: joining with prime-power cyclic
    subgroups suffices (every cyclic subgroup is the join of the
    prime-power cyclics in it), and joins only need to extend conjugacy
    class representatives, because a conjugate of a join is the join of
    the conjugates and conjugates of cyclics are cyclic.  Every discovered
    subgroup's whole conjugacy orbit is added.
    """
    t0 = time.monotonic()
    n = G.order
    full = (1 << n) - 1
    abelian = G.is_abelian()
    cyclic = cyclic_subgroup_masks(G)
    joiners = [(c, c.bit_count()) for c in cyclic if _is_prime_power(c.bit_count())]

    known = {1, full}

    def admit(mask: int) -> int:
        """Add a subgroup and its conjugacy orbit; return the orbit rep."""
        if abelian:
            known.add(mask)
            return mask
        orbit = _orbit_of_mask(G, mask)
        known.update(orbit)
        return min(orbit)

    frontier = []
    seen_reps = set()
    for c in cyclic:
        rep = admit(c)
        if rep not in seen_reps:
            seen_reps.add(rep)
            frontier.append(rep)
    seen_seeds = set()
    while frontier:
        next_frontier = []
        for h in frontier:
            h_count = h.bit_count()
            h_members = None
            for c, c_count in joiners:
                if c & ~h == 0:
                    continue
                seed = h | c
                if seed in seen_seeds:
                    continue
                seen_seeds.add(seed)
                if seed in known:
                    continue
                # |<H,C>| >= |HC| = |H||C|/|H&C|, and a subgroup of order
                # greater than n/2 is the whole group
                if h_count * c_count // (h & c).bit_count() > n // 2:
                    j = full
                else:
                    if h_members is None:
                        h_members = mask_to_array(h, n)
                    j = _close_join(G, h_members, mask_to_array(c & ~h, n))
                if j not in known:
                    rep = admit(j)
                    if rep not in seen_reps:
                        seen_reps.add(rep)
                        next_frontier.append(rep)
                    if max_subgroups is not None and len(known) > max_subgroups:
                        raise BudgetExceeded(
                            f"subgroup count exceeded {max_subgroups}", partial=len(known))
            if budget_ms is not None and (time.monotonic() - t0) * 1000 > budget_ms:
                raise BudgetExceeded(
                    f"lattice enumeration exceeded {budget_ms} ms", partial=len(known))
        frontier = next_frontier
    return Lattice(G, known)


def enumerate_subgroups_allpairs(G: GroupTable, budget_ms: float | None = None) -> set[int]:
    """Independent enumeration strategy: close the cyclic seeds under
    pairwise joins of subgroups.  Returns the set of subgroup masks."""
    t0 = time.monotonic()
    n = G.order
    full = (1 << n) - 1
    known = {1, full}
    known.update(cyclic_subgroup_masks(G))
    frontier = sorted(known)
    seen_seeds = set()
    while frontier:
        current = sorted(known)
        next_frontier = []
        for h in frontier:
            h_members = None
            for k in current:
                if k & ~h == 0 or h & ~k == 0:
                    continue
                seed = h | k
                if seed in seen_seeds:
                    continue
                seen_seeds.add(seed)
                if seed in known:
                    continue
                if h.bit_count() * k.bit_count() // (h & k).bit_count() > n // 2:
                    j = full
                else:
                    if h_members is None:
                        h_members = mask_to_array(h, n)
                    j = _close_join(G, h_members, mask_to_array(k & ~h, n))
                if j not in known:
                    known.add(j)
                    next_frontier.append(j)
            if budget_ms is not None and (time.monotonic() - t0) * 1000 > budget_ms:
                raise BudgetExceeded("all-pairs enumeration budget exceeded", partial=len(known))
        frontier = next_frontier
    return known


def subgroups_bruteforce(G: GroupTable) -> set[int]:
    """Brute-force oracle: every subgroup is a union of cyclic subgroups, so
    try all unions and keep the ones that are closed.  Only sane for small
    groups (|G| <= 24 or so)."""
    cyclic = cyclic_subgroup_masks(G)
    if len(cyclic) > 20:
        raise ValueError(f"too many cyclic subgroups ({len(cyclic)}) for brute force")
    n = G.order
    found = {1, (1 << n) - 1}
    for bits in range(1, 1 << len(cyclic)):
        m = 1
        b = bits
        while b:
            low = b & -b
            m |= cyclic[low.bit_length() - 1]
            b ^= low
        if m in found or n % m.bit_count():
            continue
        if close_subset(G, m) == m:
            found.add(m)
    return found


# ---------------------------------------------------------------------------
# Characteristic subgroups and classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CharacteristicSubgroups:
    atom_join: Subgroup          # subgroup generated by all minimal subgroups
    frattini: Subgroup           # intersection of all maximal subgroups
    nilpotent_residual: Subgroup  # limit of the lower central series
    center: Subgroup
    derived: Subgroup
    atom_elements: int           # mask: identity plus every element of prime order


@dataclass(frozen=True)
class GroupClassification:
    is_abelian: bool
    is_nilpotent: bool
    is_solvable: bool
    is_supersolvable: bool
    is_p_group: bool
    p: int
    exponent: int
    squarefree_part: int


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def squarefree_part(n: int) -> int:
    r = 1
    for p in prime_factors(n):
        r *= p
    return r


def derived_subgroup_mask(G: GroupTable, members=None) -> int:
    """Mask of the subgroup generated by commutators [x, g], x in members."""
    n = G.order
    if members is None:
        members = np.arange(n)
    a = G.mul[np.ix_(G.inv[members], G.inv)]
    b = G.mul[np.ix_(members, np.arange(n))]
    comms = np.unique(G.mul[a, b])
    return close_subset(G, indices_to_mask(comms))


def lower_central_series(G: GroupTable) -> list[int]:
    """Masks of the lower central series, down to its stable term."""
    n = G.order
    series = [(1 << n) - 1]
    while True:
        members = np.array(mask_to_indices(series[-1]))
        nxt = derived_subgroup_mask(G, members)
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt == 1:
            return series


def characteristic_subgroups(G: GroupTable, L: Lattice) -> CharacteristicSubgroups:
    atom_mask = 1
    for i in L.atoms:
        atom_mask |= L.subgroups[i].mask
    atom_join = Subgroup.from_mask(close_subset(G, atom_mask))

    frat = (1 << G.order) - 1
    for i in L.coatoms:
        frat &= L.subgroups[i].mask
    frattini = Subgroup.from_mask(frat)

    series = lower_central_series(G)
    residual = Subgroup.from_mask(series[-1])

    center_mask = indices_to_mask(np.nonzero((G.mul == G.mul.T).all(axis=1))[0])
    derived = Subgroup.from_mask(derived_subgroup_mask(G))
    return CharacteristicSubgroups(
        atom_join=atom_join, frattini=frattini, nilpotent_residual=residual,
        center=Subgroup.from_mask(center_mask), derived=derived,
        atom_elements=atom_mask)


def sylow_counts(G: GroupTable, L: Lattice) -> dict[int, int]:
    """Number of Sylow p-subgroups per prime p dividing |G|."""
    n = G.order
    counts = {}
    for p in prime_factors(n):
        pa = 1
        while n % (pa * p) == 0:
            pa *= p
        counts[p] = sum(1 for s in L.subgroups if s.order == pa)
    return counts


def classify_group(G: GroupTable, L: Lattice) -> GroupClassification:
    n = G.order
    primes = prime_factors(n)
    abelian = G.is_abelian()
    is_p_group = len(primes) == 1
    p = primes[0] if is_p_group else 0

    # nilpotent: every Sylow subgroup is normal, i.e. unique
    nilpotent = all(c == 1 for c in sylow_counts(G, L).values()) if n > 1 else True

    # solvable: derived series reaches the trivial subgroup
    mask = (1 << n) - 1
    while True:
        members = np.array(mask_to_indices(mask))
        a = G.mul[np.ix_(G.inv[members], G.inv[members])]
        b = G.mul[np.ix_(members, members)]
        nxt = close_subset(G, indices_to_mask(np.unique(G.mul[a, b])))
        if nxt == mask:
            break
        mask = nxt
    solvable = mask == 1

    # supersolvable: every maximal subgroup has prime index
    supersolvable = n > 1 and all(
        is_prime(n // L.subgroups[i].order) for i in L.coatoms)

    exponent = G.exponent
    return GroupClassification(
        is_abelian=abelian, is_nilpotent=nilpotent, is_solvable=solvable,
        is_supersolvable=supersolvable, is_p_group=is_p_group, p=p,
        exponent=exponent, squarefree_part=squarefree_part(n))


# ---------------------------------------------------------------------------
# Conjugacy classes of subgroups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubgroupClass:
    rep: int                  # lattice index of the representative (smallest mask)
    members: tuple[int, ...]  # lattice indices, sorted
    normalizer: Subgroup


def conjugate_mask(G: GroupTable, mask: int, g: int) -> int:
    members = np.array(mask_to_indices(mask))
    gm = G.mul[g, members]
    return indices_to_mask(G.mul[gm, G.inv[g]])


def subgroup_classes(G: GroupTable, L: Lattice) -> list[SubgroupClass]:
    """Conjugacy classes of subgroups; classes sorted by (order, rep mask)."""
    if G.is_abelian():
        full = Subgroup.from_mask((1 << G.order) - 1)
        return [SubgroupClass(rep=i, members=(i,), normalizer=full)
                for i in range(len(L.subgroups))]

    gens = list(G.generators) or list(range(G.order))
    assigned = [False] * len(L.subgroups)
    classes = []
    for i in range(len(L.subgroups)):
        if assigned[i]:
            continue
        orbit_masks = {L.subgroups[i].mask}
        queue = [L.subgroups[i].mask]
        while queue:
            m = queue.pop()
            for g in gens:
                c = conjugate_mask(G, m, g)
                if c not in orbit_masks:
                    orbit_masks.add(c)
                    queue.append(c)
        member_idx = tuple(sorted(L.index[m] for m in orbit_masks))
        for j in member_idx:
            assigned[j] = True
        rep_mask = min(orbit_masks)
        norm = 0
        for g in range(G.order):
            if conjugate_mask(G, rep_mask, g) == rep_mask:
                norm |= 1 << g
        classes.append(SubgroupClass(rep=L.index[rep_mask], members=member_idx,
                                     normalizer=Subgroup.from_mask(norm)))
    classes.sort(key=lambda c: (L.subgroups[c.rep].order, L.subgroups[c.rep].mask))
    return classes


def class_of_subgroup(L: Lattice, classes: list[SubgroupClass]) -> np.ndarray:
    """Array mapping lattice index -> class index."""
    out = np.full(len(L.subgroups), -1, dtype=np.int64)
    for ci, cls in enumerate(classes):
        for j in cls.members:
            out[j] = ci
    return out
