"""Exact domination numbers via set cover, plus a brute-force oracle.

A set of proper subgroups dominates the intersection graph exactly when
their union contains every minimal subgroup, and an optimal dominating set
can be taken inside the maximal subgroups.  That turns domination of the
full graph into a minimum set cover with the atoms as universe and the
coatoms as candidate sets.  Restricted graphs get no such shortcut and are
solved at the graph level (universe = vertices, sets = closed
neighborhoods).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .graphs import IntersectionGraph
from .lattice import Lattice


@dataclass(frozen=True)
class Gamma:
    """A domination number: a positive integer or aleph-0 (empty graph)."""

    finite: int | None  # None encodes aleph-0

    @staticmethod
    def of(k: int) -> "Gamma":
        return Gamma(finite=int(k))

    @property
    def is_aleph0(self) -> bool:
        return self.finite is None

    def __le__(self, other: "Gamma") -> bool:
        if other.finite is None:
            return True
        if self.finite is None:
            return False
        return self.finite <= other.finite

    def __lt__(self, other: "Gamma") -> bool:
        return self <= other and self != other

    def __str__(self) -> str:
        return "aleph0" if self.finite is None else str(self.finite)

    def to_json(self):
        return "aleph0" if self.finite is None else self.finite


ALEPH0 = Gamma(finite=None)


@dataclass(frozen=True)
class DominationCertificate:
    gamma: Gamma
    witness: tuple[int, ...]  # lattice indices (setcover) or graph positions
    optimal: bool
    method: str


@dataclass(frozen=True)
class CoverResult:
    value: Gamma
    witness: tuple[int, ...]
    optimal: bool
    bracket: tuple[int, int] | None = None  # (lower, upper) when not optimal


class _Budget:
    def __init__(self, budget_ms):
        self.deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
        self.hit = False

    def exceeded(self) -> bool:
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.hit = True
        return self.hit


def set_cover_lower_bound(universe_size: int, sets: list[int]) -> int:
    """Greedy packing of points no two of which share a set: each packed
    point needs its own covering set."""
    covers = []
    for a in range(universe_size):
        m = 0
        for si, s in enumerate(sets):
            if s >> a & 1:
                m |= 1 << si
        covers.append(m)
    used = 0
    count = 0
    for a in range(universe_size):
        if covers[a] & used == 0:
            count += 1
            used |= covers[a]
    return count


def min_set_cover(universe_size: int, sets: list[int],
                  budget_ms: float | None = None) -> tuple[list[int], bool]:
    """Minimum set cover by branch and bound.

    ``sets`` are bitmasks over a universe of ``universe_size`` points.
    Branching expands the uncovered point lying in the fewest sets, trying
    those sets in index order; the lower bound is a greedy packing of
    points no two of which share a set.  Returns (chosen indices, optimal).
    """
    full = (1 << universe_size) - 1
    union = 0
    for s in sets:
        union |= s
    if union != full:
        raise ValueError("sets do not cover the universe")

    covers = []  # per point: bitmask over set indices
    for a in range(universe_size):
        m = 0
        for si, s in enumerate(sets):
            if s >> a & 1:
                m |= 1 << si
        covers.append(m)

    def greedy(uncovered: int) -> list[int]:
        chosen = []
        while uncovered:
            best, best_gain = -1, -1
            for si, s in enumerate(sets):
                gain = (s & uncovered).bit_count()
                if gain > best_gain:
                    best, best_gain = si, gain
            chosen.append(best)
            uncovered &= ~sets[best]
        return chosen

    def lower_bound(uncovered: int) -> int:
        used = 0
        count = 0
        rest = uncovered
        while rest:
            low = rest & -rest
            a = low.bit_length() - 1
            rest ^= low
            if covers[a] & used == 0:
                count += 1
                used |= covers[a]
        return count

    budget = _Budget(budget_ms)
    incumbent = greedy(full)
    best_size = len(incumbent)
    optimal = True

    def branch(uncovered: int, chosen: list[int]):
        nonlocal incumbent, best_size, optimal
        if uncovered == 0:
            if len(chosen) < best_size:
                best_size = len(chosen)
                incumbent = list(chosen)
            return
        if budget.exceeded():
            optimal = False
            return
        if len(chosen) + lower_bound(uncovered) >= best_size:
            return
        # point in the fewest candidate sets, smallest index on ties
        pick, pick_count = -1, None
        rest = uncovered
        while rest:
            low = rest & -rest
            a = low.bit_length() - 1
            rest ^= low
            c = covers[a].bit_count()
            if pick_count is None or c < pick_count:
                pick, pick_count = a, c
        m = covers[pick]
        while m:
            low = m & -m
            si = low.bit_length() - 1
            m ^= low
            chosen.append(si)
            branch(uncovered & ~sets[si], chosen)
            chosen.pop()

    branch(full, [])
    return sorted(incumbent), optimal


def gamma_exact(L: Lattice, budget_ms: float | None = None) -> DominationCertificate:
    """Exact domination number of the full intersection graph.

    Returns aleph-0 when there are no proper non-trivial subgroups.  The
    witness holds lattice indices of maximal subgroups forming an optimal
    dominating set.
    """
    if not L.vertex_set:
        return DominationCertificate(gamma=ALEPH0, witness=(), optimal=True, method="setcover")
    atoms = list(L.atoms)
    coatoms = list(L.coatoms)
    atom_pos = {a: k for k, a in enumerate(atoms)}
    sets = []
    for c in coatoms:
        cm = L.subgroups[c].mask
        s = 0
        for a in atoms:
            if L.subgroups[a].mask & ~cm == 0:
                s |= 1 << atom_pos[a]
        sets.append(s)
    chosen, optimal = min_set_cover(len(atoms), sets, budget_ms=budget_ms)
    witness = tuple(sorted(coatoms[i] for i in chosen))
    return DominationCertificate(gamma=Gamma.of(len(chosen)), witness=witness,
                                 optimal=optimal, method="setcover")


def gamma_graph(graph: IntersectionGraph,
                budget_ms: float | None = None) -> DominationCertificate:
    """Exact domination number of an arbitrary intersection graph, solved
    as set cover by closed neighborhoods.  Witness holds graph positions."""
    n = graph.n
    if n == 0:
        return DominationCertificate(gamma=ALEPH0, witness=(), optimal=True, method="setcover")
    sets = []
    for v in range(n):
        s = 1 << v
        for u in range(n):
            if graph.adjacency[v, u]:
                s |= 1 << u
        sets.append(s)
    chosen, optimal = min_set_cover(n, sets, budget_ms=budget_ms)
    return DominationCertificate(gamma=Gamma.of(len(chosen)), witness=tuple(chosen),
                                 optimal=optimal, method="setcover")


def is_dominating(graph: IntersectionGraph, dset) -> bool:
    """Purely graph-theoretic membership test for a dominating set."""
    chosen = set(dset)
    for v in range(graph.n):
        if v in chosen:
            continue
        if not any(graph.adjacency[v, u] for u in chosen):
            return False
    return True


def domination_oracle(graph: IntersectionGraph, k_max: int) -> Gamma | None:
    """Brute-force search over all vertex subsets of size <= k_max, in
    lexicographic order.  None means no dominating set of that size."""
    if graph.n == 0:
        return ALEPH0
    for k in range(1, min(k_max, graph.n) + 1):
        for cand in combinations(range(graph.n), k):
            if is_dominating(graph, cand):
                return Gamma.of(k)
    return None


def sum_number(G, L: Lattice, budget_ms: float | None = None) -> CoverResult:
    """Least number of proper subgroups whose union is the whole group;
    aleph-0 for cyclic groups.  Solved exactly over the maximal subgroups.
    On a budget abort the result carries a (lower, upper) bracket."""
    if G.exponent == G.order:
        return CoverResult(value=ALEPH0, witness=(), optimal=True)
    n = G.order
    sets = [L.subgroups[c].mask >> 1 for c in L.coatoms]  # drop the identity bit
    chosen, optimal = min_set_cover(n - 1, sets, budget_ms=budget_ms)
    witness = tuple(sorted(L.coatoms[i] for i in chosen))
    bracket = None
    if not optimal:
        bracket = (set_cover_lower_bound(n - 1, sets), len(chosen))
    return CoverResult(value=Gamma.of(len(chosen)), witness=witness,
                       optimal=optimal, bracket=bracket)
