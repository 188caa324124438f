"""Finite groups as explicit multiplication tables.

Elements are dense indices 0..n-1 with index 0 the identity, so subgroups
can live in bitmasks and multiplication is a table lookup.  Groups built
from permutation generators enumerate elements by breadth-first closure in
lexicographic image order, which makes indexing reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import CapExceeded, SpecError

DEFAULT_ELEMENT_CAP = 5040


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Permutation:
    """A permutation of {0..degree-1} stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise SpecError(f"images {self.images} are not a bijection")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (p * q)(x) = p(q(x))
        return Permutation(tuple(self.images[other.images[x]] for x in range(self.degree)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(tuple(inv))

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(tuple(range(degree)))

    @staticmethod
    def from_cycles(cycles: list[list[int]], degree: int) -> "Permutation":
        """Build from 0-based cycles, applied left to right."""
        perm = Permutation.identity(degree)
        for cyc in cycles:
            images = list(range(degree))
            for i, pt in enumerate(cyc):
                images[pt] = cyc[(i + 1) % len(cyc)]
            perm = Permutation(tuple(images)) * perm
        return perm


@dataclass(frozen=True)
class GroupSpec:
    """Structured description of a finite group to build.

    kind is one of: cyclic, abelian, dihedral, symmetric, alternating,
    quaternion8, semidirect, perm, quotient.
    """

    kind: str
    n: int = 0
    factors: tuple[int, ...] = ()
    degree: int = 0
    generators: tuple[Permutation, ...] = ()
    p: int = 0
    q: int = 0
    base: "GroupSpec | None" = None
    kernel_seed: tuple[int, ...] = ()
    text: str = ""

    def label(self) -> str:
        if self.text:
            return self.text
        if self.kind == "cyclic":
            return f"C{self.n}"
        if self.kind == "abelian":
            return "x".join(f"C{f}" for f in self.factors)
        if self.kind == "dihedral":
            return f"D{self.n}"
        if self.kind == "symmetric":
            return f"S{self.degree}"
        if self.kind == "alternating":
            return f"A{self.degree}"
        if self.kind == "quaternion8":
            return "Q8"
        if self.kind == "semidirect":
            return f"SD({self.p},{self.q})"
        return self.kind


@dataclass(frozen=True)
class GroupTable:
    """A finite group: multiplication table plus derived element data.

    All arrays are frozen after construction; tables are safe to share
    between threads read-only.
    """

    order: int
    mul: np.ndarray
    inv: np.ndarray
    elem_order: np.ndarray
    label: str
    spec: GroupSpec | None = None
    generators: tuple[int, ...] = ()

    def __post_init__(self):
        self.mul.setflags(write=False)
        self.inv.setflags(write=False)
        self.elem_order.setflags(write=False)

    @property
    def exponent(self) -> int:
        e = 1
        for k in self.elem_order:
            e = e * int(k) // gcd(e, int(k))
        return e

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def conjugate(self, x: int, g: int) -> int:
        """g x g^-1"""
        return int(self.mul[self.mul[g, x], self.inv[g]])

    def commutator(self, x: int, y: int) -> int:
        """x^-1 y^-1 x y"""
        m = self.mul
        return int(m[m[self.inv[x], self.inv[y]], m[x, y]])


# ---------------------------------------------------------------------------
# Spec parsing
# ---------------------------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([0-9, ]+)\)")


def parse_group_spec(text: str) -> GroupSpec:
    """Parse the ASCII group grammar.

    Accepted forms: C<n>, C<n1>x<n2>x..., D<m> (dihedral of order m, m even,
    m >= 4), S<n>, A<n>, Q8, SD(<p>,<q>), and
    perm:<degree>:<cycles>;<cycles>;... with 1-based cycles like (1,2)(3,4).
    """
    s = text.strip()
    if not s:
        raise SpecError("empty group spec", 0)

    if s == "Q8":
        return GroupSpec(kind="quaternion8", n=8, text=s)

    if s.startswith("perm:"):
        return _parse_perm_spec(s)

    if s.startswith("SD(") or s.startswith("SD "):
        m = re.fullmatch(r"SD\((\d+),(\d+)\)", s)
        if not m:
            raise SpecError(f"malformed semidirect spec {s!r}", 2)
        p, q = int(m.group(1)), int(m.group(2))
        if not is_prime(p) or not is_prime(q):
            raise SpecError(f"SD({p},{q}): p and q must be prime")
        if (p - 1) % q != 0:
            raise SpecError(f"SD({p},{q}): q must divide p-1")
        return GroupSpec(kind="semidirect", p=p, q=q, n=p * q, text=s)

    head, rest = s[0], s[1:]
    if head == "C":
        parts = rest.split("x")
        try:
            # "C2xC2xC3" and "C2x2x3" both mean abelian [2,2,3]
            factors = tuple(int(p[1:] if p.startswith("C") else p) for p in parts)
        except ValueError:
            raise SpecError(f"malformed cyclic/abelian spec {s!r}", 1) from None
        if any(f < 1 for f in factors):
            raise SpecError(f"abelian factors must be positive in {s!r}")
        if len(factors) == 1:
            return GroupSpec(kind="cyclic", n=factors[0], text=s)
        return GroupSpec(kind="abelian", factors=factors, text=s)

    if head in ("D", "S", "A"):
        try:
            n = int(rest)
        except ValueError:
            raise SpecError(f"malformed spec {s!r}", 1) from None
        if head == "D":
            if n % 2 != 0 or n < 4:
                raise SpecError(f"D{n}: dihedral order must be even and >= 4")
            return GroupSpec(kind="dihedral", n=n, text=s)
        if n < 1:
            raise SpecError(f"{s!r}: degree must be positive")
        return GroupSpec(kind="symmetric" if head == "S" else "alternating", degree=n, text=s)

    raise SpecError(f"unrecognized group spec {s!r}", 0)


def _parse_perm_spec(s: str) -> GroupSpec:
    parts = s.split(":", 2)
    if len(parts) != 3:
        raise SpecError(f"malformed perm spec {s!r}", len(s))
    try:
        degree = int(parts[1])
    except ValueError:
        raise SpecError(f"bad degree in {s!r}", 5) from None
    if degree < 1:
        raise SpecError(f"degenerate perm spec: degree {degree}")
    gens = []
    for chunk in parts[2].split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        cycles = []
        covered = 0
        for m in _CYCLE_RE.finditer(chunk):
            pts = [int(t) for t in m.group(1).replace(" ", "").split(",") if t]
            if any(pt < 1 or pt > degree for pt in pts):
                raise SpecError(f"cycle point out of range in {chunk!r}", s.find(chunk))
            cycles.append([pt - 1 for pt in pts])
            covered += len(m.group(0))
        if covered != len(chunk.replace(" ", "")):
            raise SpecError(f"malformed cycles {chunk!r}", s.find(chunk))
        gens.append(Permutation.from_cycles(cycles, degree))
    if not gens:
        raise SpecError(f"perm spec {s!r} has no generators")
    return GroupSpec(kind="perm", degree=degree, generators=tuple(gens), text=s)


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------


def build_group(spec: GroupSpec, cap: int = DEFAULT_ELEMENT_CAP) -> GroupTable:
    """Materialize a GroupTable from a spec.

    Raises CapExceeded if a generator closure would grow past ``cap``.
    """
    if spec.kind == "quotient":
        base = build_group(spec.base, cap=cap)
        quot, _ = quotient_group(base, _normal_closure_mask(base, spec.kernel_seed))
        return GroupTable(order=quot.order, mul=quot.mul, inv=quot.inv,
                          elem_order=quot.elem_order, label=spec.label(),
                          spec=spec, generators=quot.generators)

    perm_gens = None
    gens = None
    if spec.kind == "cyclic":
        mul = _cyclic_table(spec.n)
        gens = [1] if spec.n > 1 else [0]
    elif spec.kind == "abelian":
        mul = _abelian_table(spec.factors)
        weight = 1
        gens = []
        for f in reversed(spec.factors):
            if f > 1:
                gens.append(weight)
            weight *= f
        gens = sorted(gens) or [0]
    elif spec.kind == "dihedral":
        mul = _dihedral_table(spec.n // 2)
        gens = [1, spec.n // 2]  # the rotation a and the reflection b
    elif spec.kind == "quaternion8":
        mul = _quaternion_table()
        gens = [2, 4]  # i and j
    elif spec.kind == "symmetric":
        perm_gens = _symmetric_generators(spec.degree)
    elif spec.kind == "alternating":
        perm_gens = _alternating_generators(spec.degree)
    elif spec.kind == "semidirect":
        perm_gens = _semidirect_generators(spec.p, spec.q)
    elif spec.kind == "perm":
        perm_gens = list(spec.generators)
    else:
        raise SpecError(f"unknown spec kind {spec.kind!r}")

    if perm_gens is not None:
        mul, gens = _perm_closure_table(perm_gens, perm_gens[0].degree, cap)
    elif gens is None:
        gens = list(range(mul.shape[0]))
    return _finalize(mul, spec.label(), spec, gens)


def _finalize(mul: np.ndarray, label: str, spec, generators) -> GroupTable:
    n = mul.shape[0]
    _validate_table(mul)
    inv = np.empty(n, dtype=np.int32)
    rows, cols = np.nonzero(mul == 0)
    inv[rows] = cols
    orders = np.empty(n, dtype=np.int32)
    for g in range(n):
        k, x = 1, g
        while x != 0:
            x = int(mul[x, g])
            k += 1
        orders[g] = k
    if any(n % int(k) for k in orders):
        raise SpecError("element order does not divide group order; table is not a group")
    return GroupTable(order=n, mul=mul, inv=inv, elem_order=orders, label=label,
                      spec=spec, generators=tuple(generators))


def _validate_table(mul: np.ndarray) -> None:
    n = mul.shape[0]
    if mul.shape != (n, n):
        raise SpecError("multiplication table is not square")
    if not np.array_equal(mul[0], np.arange(n)) or not np.array_equal(mul[:, 0], np.arange(n)):
        raise SpecError("index 0 does not act as the identity")
    if not all((np.sort(mul[i]) == np.arange(n)).all() for i in range(n)):
        raise SpecError("table rows are not permutations")
    # Associativity: full check is cubic, so sample beyond order 64.
    if n <= 64:
        a = mul[mul, :]   # a[i,j,k] = (ij)k
        b = mul[:, mul]   # b[i,j,k] = i(jk)
        if not np.array_equal(a, b):
            raise SpecError("table is not associative")
    else:
        rng = np.random.default_rng(0)
        idx = rng.integers(0, n, size=(10000, 3))
        i, j, k = idx[:, 0], idx[:, 1], idx[:, 2]
        if not np.array_equal(mul[mul[i, j], k], mul[i, mul[j, k]]):
            raise SpecError("table failed sampled associativity check")


def _cyclic_table(n: int) -> np.ndarray:
    if n < 1:
        raise SpecError(f"cyclic order {n} must be positive")
    i = np.arange(n, dtype=np.int32)
    return (i[:, None] + i[None, :]) % n


def _abelian_table(factors: tuple[int, ...]) -> np.ndarray:
    n = 1
    for f in factors:
        n *= f
    if n > 250_000:
        raise SpecError("abelian group too large to tabulate")
    # mixed-radix digits, identity (0,...,0) is index 0
    digits = np.zeros((n, len(factors)), dtype=np.int64)
    idx = np.arange(n)
    rem = idx.copy()
    for pos in range(len(factors) - 1, -1, -1):
        digits[:, pos] = rem % factors[pos]
        rem //= factors[pos]
    weights = np.ones(len(factors), dtype=np.int64)
    for pos in range(len(factors) - 2, -1, -1):
        weights[pos] = weights[pos + 1] * factors[pos + 1]
    mods = np.array(factors, dtype=np.int64)
    table = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        s = (digits[i] + digits) % mods
        table[i] = s @ weights
    return table


def _dihedral_table(n: int) -> np.ndarray:
    # elements a^i b^j with index i + n*j; (a^i b^j)(a^k b^l) = a^(i + (-1)^j k) b^(j+l)
    size = 2 * n
    table = np.empty((size, size), dtype=np.int32)
    for idx in range(size):
        i, j = idx % n, idx // n
        k = np.arange(size) % n
        ell = np.arange(size) // n
        sign = 1 if j == 0 else -1
        table[idx] = (i + sign * k) % n + n * ((j + ell) % 2)
    return table


_Q8_BASIS = {  # (basis, basis) -> (sign, basis) with basis 0=1,1=i,2=j,3=k
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def _quaternion_table() -> np.ndarray:
    # element index 2*basis + (0 if +, 1 if -): order 1,-1,i,-i,j,-j,k,-k
    def mulq(x, y):
        bx, sx = divmod(x, 2)
        by, sy = divmod(y, 2)
        sign, b = _Q8_BASIS[(bx, by)]
        s = (sx + sy + (1 if sign < 0 else 0)) % 2
        return 2 * b + s

    table = np.array([[mulq(x, y) for y in range(8)] for x in range(8)], dtype=np.int32)
    return table


def _symmetric_generators(n: int) -> list[Permutation]:
    if n == 1:
        return [Permutation.identity(1)]
    gens = [Permutation.from_cycles([[0, 1]], n)]
    if n > 2:
        gens.append(Permutation.from_cycles([list(range(n))], n))
    return gens


def _alternating_generators(n: int) -> list[Permutation]:
    if n < 3:
        return [Permutation.identity(max(n, 1))]
    return [Permutation.from_cycles([[i, i + 1, i + 2]], n) for i in range(n - 2)]


def _semidirect_generators(p: int, q: int) -> list[Permutation]:
    # C_p acts on p points by x -> x+1; the complement acts by x -> g*x where
    # g is the least element of multiplicative order q mod p.
    g = next(h for h in range(2, p) if _mult_order(h, p) == q)
    shift = Permutation(tuple((x + 1) % p for x in range(p)))
    mult = Permutation(tuple((g * x) % p for x in range(p)))
    return [shift, mult]


def _mult_order(h: int, p: int) -> int:
    k, x = 1, h % p
    while x != 1:
        x = (x * h) % p
        k += 1
        if k > p:
            return 0
    return k


def _perm_closure_table(gens: list[Permutation], degree: int, cap: int):
    """Breadth-first closure over right multiplication by generators.

    New elements are appended level by level sorted by image tuple, so the
    indexing depends only on the generating set.  Returns the table and the
    indices of the generators.
    """
    if degree < 1:
        raise SpecError("degenerate spec: degree 0")
    ident = Permutation.identity(degree)
    seen = {ident.images: 0}
    elems = [ident.images]
    level = [ident]
    while level:
        nxt = []
        for x in level:
            for g in gens:
                y = x * g
                if y.images not in seen:
                    seen[y.images] = -1
                    nxt.append(y)
        nxt.sort(key=lambda perm: perm.images)
        for y in nxt:
            seen[y.images] = len(elems)
            elems.append(y.images)
            if len(elems) > cap:
                raise CapExceeded(cap, len(elems))
        level = nxt

    n = len(elems)
    arr = np.array(elems, dtype=np.int64)
    # encode image tuples into single keys for vectorized lookup
    base = degree + 1
    powers = base ** np.arange(degree, dtype=np.int64)
    keys = arr @ powers
    sorting = np.argsort(keys)
    sorted_keys = keys[sorting]
    table = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        comp = arr[i][arr]          # (p_i . p_j)(x) = p_i[p_j[x]]
        ck = comp @ powers
        table[i] = sorting[np.searchsorted(sorted_keys, ck)]
    gen_indices = [seen[g.images] for g in gens]
    return table, gen_indices


# ---------------------------------------------------------------------------
# Quotients
# ---------------------------------------------------------------------------


def mask_to_indices(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def indices_to_mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def _normal_closure_mask(G: GroupTable, seed: tuple[int, ...]) -> int:
    """Smallest normal subgroup containing the seed elements."""
    from .lattice import close_subset  # local import to avoid a cycle

    mask = indices_to_mask(seed) | 1
    while True:
        members = mask_to_indices(mask)
        conj = set()
        for g in range(G.order):
            gm = G.mul[g, members]
            conj.update(int(x) for x in G.mul[gm, G.inv[g]])
        new = close_subset(G, indices_to_mask(conj))
        if new == mask:
            return mask
        mask = new


def is_normal(G: GroupTable, mask: int) -> bool:
    members = np.array(mask_to_indices(mask))
    for g in range(G.order):
        gm = G.mul[g, members]
        conj = G.mul[gm, G.inv[g]]
        if indices_to_mask(conj) != mask:
            return False
    return True


def quotient_group(G: GroupTable, normal_mask: int) -> tuple[GroupTable, np.ndarray]:
    """Quotient by a normal subgroup given as an element bitmask.

    Returns the quotient table and the projection array mapping element
    index to coset index.  The projection is checked to be a homomorphism
    on all pairs for groups of order <= 64.
    """
    if not (normal_mask & 1):
        raise SpecError("normal subgroup must contain the identity")
    if not is_normal(G, normal_mask):
        raise SpecError("subgroup is not normal; cannot form quotient")
    n = G.order
    members = np.array(mask_to_indices(normal_mask))
    coset_rep = np.full(n, -1, dtype=np.int64)
    reps = []
    for g in range(n):
        if coset_rep[g] == -1:
            coset = G.mul[g, members]
            coset_rep[coset] = g
            reps.append(g)
    reps = np.array(sorted(reps))
    rep_to_idx = {int(r): i for i, r in enumerate(reps)}
    projection = np.array([rep_to_idx[int(coset_rep[g])] for g in range(n)], dtype=np.int32)
    q = len(reps)
    mul_q = np.empty((q, q), dtype=np.int32)
    for a in range(q):
        mul_q[a] = projection[G.mul[reps[a], reps]]
    if n <= 64:
        i = np.repeat(np.arange(n), n)
        j = np.tile(np.arange(n), n)
        if not np.array_equal(projection[G.mul[i, j]], mul_q[projection[i], projection[j]]):
            raise SpecError("projection is not a homomorphism")
    label = f"{G.label}/N{len(members)}"
    quot = _finalize(mul_q, label, None, range(q))
    return quot, projection
