"""Finite groups with exact Cayley-table arithmetic on 0-based element indices.

Every group carries an explicit multiplication table with the identity pinned
at index 0, so canonical orderings and golden reports are label-free.
Subgroups are sorted index tuples mirrored by int bitmasks; the bitmasks and a
numpy view of the table drive the enumeration-heavy routines.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    InvalidActionOrder,
    InvalidPermutation,
    NoIdentityAtZero,
    NoInverse,
    NonAssociative,
    NotLatinSquare,
    NotNormal,
    OrderCapExceeded,
    UnsupportedParameter,
)

ORDER_CAP = 512
NORMAL_ENUM_CAP = 128
SUBGROUP_ENUM_CAP = 32
ISO_CAP = 512


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def mask_elements(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[a][b]`` is the product a*b, element 0 is the identity and
    ``inverse[a]`` the two-sided inverse of a.
    """

    def __init__(self, table: Sequence[Sequence[int]], name: str = "G", *,
                 validate: bool = True, order_cap: int = ORDER_CAP):
        n = len(table)
        if n == 0:
            raise NotLatinSquare("empty table")
        if n > order_cap:
            raise OrderCapExceeded("group construction", n, order_cap)
        self.order = n
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.name = name
        if validate:
            self._validate()
        inv = [0] * n
        for a in range(n):
            row = self.table[a]
            b = row.index(0)
            if self.table[b][a] != 0:
                raise NoInverse(f"element {a} has no two-sided inverse")
            inv[a] = b
        self.inverse = tuple(inv)

    def _validate(self) -> None:
        n = self.order
        T = np.array(self.table, dtype=np.int64)
        if T.shape != (n, n) or T.min() < 0 or T.max() >= n:
            raise NotLatinSquare("entries must be element indices")
        want = np.arange(n)
        if not (np.sort(T, axis=1) == want).all():
            raise NotLatinSquare("some row is not a permutation")
        if not (np.sort(T, axis=0) == want[:, None]).all():
            raise NotLatinSquare("some column is not a permutation")
        if not ((T[0] == want).all() and (T[:, 0] == want).all()):
            raise NoIdentityAtZero("element 0 is not a two-sided identity")
        for a in range(n):
            if not np.array_equal(T[T[a]], np.take(T[a], T)):
                b, c = np.argwhere(T[T[a]] != np.take(T[a], T))[0]
                raise NonAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})")

    def check_axioms(self) -> None:
        """Re-run the exhaustive Latin-square / identity / associativity scan."""
        self._validate()
        for a in range(self.order):
            if self.table[a][self.inverse[a]] != 0:
                raise NoInverse(f"inverse table wrong at {a}")

    # -- elementary operations ------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conjugate(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return self.table[self.table[g][x]][self.inverse[g]]

    def commutator(self, x: int, y: int) -> int:
        """x * y * x^-1 * y^-1."""
        t = self.table
        return t[t[t[x][y]][self.inverse[x]]][self.inverse[y]]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    @cached_property
    def np_table(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int32)

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        out = [1] * self.order
        for x in range(1, self.order):
            y = x
            k = 1
            while y != 0:
                y = self.table[y][x]
                k += 1
            out[x] = k
        return tuple(out)

    @cached_property
    def is_abelian(self) -> bool:
        T = self.np_table
        return bool((T == T.T).all())

    @cached_property
    def commuting_masks(self) -> tuple[int, ...]:
        """Per element a, the bitmask of all b with a*b == b*a."""
        T = self.np_table
        eq = T == T.T
        out = []
        for a in range(self.order):
            m = 0
            for b in np.flatnonzero(eq[a]):
                m |= 1 << int(b)
            out.append(m)
        return tuple(out)

    @cached_property
    def center_mask(self) -> int:
        full = (1 << self.order) - 1
        m = 0
        for a in range(self.order):
            if self.commuting_masks[a] == full:
                m |= 1 << a
        return m

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Classes as sorted tuples, ordered by minimal member."""
        T = self.np_table
        inv = np.array(self.inverse, dtype=np.int32)
        gs = np.arange(self.order, dtype=np.int32)
        seen = [False] * self.order
        classes = []
        for x in range(self.order):
            if seen[x]:
                continue
            cls = np.unique(T[T[gs, x], inv])
            for e in cls:
                seen[int(e)] = True
            classes.append(tuple(int(e) for e in cls))
        return tuple(classes)

    # -- subgroup machinery ---------------------------------------------------

    def closure_mask(self, mask: int) -> int:
        """Bitmask of the subgroup generated by the elements in ``mask``."""
        T = self.np_table
        cur = np.unique(np.append(np.array(mask_elements(mask), dtype=np.int32), 0))
        while True:
            prods = np.unique(T[np.ix_(cur, cur)])
            if prods.size == cur.size:
                return mask_of(int(e) for e in cur)
            cur = prods

    def cyclic_mask(self, x: int) -> int:
        m = 1
        y = x
        while y != 0:
            m |= 1 << y
            y = self.table[y][x]
        return m

    def subgroup(self, elements: Iterable[int]) -> Subgroup:
        """Wrap an element set as a Subgroup, verifying closure."""
        mask = mask_of(elements)
        if self.closure_mask(mask) != (mask | 1):
            raise ValueError("element set is not a subgroup")
        return self._subgroup_from_mask(mask | 1)

    def _subgroup_from_mask(self, mask: int) -> Subgroup:
        return Subgroup(self, mask_elements(mask))

    @property
    def trivial_subgroup(self) -> Subgroup:
        return self._subgroup_from_mask(1)

    @property
    def full_subgroup(self) -> Subgroup:
        return self._subgroup_from_mask((1 << self.order) - 1)

    def normal_closure(self, elements: Iterable[int]) -> Subgroup:
        """Least normal subgroup containing ``elements``."""
        T = self.np_table
        inv = np.array(self.inverse, dtype=np.int32)
        gs = np.arange(self.order, dtype=np.int32)
        m = 1
        for x in elements:
            for c in np.unique(T[T[gs, x], inv]):
                m |= 1 << int(c)
        return self._subgroup_from_mask(self.closure_mask(m))

    def commutator_subgroup(self, left: "Subgroup", right: "Subgroup") -> Subgroup:
        """Subgroup generated by all commutators [x, y], x in left, y in right."""
        m = 1
        for x in left.elements:
            for y in right.elements:
                m |= 1 << self.commutator(x, y)
        return self._subgroup_from_mask(self.closure_mask(m))

    @cached_property
    def derived_subgroup(self) -> Subgroup:
        return self.commutator_subgroup(self.full_subgroup, self.full_subgroup)

    def quotient(self, sub: "Subgroup") -> tuple["FiniteGroup", "GroupHomomorphism"]:
        """Coset group by a normal subgroup, with the canonical projection.

        Cosets are labelled by ascending minimal representative, which puts
        the identity coset at index 0.
        """
        if not sub.is_normal:
            raise NotNormal(f"{sub.elements} is not normal in {self.name}")
        n = self.order
        T = self.np_table
        coset_id = [-1] * n
        reps = []
        elems = np.array(sub.elements, dtype=np.int32)
        for x in range(n):
            if coset_id[x] >= 0:
                continue
            cid = len(reps)
            reps.append(x)
            for y in T[x, elems]:
                coset_id[int(y)] = cid
        k = len(reps)
        qtable = [[coset_id[self.table[reps[i]][reps[j]]] for j in range(k)]
                  for i in range(k)]
        q = FiniteGroup(qtable, name=f"{self.name}/{{{','.join(map(str, sub.elements))}}}",
                        validate=False)
        proj = GroupHomomorphism(self, q, tuple(coset_id))
        return q, proj

    def normal_subgroups(self, cap: int = NORMAL_ENUM_CAP) -> list["Subgroup"]:
        """All normal subgroups, canonically ordered by (size, element tuple).

        Enumerates unions of conjugacy classes closed under products, which
        visits exactly the normal subgroups.
        """
        if self.order > cap:
            raise OrderCapExceeded("normal subgroup enumeration", self.order, cap)
        cached = getattr(self, "_normal_subgroups", None)
        if cached is None:
            class_masks = [mask_of(c) for c in self.conjugacy_classes]
            found = {1}
            queue = [1]
            while queue:
                base = queue.pop()
                for cm in class_masks:
                    if cm & base == cm:
                        continue
                    m = self.closure_mask(base | cm)
                    if m not in found:
                        found.add(m)
                        queue.append(m)
            subs = [self._subgroup_from_mask(m) for m in found]
            subs.sort(key=lambda s: (len(s.elements), s.elements))
            cached = subs
            self._normal_subgroups = cached
        return list(cached)

    def all_subgroups(self, cap: int = SUBGROUP_ENUM_CAP) -> list["Subgroup"]:
        """Every subgroup, canonically ordered; exponential in the worst case."""
        if self.order > cap:
            raise OrderCapExceeded("subgroup enumeration", self.order, cap)
        cached = getattr(self, "_all_subgroups", None)
        if cached is None:
            found = {1}
            queue = [1]
            while queue:
                base = queue.pop()
                for g in range(1, self.order):
                    if base >> g & 1:
                        continue
                    m = self.closure_mask(base | (1 << g))
                    if m not in found:
                        found.add(m)
                        queue.append(m)
            subs = [self._subgroup_from_mask(m) for m in found]
            subs.sort(key=lambda s: (len(s.elements), s.elements))
            cached = subs
            self._all_subgroups = cached
        return list(cached)

    def generating_set(self) -> tuple[int, ...]:
        """Greedy generating set: repeatedly adjoin the least element outside."""
        gens: list[int] = []
        closed = 1
        full = (1 << self.order) - 1
        while closed != full:
            g = ((~closed) & -(~closed)).bit_length() - 1
            gens.append(g)
            closed = self.closure_mask(closed | (1 << g))
        return tuple(gens)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``parent`` as a canonically sorted element-index tuple."""

    parent: FiniteGroup
    elements: tuple[int, ...]

    @cached_property
    def mask(self) -> int:
        return mask_of(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def contains(self, other: "Subgroup") -> bool:
        return other.mask & ~self.mask == 0

    @cached_property
    def is_normal(self) -> bool:
        G = self.parent
        m = self.mask
        for g in range(1, G.order):
            for x in self.elements:
                if not m >> G.conjugate(g, x) & 1:
                    return False
        return True

    @cached_property
    def centralizer_mask(self) -> int:
        """Bitmask of parent elements commuting with every member."""
        m = (1 << self.parent.order) - 1
        for x in self.elements:
            m &= self.parent.commuting_masks[x]
        return m

    def key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.elements), self.elements)

    def intersection(self, other: "Subgroup") -> "Subgroup":
        return self.parent._subgroup_from_mask(self.mask & other.mask)

    def join(self, other: "Subgroup") -> "Subgroup":
        return self.parent._subgroup_from_mask(
            self.parent.closure_mask(self.mask | other.mask))

    def as_group(self) -> tuple[FiniteGroup, tuple[int, ...]]:
        """Relabel as a standalone group; returns (group, parent indices)."""
        idx = {e: i for i, e in enumerate(self.elements)}
        tbl = [[idx[self.parent.table[a][b]] for b in self.elements]
               for a in self.elements]
        g = FiniteGroup(tbl, name=f"{self.parent.name}|{{{','.join(map(str, self.elements))}}}",
                        validate=False)
        return g, self.elements


@dataclass(frozen=True)
class GroupHomomorphism:
    """A verified homomorphism, stored as the per-element image table."""

    domain: FiniteGroup
    codomain: FiniteGroup
    image: tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.domain.order:
            raise ValueError("image table has wrong length")
        if self.image[0] != 0:
            raise ValueError("identity must map to identity")
        T, S, f = self.domain.np_table, self.codomain.np_table, np.array(self.image, dtype=np.int32)
        if not np.array_equal(f[T], S[np.ix_(f, f)]):
            raise ValueError("image table is not multiplicative")

    def __call__(self, x: int) -> int:
        return self.image[x]

    @cached_property
    def image_mask(self) -> int:
        return mask_of(self.image)

    def kernel(self) -> Subgroup:
        return self.domain._subgroup_from_mask(
            mask_of(x for x in range(self.domain.order) if self.image[x] == 0))

    @property
    def is_bijective(self) -> bool:
        return (self.domain.order == self.codomain.order
                and len(set(self.image)) == self.domain.order)

    @property
    def is_injective(self) -> bool:
        return len(set(self.image)) == self.domain.order

    def inverse_hom(self) -> "GroupHomomorphism":
        if not self.is_bijective:
            raise ValueError("not bijective")
        back = [0] * self.codomain.order
        for x, y in enumerate(self.image):
            back[y] = x
        return GroupHomomorphism(self.codomain, self.domain, tuple(back))

    @staticmethod
    def identity(G: FiniteGroup) -> "GroupHomomorphism":
        return GroupHomomorphism(G, G, tuple(range(G.order)))

    @staticmethod
    def trivial(G: FiniteGroup, H: FiniteGroup) -> "GroupHomomorphism":
        return GroupHomomorphism(G, H, (0,) * G.order)


# -- constructors --------------------------------------------------------------


def from_cayley_table(table: Sequence[Sequence[int]], name: str = "G", *,
                      order_cap: int = ORDER_CAP) -> FiniteGroup:
    """Validate a raw multiplication table and build a group from it."""
    return FiniteGroup(table, name=name, validate=True, order_cap=order_cap)


def from_permutation_generators(degree: int, generators: Sequence[Sequence[int]],
                                name: str = "G", *,
                                order_cap: int = ORDER_CAP) -> FiniteGroup:
    """Close permutation generators and relabel to element indices.

    Elements are discovered breadth-first from the identity, multiplying on
    the right by the generators in the given order, so the labelling is
    deterministic.
    """
    if degree <= 0:
        raise InvalidPermutation("degree must be positive")
    pts = tuple(range(degree))
    gens = []
    for g in generators:
        t = tuple(int(x) for x in g)
        if len(t) != degree or sorted(t) != list(pts):
            raise InvalidPermutation(f"{g} is not a permutation of 0..{degree - 1}")
        gens.append(t)
    ident = pts
    elems = [ident]
    index = {ident: 0}
    head = 0
    while head < len(elems):
        e = elems[head]
        head += 1
        for g in gens:
            # right multiplication: (e*g)(i) = e[g[i]]
            p = tuple(e[g[i]] for i in range(degree))
            if p not in index:
                if len(elems) >= order_cap:
                    raise OrderCapExceeded("permutation closure", len(elems) + 1, order_cap)
                index[p] = len(elems)
                elems.append(p)
    n = len(elems)
    table = [[index[tuple(a[b[i]] for i in range(degree))] for b in elems] for a in elems]
    return FiniteGroup(table, name=name, validate=False)


def cyclic(n: int, name: Optional[str] = None) -> FiniteGroup:
    if n < 1:
        raise UnsupportedParameter("cyclic order must be >= 1")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, name=name or f"Z/{n}", validate=False)


def trivial_group() -> FiniteGroup:
    return cyclic(1, name="1")


def _semidirect_cyclic(n: int, m: int, act: int, name: str) -> FiniteGroup:
    """Z/n acted on by Z/m through multiplication by act; element (i, j) -> i*m + j."""
    powers = [1] * m
    for j in range(1, m):
        powers[j] = (powers[j - 1] * act) % n
    size = n * m
    table = [[0] * size for _ in range(size)]
    for i1 in range(n):
        for j1 in range(m):
            row = table[i1 * m + j1]
            k = powers[j1]
            for i2 in range(n):
                for j2 in range(m):
                    row[i2 * m + j2] = ((i1 + k * i2) % n) * m + (j1 + j2) % m
    return FiniteGroup(table, name=name, validate=False)


def dihedral(n: int, name: Optional[str] = None) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n; (i, s) -> 2i + s."""
    if n < 1:
        raise UnsupportedParameter("dihedral parameter must be >= 1")
    return _semidirect_cyclic(n, 2, n - 1, name or f"D{n}")


def generalized_quaternion(n: int, name: Optional[str] = None) -> FiniteGroup:
    """Order 2^n group <x, y : x^(2^(n-1)) = 1, y^2 = x^(2^(n-2)), yxy^-1 = x^-1>.

    Element (i, j) = x^i y^j is labelled i*2 + j; the unique involution is
    x^(2^(n-2)).
    """
    if n < 3:
        raise UnsupportedParameter("generalized quaternion requires n >= 3")
    half = 1 << (n - 1)
    m = half >> 1
    size = half * 2
    table = [[0] * size for _ in range(size)]
    for i1 in range(half):
        for j1 in range(2):
            row = table[i1 * 2 + j1]
            sign = -1 if j1 else 1
            for i2 in range(half):
                for j2 in range(2):
                    i = (i1 + sign * i2 + (m if j1 and j2 else 0)) % half
                    row[i2 * 2 + j2] = i * 2 + (j1 ^ j2)
    return FiniteGroup(table, name=name or f"Q{size}", validate=False)


def symmetric(k: int, name: Optional[str] = None) -> FiniteGroup:
    """Symmetric group on k points; elements are permutations in lex order."""
    if k < 1:
        raise UnsupportedParameter("symmetric degree must be >= 1")
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(a[b[i]] for i in range(k))] for b in perms] for a in perms]
    return FiniteGroup(table, name=name or f"S{k}", validate=False)


def _is_even(p: tuple[int, ...]) -> bool:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2 == 0


def alternating(k: int, name: Optional[str] = None) -> FiniteGroup:
    """Alternating group on k points; even permutations in lex order."""
    if k < 3:
        raise UnsupportedParameter("alternating degree must be >= 3")
    perms = [p for p in itertools.permutations(range(k)) if _is_even(p)]
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(a[b[i]] for i in range(k))] for b in perms] for a in perms]
    return FiniteGroup(table, name=name or f"A{k}", validate=False)


def direct_product(G: FiniteGroup, H: FiniteGroup, name: Optional[str] = None, *,
                   order_cap: int = ORDER_CAP) -> FiniteGroup:
    """Direct product with row-major (a, b) element labelling."""
    n, m = G.order, H.order
    size = n * m
    if size > order_cap:
        raise OrderCapExceeded("direct product", size, order_cap)
    table = [[0] * size for _ in range(size)]
    for a1 in range(n):
        for b1 in range(m):
            row = table[a1 * m + b1]
            ra = G.table[a1]
            rb = H.table[b1]
            for a2 in range(n):
                base = ra[a2] * m
                for b2 in range(m):
                    row[a2 * m + b2] = base + rb[b2]
    return FiniteGroup(table, name=name or f"{G.name}x{H.name}", validate=False)


def multiplicative_order(k: int, modulus: int) -> int:
    """Order of k in (Z/modulus)*, or 0 when gcd(k, modulus) != 1."""
    import math

    if modulus <= 1 or math.gcd(k, modulus) != 1:
        return 0
    o = 1
    v = k % modulus
    while v != 1:
        v = (v * k) % modulus
        o += 1
    return o


def metacyclic(p: int, a: int, q: int, b: int, k: int,
               name: Optional[str] = None) -> FiniteGroup:
    """Z/p^a extended by Z/q^b acting through x -> x^k.

    Requires k to have multiplicative order exactly q^b modulo p^a, so the
    action is faithful of order q^b.
    """
    if p < 2 or q < 2 or a < 1 or b < 1:
        raise UnsupportedParameter("metacyclic parameters must satisfy p,q >= 2 and a,b >= 1")
    pa = p ** a
    qb = q ** b
    if multiplicative_order(k, pa) != qb:
        raise InvalidActionOrder(
            f"{k} has multiplicative order {multiplicative_order(k, pa)} mod {pa}, need {qb}")
    return _semidirect_cyclic(pa, qb, k % pa, name or f"M({p},{a},{q},{b})")


# -- isomorphism testing -------------------------------------------------------


def _class_size_of(G: FiniteGroup) -> tuple[int, ...]:
    sizes = [0] * G.order
    for cls in G.conjugacy_classes:
        for e in cls:
            sizes[e] = len(cls)
    return tuple(sizes)


def are_isomorphic(G: FiniteGroup, H: FiniteGroup, *,
                   cap: int = ISO_CAP) -> Optional[GroupHomomorphism]:
    """A bijective homomorphism G -> H, or None.

    Screens on order, commutativity, element-order multiset, centre size and
    derived-subgroup size, then backtracks over generator images with
    incremental closure of the partial map.
    """
    if G.order != H.order:
        return None
    if G.order > cap:
        raise OrderCapExceeded("isomorphism search", G.order, cap)
    if G.table == H.table:
        return GroupHomomorphism(G, H, tuple(range(G.order)))
    if G.is_abelian != H.is_abelian:
        return None
    if sorted(G.element_orders) != sorted(H.element_orders):
        return None
    if G.center_mask.bit_count() != H.center_mask.bit_count():
        return None
    if G.derived_subgroup.order != H.derived_subgroup.order:
        return None
    g_cls = _class_size_of(G)
    h_cls = _class_size_of(H)
    if sorted(g_cls) != sorted(h_cls):
        return None

    n = G.order
    T, S = G.table, H.table
    gens = G.generating_set()

    def close(pmap: list[int], used: list[bool], known: list[int], new: int) -> bool:
        queue = [new]
        known.append(new)
        while queue:
            x = queue.pop()
            fx = pmap[x]
            for y in list(known):
                fy = pmap[y]
                for a, b, fa, fb in ((x, y, fx, fy), (y, x, fy, fx)):
                    p = T[a][b]
                    q = S[fa][fb]
                    if pmap[p] < 0:
                        if used[q]:
                            return False
                        pmap[p] = q
                        used[q] = True
                        known.append(p)
                        queue.append(p)
                    elif pmap[p] != q:
                        return False
        return True

    def search(idx: int, pmap: list[int], used: list[bool], known: list[int]):
        if idx == len(gens):
            return pmap if len(known) == n else None
        g = gens[idx]
        og = G.element_orders[g]
        cg = g_cls[g]
        for h in range(1, n):
            if used[h] or H.element_orders[h] != og or h_cls[h] != cg:
                continue
            pm = pmap[:]
            us = used[:]
            kn = known[:]
            pm[g] = h
            us[h] = True
            if close(pm, us, kn, g):
                res = search(idx + 1, pm, us, kn)
                if res is not None:
                    return res
        return None

    pmap = [-1] * n
    pmap[0] = 0
    used = [False] * n
    used[0] = True
    res = search(0, pmap, used, [0])
    if res is None:
        return None
    return GroupHomomorphism(G, H, tuple(res))
