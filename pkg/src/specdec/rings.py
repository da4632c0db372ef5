"""Finite rings, two-sided ideals, and the intersection-style primality test.

Rings are explicit addition/multiplication tables over indices 0..n-1 with
zero pinned at index 0.  A unit is optional: the primality and topology checks
only use the two-sided ideal structure, which closure handles either way.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd, lcm
from typing import Optional, Sequence

import numpy as np

from .errors import InvalidRing, OrderCapExceeded
from .groups import FiniteGroup, mask_elements, mask_of
from .spectra import AxiomReport

MODULAR_IDEAL_CAP = 64
TABLE_IDEAL_CAP = 24


class FiniteRing:
    """A finite ring given by addition and multiplication tables."""

    def __init__(self, add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]],
                 name: str = "R", *, kind: str = "tables", validate: bool = True):
        self.order = len(add)
        self.add = tuple(tuple(int(x) for x in row) for row in add)
        self.mul = tuple(tuple(int(x) for x in row) for row in mul)
        self.name = name
        self.kind = kind
        if validate:
            self._validate()
        grp = FiniteGroup(self.add, name=f"{name}+", validate=False)
        self.neg = grp.inverse
        self.one = self._find_one()

    @classmethod
    def modular(cls, m: int) -> "FiniteRing":
        if m < 1:
            raise InvalidRing("modulus must be positive")
        add = [[(a + b) % m for b in range(m)] for a in range(m)]
        mul = [[(a * b) % m for b in range(m)] for a in range(m)]
        return cls(add, mul, name=f"Z/{m}", kind="modular", validate=False)

    def _validate(self) -> None:
        n = self.order
        try:
            grp = FiniteGroup(self.add, name="additive", validate=True)
        except Exception as exc:
            raise InvalidRing(f"addition table is not a group: {exc}") from exc
        A = np.array(self.add, dtype=np.int64)
        if not (A == A.T).all():
            raise InvalidRing("addition is not commutative")
        M = np.array(self.mul, dtype=np.int64)
        if M.shape != (n, n) or M.min() < 0 or M.max() >= n:
            raise InvalidRing("multiplication entries out of range")
        for a in range(n):
            if not np.array_equal(M[M[a]], np.take(M[a], M)):
                raise InvalidRing("multiplication is not associative")
            # a*(b+c) == a*b + a*c and (b+c)*a == b*a + c*a
            if not np.array_equal(np.take(M[a], A), A[np.ix_(M[a], M[a])]):
                raise InvalidRing("left distributivity fails")
            if not np.array_equal(np.take(M[:, a], A), A[np.ix_(M[:, a], M[:, a])]):
                raise InvalidRing("right distributivity fails")

    def _find_one(self) -> Optional[int]:
        want = tuple(range(self.order))
        for e in range(self.order):
            if self.mul[e] == want and tuple(r[e] for r in self.mul) == want:
                return e
        return None

    def __repr__(self) -> str:
        return f"FiniteRing({self.name!r}, order={self.order})"

    @cached_property
    def np_add(self) -> np.ndarray:
        return np.array(self.add, dtype=np.int32)

    @cached_property
    def np_mul(self) -> np.ndarray:
        return np.array(self.mul, dtype=np.int32)

    def ideal_closure_mask(self, mask: int) -> int:
        """Smallest two-sided ideal containing the masked elements.

        Closes under addition (which, being finite, also yields negation) and
        under multiplication by arbitrary ring elements on both sides.
        """
        A, M = self.np_add, self.np_mul
        everything = np.arange(self.order, dtype=np.int32)
        cur = np.unique(np.append(np.array(mask_elements(mask), dtype=np.int32), 0))
        while True:
            sums = A[np.ix_(cur, cur)].ravel()
            left = M[np.ix_(everything, cur)].ravel()
            right = M[np.ix_(cur, everything)].ravel()
            new = np.unique(np.concatenate([cur, sums, left, right]))
            if new.size == cur.size:
                return mask_of(int(e) for e in cur)
            cur = new

    @cached_property
    def principal_ideal_masks(self) -> tuple[int, ...]:
        return tuple(self.ideal_closure_mask(1 << a) for a in range(self.order))

    def ideal(self, elements) -> "TwoSidedIdeal":
        mask = mask_of(elements) | 1
        if self.ideal_closure_mask(mask) != mask:
            raise ValueError("element set is not a two-sided ideal")
        return TwoSidedIdeal(self, mask_elements(mask))

    def _ideal_from_mask(self, mask: int) -> "TwoSidedIdeal":
        return TwoSidedIdeal(self, mask_elements(mask))


@dataclass(frozen=True)
class TwoSidedIdeal:
    ring: FiniteRing
    elements: tuple[int, ...]

    @cached_property
    def mask(self) -> int:
        return mask_of(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.elements), self.elements)


def principal_two_sided_ideal(R: FiniteRing, a: int) -> TwoSidedIdeal:
    """Smallest two-sided ideal containing the element a."""
    return R._ideal_from_mask(R.principal_ideal_masks[a])


def _ideal_cap(R: FiniteRing, cap: Optional[int]) -> int:
    if cap is not None:
        return cap
    return MODULAR_IDEAL_CAP if R.kind == "modular" else TABLE_IDEAL_CAP


def two_sided_ideals(R: FiniteRing, *, cap: Optional[int] = None) -> list[TwoSidedIdeal]:
    """Every two-sided ideal, via join closure of the principal ideals."""
    limit = _ideal_cap(R, cap)
    if R.order > limit:
        raise OrderCapExceeded("ideal enumeration", R.order, limit)
    A = R.np_add
    found = set(R.principal_ideal_masks)
    found.add(1)
    queue = list(found)
    while queue:
        m = queue.pop()
        elems = np.array(mask_elements(m), dtype=np.int32)
        for p in R.principal_ideal_masks:
            if p & m == p:
                continue
            pe = np.array(mask_elements(p), dtype=np.int32)
            join = mask_of(int(x) for x in np.unique(A[np.ix_(elems, pe)]))
            if join not in found:
                found.add(join)
                queue.append(join)
    ideals = [R._ideal_from_mask(m) for m in found]
    ideals.sort(key=lambda i: i.key())
    return ideals


def is_p_prime(R: FiniteRing, P: TwoSidedIdeal
               ) -> tuple[bool, Optional[tuple[int, int]]]:
    """Intersection-condition primality over all element pairs.

    P is prime when I(a) ∩ I(b) ⊆ P forces a in P or b in P; the first
    violating (a, b) in index order is returned otherwise.
    """
    pm = P.mask
    principals = R.principal_ideal_masks
    for a in range(R.order):
        if pm >> a & 1:
            continue
        ia = principals[a]
        for b in range(R.order):
            if pm >> b & 1:
                continue
            if principals[b] & ia & ~pm == 0:
                return False, (a, b)
    return True, None


def p_prime_ideals(R: FiniteRing, *, cap: Optional[int] = None) -> list[TwoSidedIdeal]:
    return [P for P in two_sided_ideals(R, cap=cap) if is_p_prime(R, P)[0]]


def verify_ring_topology(R: FiniteRing, *, cap: Optional[int] = None) -> list[AxiomReport]:
    """Closed-set identities over the prime ideals, pairs and families of <= 3."""
    ideals = two_sided_ideals(R, cap=cap)
    masks = [i.mask for i in ideals]
    index = {m: k for k, m in enumerate(masks)}
    primes = [i for i in ideals if is_p_prime(R, i)[0]]
    vmask = []
    for m in masks:
        v = 0
        for j, p in enumerate(primes):
            if m & ~p.mask == 0:
                v |= 1 << j
        vmask.append(v)
    A = R.np_add
    m_count = len(masks)

    def join_index(i: int, j: int) -> int:
        a = np.array(mask_elements(masks[i]), dtype=np.int32)
        b = np.array(mask_elements(masks[j]), dtype=np.int32)
        return index[mask_of(int(x) for x in np.unique(A[np.ix_(a, b)]))]

    reports = []
    rep = AxiomReport("closed-union", True)
    for i in range(m_count):
        for j in range(i, m_count):
            meet = index[masks[i] & masks[j]]
            if vmask[meet] != vmask[i] | vmask[j]:
                diff = vmask[meet] ^ (vmask[i] | vmask[j])
                p = (diff & -diff).bit_length() - 1
                rep = AxiomReport("closed-union", False, {
                    "i": list(ideals[i].elements), "j": list(ideals[j].elements),
                    "prime": list(primes[p].elements)})
                break
        if not rep.passed:
            break
    reports.append(rep)

    join2 = [[join_index(i, j) for j in range(m_count)] for i in range(m_count)]
    rep = AxiomReport("closed-family-intersection", True)
    for i in range(m_count):
        for j in range(i, m_count):
            jij = join2[i][j]
            vij = vmask[i] & vmask[j]
            for k in range(j, m_count):
                if vmask[join2[jij][k]] != vij & vmask[k]:
                    diff = vmask[join2[jij][k]] ^ (vij & vmask[k])
                    p = (diff & -diff).bit_length() - 1
                    rep = AxiomReport("closed-family-intersection", False, {
                        "family": [list(ideals[t].elements) for t in (i, j, k)],
                        "prime": list(primes[p].elements)})
                    break
            if not rep.passed:
                break
        if not rep.passed:
            break
    reports.append(rep)
    return reports


def z_pprime_window_check(n: int, bound: int
                          ) -> tuple[bool, Optional[tuple[int, int]]]:
    """Bounded oracle for primality of the integer ideal (n).

    Over nonzero a, b up to ``bound`` in absolute value, the principal ideals
    meet in (lcm(a, b)); a violation is a pair with n | lcm(a, b) but n
    dividing neither.  Signs never matter, so the scan runs over positive
    pairs in lexicographic order.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if bound < n:
        raise ValueError("bound must be at least n")
    for a in range(1, bound + 1):
        if a % n == 0:
            continue
        for b in range(1, bound + 1):
            if b % n == 0:
                continue
            if lcm(a, b) % n == 0:
                return False, (a, b)
    return True, None
