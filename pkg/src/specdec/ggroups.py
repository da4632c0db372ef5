"""Groups equipped with a structural morphism from a fixed base group.

The base acts on the carrier by conjugation through the morphism; that action
drives the generated-orbit subgroups, the zero-divisor scan and the stability
filters below.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import OrderCapExceeded
from .groups import (
    SUBGROUP_ENUM_CAP,
    FiniteGroup,
    GroupHomomorphism,
    Subgroup,
    mask_elements,
    mask_of,
    trivial_group,
)

ZERO_DIVISOR_CAP = 512


@dataclass(frozen=True)
class GGroup:
    """A carrier group together with a morphism from the base group."""

    base: FiniteGroup
    carrier: FiniteGroup
    morphism: GroupHomomorphism

    def __post_init__(self):
        if self.morphism.domain is not self.base or self.morphism.codomain is not self.carrier:
            raise ValueError("morphism endpoints do not match base/carrier")

    @staticmethod
    def with_trivial_base(H: FiniteGroup) -> "GGroup":
        base = trivial_group()
        return GGroup(base, H, GroupHomomorphism.trivial(base, H))

    @staticmethod
    def with_identity_base(H: FiniteGroup) -> "GGroup":
        return GGroup(H, H, GroupHomomorphism.identity(H))

    @staticmethod
    def with_trivial_morphism(G: FiniteGroup, H: FiniteGroup) -> "GGroup":
        return GGroup(G, H, GroupHomomorphism.trivial(G, H))

    @cached_property
    def conjugator_set(self) -> tuple[int, ...]:
        """Distinct images of the base in the carrier, ascending."""
        return tuple(sorted(set(self.morphism.image)))

    def quotient(self, sub: Subgroup) -> tuple["GGroup", GroupHomomorphism]:
        """Quotient carrier with the induced structural morphism."""
        q, proj = self.carrier.quotient(sub)
        induced = GroupHomomorphism(self.base, q,
                                    tuple(proj(self.morphism(g)) for g in range(self.base.order)))
        return GGroup(self.base, q, induced), proj

    def describe(self) -> str:
        return f"{self.carrier.name} (base {self.base.name})"


@dataclass(frozen=True)
class ZeroDivisorWitness:
    """Nontrivial x, y whose generated-orbit subgroups intersect trivially and commute."""

    x: int
    y: int
    gx: Subgroup
    gy: Subgroup

    def to_json(self) -> dict:
        return {"x": self.x, "y": self.y,
                "gx": list(self.gx.elements), "gy": list(self.gy.elements)}


def adjoint_orbit_subgroup(X: GGroup, x: int) -> Subgroup:
    """Subgroup of the carrier generated by the base-conjugates of x."""
    return X.carrier._subgroup_from_mask(_orbit_masks(X)[x])


def _orbit_masks(X: GGroup) -> tuple[int, ...]:
    cached = getattr(X.carrier, "_orbit_masks_cache", None)
    key = X.morphism.image
    if cached is None:
        cached = {}
        object.__setattr__(X.carrier, "_orbit_masks_cache", cached)
    out = cached.get(key)
    if out is None:
        H = X.carrier
        out_list = []
        for x in range(H.order):
            seed = mask_of(H.conjugate(u, x) for u in X.conjugator_set)
            out_list.append(H.closure_mask(seed))
        out = tuple(out_list)
        cached[key] = out
    return out


def find_zero_divisor_pair(X: GGroup, *, cap: int = ZERO_DIVISOR_CAP
                           ) -> Optional[ZeroDivisorWitness]:
    """First zero-divisor pair in lexicographic (x, y) order, or None.

    Absence after the exhaustive scan of unordered nontrivial pairs means the
    carrier has no divisors of zero for this base.
    """
    H = X.carrier
    if H.order > cap:
        raise OrderCapExceeded("zero divisor scan", H.order, cap)
    orbits = _orbit_masks(X)
    comm = H.commuting_masks
    cents = [None] * H.order
    for x in range(1, H.order):
        m = (1 << H.order) - 1
        for e in mask_elements(orbits[x]):
            m &= comm[e]
        cents[x] = m
    for x in range(1, H.order):
        gx = orbits[x]
        for y in range(x + 1, H.order):
            gy = orbits[y]
            if gx & gy == 1 and gy & ~cents[x] == 0:
                return ZeroDivisorWitness(x, y,
                                          H._subgroup_from_mask(gx),
                                          H._subgroup_from_mask(gy))
    return None


def is_domain(X: GGroup, *, cap: int = ZERO_DIVISOR_CAP) -> bool:
    return find_zero_divisor_pair(X, cap=cap) is None


def g_stable_subgroups(X: GGroup, *, cap: int = SUBGROUP_ENUM_CAP) -> list[Subgroup]:
    """Subgroups of the carrier normalized by the image of the morphism."""
    H = X.carrier
    if H.order > cap:
        raise OrderCapExceeded("stable subgroup enumeration", H.order, cap)
    subs = H.all_subgroups(cap=cap)
    conj = {u: [H.conjugate(u, x) for x in range(H.order)] for u in X.conjugator_set}
    out = []
    for s in subs:
        ok = True
        for u in X.conjugator_set:
            cu = conj[u]
            if mask_of(cu[e] for e in s.elements) != s.mask:
                ok = False
                break
        if ok:
            out.append(s)
    return out


def is_locally_g_indecomposable(X: GGroup, *, cap: int = SUBGROUP_ENUM_CAP
                                ) -> tuple[bool, Optional[tuple[Subgroup, Subgroup, Subgroup]]]:
    """Whether no nontrivial stable subgroup splits as a product of stable ones.

    On failure returns (False, (whole, part1, part2)) for the first split in
    canonical order; part1 * part2 = whole with trivial intersection and
    elementwise commuting parts.
    """
    stables = g_stable_subgroups(X, cap=cap)
    for whole in stables:
        k = whole.order
        if k <= 1:
            continue
        parts = [s for s in stables if 1 < s.order < k and whole.contains(s)]
        for i, a in enumerate(parts):
            for b in parts[i + 1:]:
                if (a.order * b.order == k and a.mask & b.mask == 1
                        and b.mask & ~a.centralizer_mask == 0):
                    return False, (whole, a, b)
    return True, None
