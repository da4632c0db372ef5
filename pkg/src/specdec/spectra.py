"""Prime normal subgroups, the closed-set topology they induce, and verifiers.

Two inequivalent primality notions are first-class:

* ``Notion.QUOTIENT_DOMAIN`` - a normal subgroup is prime when the quotient
  carrier (with its induced structural morphism) has no zero divisors.
* ``Notion.INTERSECTION`` - a normal subgroup P is prime when, for all normal
  I and J, I ∩ J ⊆ P forces I ⊆ P or J ⊆ P.  This is equivalent to the
  elementwise form over normal closures and is the notion under which the
  closed-set identities below are exact.

The diagonal of Z/2 x Z/2 separates the two notions, so callers pick one per
call; the topology and decomposition default to ``INTERSECTION``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from .errors import NotNormal, OrderCapExceeded
from .ggroups import GGroup, find_zero_divisor_pair, is_domain
from .groups import NORMAL_ENUM_CAP, SUBGROUP_ENUM_CAP, FiniteGroup, Subgroup


class Notion(enum.Enum):
    INTERSECTION = "intersection"
    QUOTIENT_DOMAIN = "quotient-domain"

    @staticmethod
    def parse(text: str) -> "Notion":
        for n in Notion:
            if n.value == text:
                return n
        raise ValueError(f"unknown primality notion {text!r}")


class _NormalLattice:
    """Canonically ordered normal subgroups with fast meet/join structure.

    ``sup[i]`` is the bitmask over lattice indices of the subgroups containing
    subgroup i; since the list is sorted by size, the lowest set bit of an
    intersection of sup-masks is the join of the corresponding subgroups.
    """

    def __init__(self, group: FiniteGroup, cap: int):
        self.group = group
        self.subgroups = group.normal_subgroups(cap=cap)
        self.masks = [s.mask for s in self.subgroups]
        self.index = {m: i for i, m in enumerate(self.masks)}
        m = len(self.masks)
        sup = []
        for a in self.masks:
            bits = 0
            for j, b in enumerate(self.masks):
                if a & ~b == 0:
                    bits |= 1 << j
            sup.append(bits)
        self.sup = sup
        self.size = m

    @cached_property
    def meet_table(self) -> np.ndarray:
        """meet_table[i, j] = lattice index of subgroups[i] ∩ subgroups[j]."""
        m = self.size
        out = np.zeros((m, m), dtype=np.int32)
        masks = self.masks
        index = self.index
        for i in range(m):
            a = masks[i]
            row = out[i]
            for j in range(i, m):
                k = index[a & masks[j]]
                row[j] = k
                out[j, i] = k
        return out

    def join_index(self, *indices: int) -> int:
        common = -1
        for i in indices:
            common &= self.sup[i]
        return (common & -common).bit_length() - 1


def _lattice(X: GGroup, cap: int) -> _NormalLattice:
    cache = getattr(X.carrier, "_normal_lattice", None)
    if cache is None:
        cache = _NormalLattice(X.carrier, cap)
        X.carrier._normal_lattice = cache
    return cache


def _ip_prime_flags(lat: _NormalLattice) -> list[bool]:
    """Intersection-notion primality for every lattice member at once."""
    meet = lat.meet_table
    m = lat.size
    flags = []
    eye = ~np.eye(1, dtype=bool)  # noqa: F841  (kept numpy import honest)
    for p in range(m):
        pm = lat.masks[p]
        contained = np.fromiter((mask & ~pm == 0 for mask in lat.masks), bool, m)
        bad = contained[meet] & ~contained[:, None] & ~contained[None, :]
        flags.append(not bool(bad.any()))
    return flags


def is_prime(X: GGroup, sub: Subgroup, notion: Notion, *,
             cap: int = NORMAL_ENUM_CAP) -> bool:
    """Primality of a normal subgroup of the carrier under the chosen notion."""
    if not sub.is_normal:
        raise NotNormal(f"{sub.elements} is not normal")
    if notion is Notion.QUOTIENT_DOMAIN:
        quo, _ = X.quotient(sub)
        return is_domain(quo)
    lat = _lattice(X, cap)
    i = lat.index[sub.mask]
    flags = getattr(lat, "_ip_flags", None)
    if flags is None:
        flags = _ip_prime_flags(lat)
        lat._ip_flags = flags
    return flags[i]


def is_prime_elementwise(X: GGroup, sub: Subgroup) -> bool:
    """Intersection notion stated over normal closures of single elements.

    Independent of the lattice route: for every pair of elements x, y with
    u(x) ∩ u(y) ⊆ P, one of x, y must lie in P.
    """
    H = X.carrier
    pm = sub.mask
    closures = [H.normal_closure([x]).mask for x in range(H.order)]
    for x in range(1, H.order):
        if pm >> x & 1:
            continue
        for y in range(1, H.order):
            if pm >> y & 1:
                continue
            if closures[x] & closures[y] & ~pm == 0:
                return False
    return True


@dataclass(frozen=True)
class Spectrum:
    """All prime normal subgroups of a carrier, canonically ordered."""

    owner: GGroup
    notion: Notion
    primes: tuple[Subgroup, ...]

    @cached_property
    def containment(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(p.mask & ~q.mask == 0 for q in self.primes)
                     for p in self.primes)

    @cached_property
    def full_index(self) -> int:
        full = (1 << self.owner.carrier.order) - 1
        for i, p in enumerate(self.primes):
            if p.mask == full:
                return i
        raise AssertionError("total group missing from spectrum")

    @property
    def star(self) -> tuple[Subgroup, ...]:
        """The spectrum with the total group removed."""
        return tuple(p for i, p in enumerate(self.primes) if i != self.full_index)

    def member_mask(self, sub: Subgroup, starred: bool) -> int:
        m = 0
        for i, p in enumerate(self.primes):
            if starred and i == self.full_index:
                continue
            if sub.mask & ~p.mask == 0:
                m |= 1 << i
        return m


@dataclass(frozen=True)
class ClosedSet:
    """Primes of a spectrum containing a fixed normal subgroup."""

    spectrum: Spectrum
    defining: Subgroup
    members: tuple[int, ...]
    starred: bool

    def prime_subgroups(self) -> tuple[Subgroup, ...]:
        return tuple(self.spectrum.primes[i] for i in self.members)

    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)


def spectrum(X: GGroup, notion: Notion, *, cap: int = NORMAL_ENUM_CAP) -> Spectrum:
    """All normal subgroups passing the chosen primality test."""
    lat = _lattice(X, cap)
    if notion is Notion.INTERSECTION:
        flags = getattr(lat, "_ip_flags", None)
        if flags is None:
            flags = _ip_prime_flags(lat)
            lat._ip_flags = flags
    else:
        flags = [is_domain(X.quotient(s)[0]) for s in lat.subgroups]
    primes = tuple(s for s, f in zip(lat.subgroups, flags) if f)
    return Spectrum(X, notion, primes)


def v_set(spec: Spectrum, sub: Subgroup, starred: bool = False) -> ClosedSet:
    """Closed set of primes containing ``sub``; starred drops the total group."""
    if not sub.is_normal:
        raise NotNormal(f"{sub.elements} is not normal")
    members = []
    for i, p in enumerate(spec.primes):
        if starred and i == spec.full_index:
            continue
        if sub.mask & ~p.mask == 0:
            members.append(i)
    return ClosedSet(spec, sub, tuple(members), starred)


def radical(X: GGroup, notion: Notion, *, cap: int = NORMAL_ENUM_CAP) -> Subgroup:
    """Intersection of every prime of the spectrum."""
    spec = spectrum(X, notion, cap=cap)
    m = (1 << X.carrier.order) - 1
    for p in spec.primes:
        m &= p.mask
    return X.carrier._subgroup_from_mask(m)


def radical_of(X: GGroup, sub: Subgroup, notion: Notion, *,
               cap: int = NORMAL_ENUM_CAP) -> Subgroup:
    """Intersection of the primes containing ``sub``."""
    if not sub.is_normal:
        raise NotNormal(f"{sub.elements} is not normal")
    spec = spectrum(X, notion, cap=cap)
    m = (1 << X.carrier.order) - 1
    for p in spec.primes:
        if sub.mask & ~p.mask == 0:
            m &= p.mask
    return X.carrier._subgroup_from_mask(m)


def is_radical_ideal(X: GGroup, sub: Subgroup, notion: Notion, *,
                     cap: int = NORMAL_ENUM_CAP) -> bool:
    return radical_of(X, sub, notion, cap=cap).mask == sub.mask


def _closed_family(spec: Spectrum, starred: bool, cap: int) -> set[frozenset[int]]:
    lat = _lattice(spec.owner, cap)
    fam = {frozenset()}
    for s in lat.subgroups:
        fam.add(frozenset(v_set(spec, s, starred).members))
    return fam


def is_irreducible(spec: Spectrum, closed: ClosedSet, *,
                   cap: int = NORMAL_ENUM_CAP) -> bool:
    """Nonempty and not a union of two strictly smaller closed sets."""
    target = closed.member_set()
    if not target:
        return False
    fam = [f for f in _closed_family(spec, closed.starred, cap)
           if f < target]
    for i, a in enumerate(fam):
        for b in fam[i + 1:]:
            if a | b == target:
                return False
    return True


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of one verifier check, with a minimal counterexample on failure."""

    tag: str
    passed: bool
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        return {"tag": self.tag, "pass": self.passed, "witness": self.witness}


def _elems(lat: _NormalLattice, i: int) -> list[int]:
    return list(lat.subgroups[i].elements)


def verify_axioms(X: GGroup, notion: Notion, *,
                  cap: int = NORMAL_ENUM_CAP,
                  subgroup_cap: int = SUBGROUP_ENUM_CAP) -> list[AxiomReport]:
    """Run every structural check against the chosen notion.

    Emits, in fixed order: hereditary-domain (injections into a domain),
    trivial-meet integrity on domains, quotient-object stability, the
    closed-set union identity over all pairs of normal subgroups, the
    closed-set intersection identity over families of size up to three,
    irreducible-iff-prime over the radical ideals, and chain stabilization.
    The hereditary check is skipped when the carrier exceeds the subgroup
    enumeration cap.
    """
    H = X.carrier
    lat = _lattice(X, cap)
    spec = spectrum(X, notion, cap=cap)
    vmask = [spec.member_mask(s, starred=False) for s in lat.subgroups]
    reports: list[AxiomReport] = []

    # Injections into a domain land in a domain: check all sub-objects that
    # admit the restricted structural morphism.
    if H.order <= subgroup_cap:
        rep = AxiomReport("injection-hereditary", True)
        if is_domain(X):
            img = X.morphism.image_mask
            for s in H.all_subgroups(cap=subgroup_cap):
                if img & ~s.mask:
                    continue
                sub_g, parent_idx = s.as_group()
                back = {e: i for i, e in enumerate(parent_idx)}
                from .groups import GroupHomomorphism

                morph = GroupHomomorphism(X.base, sub_g,
                                          tuple(back[X.morphism(g)]
                                                for g in range(X.base.order)))
                w = find_zero_divisor_pair(GGroup(X.base, sub_g, morph))
                if w is not None:
                    rep = AxiomReport("injection-hereditary", False,
                                      {"subgroup": list(s.elements),
                                       "x": parent_idx[w.x], "y": parent_idx[w.y]})
                    break
        reports.append(rep)

    # On a domain, normal subgroups meeting trivially cannot both be nontrivial.
    rep = AxiomReport("meet-integrity", True)
    if is_domain(X):
        for i in range(1, lat.size):
            for j in range(i + 1, lat.size):
                if lat.masks[i] & lat.masks[j] == 1:
                    rep = AxiomReport("meet-integrity", False,
                                      {"i": _elems(lat, i), "j": _elems(lat, j)})
                    break
            if not rep.passed:
                break
    reports.append(rep)

    # Every normal subgroup yields a quotient object with an induced morphism.
    rep = AxiomReport("quotient-ideal", True)
    for s in lat.subgroups:
        try:
            X.quotient(s)
        except Exception:
            rep = AxiomReport("quotient-ideal", False, {"ideal": list(s.elements)})
            break
    reports.append(rep)

    # V(I ∩ J) == V(I) ∪ V(J), exact, over all pairs.
    meet = lat.meet_table
    vm = np.array(vmask, dtype=np.int64)
    lhs = vm[meet]
    rhs = vm[:, None] | vm[None, :]
    if np.array_equal(lhs, rhs):
        reports.append(AxiomReport("closed-union", True))
    else:
        i, j = (int(t) for t in np.argwhere(lhs != rhs)[0])
        extra = int(lhs[i, j]) & ~int(rhs[i, j])
        p = (extra & -extra).bit_length() - 1
        reports.append(AxiomReport("closed-union", False, {
            "i": _elems(lat, i), "j": _elems(lat, j),
            "prime": list(spec.primes[p].elements)}))

    # V(<union of family>) == intersection of the V's, families of size <= 3.
    rep = AxiomReport("closed-family-intersection", True)
    m = lat.size
    sup = lat.sup
    vloc = vmask
    for i in range(m):
        si = sup[i]
        vi = vloc[i]
        for j in range(i, m):
            sij = si & sup[j]
            vij = vi & vloc[j]
            for k in range(j, m):
                c = sij & sup[k]
                join = (c & -c).bit_length() - 1
                if vloc[join] != vij & vloc[k]:
                    diff = vloc[join] ^ (vij & vloc[k])
                    p = (diff & -diff).bit_length() - 1
                    rep = AxiomReport("closed-family-intersection", False, {
                        "family": [_elems(lat, i), _elems(lat, j), _elems(lat, k)],
                        "prime": list(spec.primes[p].elements)})
                    break
            if not rep.passed:
                break
        if not rep.passed:
            break
    reports.append(rep)

    # For radical ideals, V(I) irreducible exactly when I is prime.
    rep = AxiomReport("irreducible-iff-prime", True)
    full = (1 << H.order) - 1
    prime_set = {p.mask for p in spec.primes}
    for idx, s in enumerate(lat.subgroups):
        rad = full
        for p in spec.primes:
            if s.mask & ~p.mask == 0:
                rad &= p.mask
        if rad != s.mask:
            continue
        irr = is_irreducible(spec, v_set(spec, s, starred=False), cap=cap)
        prm = s.mask in prime_set
        if irr != prm:
            rep = AxiomReport("irreducible-iff-prime", False, {
                "ideal": list(s.elements), "irreducible": irr,
                "radical_ideal": True, "prime": prm})
            break
    reports.append(rep)

    # Finite closed family: ascending chains stabilize.
    fam = _closed_family(spec, False, cap)
    reports.append(AxiomReport("noetherian", len(fam) < float("inf")))

    return reports


def domain_local_equivalence(X: GGroup, *,
                             subgroup_cap: int = SUBGROUP_ENUM_CAP) -> AxiomReport:
    """No zero divisors if and only if locally indecomposable for the action."""
    from .ggroups import is_locally_g_indecomposable

    w = find_zero_divisor_pair(X)
    loc, split = is_locally_g_indecomposable(X, cap=subgroup_cap)
    if (w is None) == loc:
        return AxiomReport("domain-iff-locally-indecomposable", True)
    witness: dict = {"domain": w is None, "locally_indecomposable": loc}
    if w is not None:
        witness["zero_divisor"] = w.to_json()
    if split is not None:
        witness["split"] = [list(s.elements) for s in split]
    return AxiomReport("domain-iff-locally-indecomposable", False, witness)
