"""Direct-product decomposition driven by the prime spectrum, plus a brute oracle.

The procedure partitions the punctured spectrum into connected components of
the containment graph, intersects each component into a complement H_i, takes
the factors G_i as the meets of the other complements, and then verifies every
claimed property by direct computation before returning a certificate.  A
verification failure is surfaced as ``ReconstructionFailed`` with the full
transcript, never silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Optional

from .errors import OrderCapExceeded, RadicalNotTrivial, ReconstructionFailed
from .ggroups import GGroup, is_domain
from .groups import (
    NORMAL_ENUM_CAP,
    FiniteGroup,
    GroupHomomorphism,
    Subgroup,
    are_isomorphic,
    direct_product,
    mask_elements,
    trivial_group,
)
from .spectra import Notion, Spectrum, spectrum

ORACLE_CAP = 64


@dataclass
class DecompositionCertificate:
    """Verified internal direct factorization with prime complements."""

    owner: GGroup
    notion: Notion
    factors: list[Subgroup]
    complements: list[Subgroup]
    components: list[list[int]]      # indices into the punctured spectrum
    witness: Optional[GroupHomomorphism]  # product of factors -> carrier
    transcript: list[str] = field(default_factory=list)
    oracle_match: object = "skipped"  # True | False | "skipped"

    @property
    def n(self) -> int:
        return len(self.factors)

    def factor_orders(self) -> list[int]:
        return [f.order for f in self.factors]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "factors": [list(f.elements) for f in self.factors],
            "complements": [list(h.elements) for h in self.complements],
            "components": [list(c) for c in self.components],
            "verified": True,
            "oracle_match": self.oracle_match,
        }


def _components(star: tuple[Subgroup, ...]) -> list[list[int]]:
    """Connected components of the comparability graph, as index lists."""
    k = len(star)
    parent = list(range(k))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            a, b = star[i].mask, star[j].mask
            if a & ~b == 0 or b & ~a == 0:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    comps: dict[int, list[int]] = {}
    for i in range(k):
        comps.setdefault(find(i), []).append(i)
    out = sorted(comps.values(), key=lambda c: star[min(c, key=lambda i: star[i].key())].key())
    return [sorted(c) for c in out]


def _product_of(groups: list[FiniteGroup]) -> FiniteGroup:
    if not groups:
        return trivial_group()
    return reduce(lambda a, b: direct_product(a, b), groups)


def decompose(X: GGroup, notion: Notion = Notion.INTERSECTION, *,
              cap: int = NORMAL_ENUM_CAP) -> DecompositionCertificate:
    """Factor the carrier through its punctured spectrum; verify everything.

    Preconditions: the radical (intersection of all primes) is trivial, else
    ``RadicalNotTrivial``.  Any certificate invariant that fails to check out
    raises ``ReconstructionFailed`` carrying the transcript.
    """
    H = X.carrier
    spec = spectrum(X, notion, cap=cap)
    full = (1 << H.order) - 1
    rad = full
    for p in spec.primes:
        rad &= p.mask
    if rad != 1:
        raise RadicalNotTrivial(H._subgroup_from_mask(rad))

    star = spec.star
    comps = _components(star)
    transcript: list[str] = [f"spectrum has {len(spec.primes)} primes, "
                             f"{len(star)} punctured, {len(comps)} components"]

    def fail(step: str):
        transcript.append(f"FAILED: {step}")
        raise ReconstructionFailed(step, transcript)

    complements = []
    for c in comps:
        m = full
        for i in c:
            m &= star[i].mask
        complements.append(H._subgroup_from_mask(m))
    factors = []
    for i in range(len(comps)):
        m = full
        for j in range(len(comps)):
            if j != i:
                m &= complements[j].mask
        factors.append(H._subgroup_from_mask(m))

    # 1. complements are prime.
    from .spectra import is_prime

    for h in complements:
        if not is_prime(X, h, notion, cap=cap):
            fail(f"complement {h.elements} is not prime")
    transcript.append("complements are prime")

    # 2. each component is exactly the punctured closed set of its complement.
    seen: set[int] = set()
    for c, h in zip(comps, complements):
        v = {i for i, p in enumerate(star) if h.mask & ~p.mask == 0}
        if v != set(c):
            fail(f"closed set of {h.elements} is not its component")
        if v & seen:
            fail("closed sets of complements are not disjoint")
        seen |= v
    if seen != set(range(len(star))):
        fail("closed sets of complements do not cover the punctured spectrum")
    transcript.append("components match punctured closed sets, disjointly")

    # 3. intersection of all complements is trivial.
    m = full
    for h in complements:
        m &= h.mask
    if m != 1:
        fail("complements do not intersect trivially")
    transcript.append("complements intersect trivially")

    # 4. factors pairwise: trivial intersection and elementwise commuting.
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if factors[i].mask & factors[j].mask != 1:
                fail(f"factors {i} and {j} intersect nontrivially")
            if factors[j].mask & ~factors[i].centralizer_mask:
                fail(f"factors {i} and {j} do not commute elementwise")
    transcript.append("factors pairwise disjoint and commuting")

    # 5. multiplication from the direct product of the factors is bijective.
    factor_groups = [f.as_group()[0] for f in factors]
    prod = _product_of(factor_groups)
    if prod.order != H.order:
        fail(f"factor orders multiply to {prod.order}, not {H.order}")
    image = []
    for idx in range(prod.order):
        rem = idx
        parts = []
        for g in reversed(factor_groups):
            rem, r = divmod(rem, g.order)
            parts.append(r)
        parts.reverse()
        acc = 0
        for f, local in zip(factors, parts):
            acc = H.table[acc][f.elements[local]]
        image.append(acc)
    if len(set(image)) != H.order:
        fail("multiplication map is not bijective")
    try:
        witness = GroupHomomorphism(prod, H, tuple(image))
    except ValueError:
        fail("multiplication map is not a homomorphism")
    transcript.append("product of factors maps bijectively onto the group")

    # 6. the join of the other factors is the complement.
    for i, h in enumerate(complements):
        m = 1
        for j, f in enumerate(factors):
            if j != i:
                m |= f.mask
        if H.closure_mask(m) != h.mask:
            fail(f"join of factors other than {i} is not complement {i}")
    transcript.append("complements are joins of the other factors")

    # 7. each quotient by a complement is a domain isomorphic to its factor.
    for f, h in zip(factors, complements):
        quo, _ = X.quotient(h)
        if not is_domain(quo):
            fail(f"quotient by complement {h.elements} is not a domain")
        fg, _ = f.as_group()
        if are_isomorphic(fg, quo.carrier) is None:
            fail(f"factor {f.elements} is not isomorphic to the quotient")
    transcript.append("factors are domains isomorphic to their quotients")

    return DecompositionCertificate(X, notion, factors, complements,
                                    comps, witness if factors else None, transcript)


def _indecomposable_flags(subs: list[Subgroup]) -> list[bool]:
    flags = []
    for s in subs:
        k = s.order
        split = False
        if k > 1:
            inner = [t for t in subs if 1 < t.order < k and s.contains(t)]
            for i, a in enumerate(inner):
                if split:
                    break
                for b in inner[i + 1:]:
                    if (a.order * b.order == k and a.mask & b.mask == 1
                            and b.mask & ~a.centralizer_mask == 0):
                        split = True
                        break
        flags.append(not split)
    return flags


def brute_force_decompositions(G: FiniteGroup, *, cap: int = ORACLE_CAP
                               ) -> list[list[Subgroup]]:
    """Every unordered internal direct factorization into indecomposables.

    Exhausts tuples of nontrivial directly indecomposable subgroups that
    pairwise intersect trivially and commute elementwise, whose orders
    multiply to the group order and whose join is the whole group.  The
    trivial group yields the single empty factorization.
    """
    if G.order > cap:
        raise OrderCapExceeded("decomposition oracle", G.order, cap)
    if G.order == 1:
        return [[]]
    subs = G.all_subgroups(cap=cap)
    flags = _indecomposable_flags(subs)
    candidates = [i for i, s in enumerate(subs) if s.order > 1 and flags[i]]
    results: list[list[Subgroup]] = []
    full = (1 << G.order) - 1

    def rec(start: int, chosen: list[int], span: int, orders: int):
        if orders == G.order:
            if span == full:
                results.append([subs[i] for i in chosen])
            return
        for pos in range(start, len(candidates)):
            i = candidates[pos]
            s = subs[i]
            if G.order % (orders * s.order):
                continue
            ok = True
            for j in chosen:
                t = subs[j]
                if s.mask & t.mask != 1 or s.mask & ~t.centralizer_mask:
                    ok = False
                    break
            if not ok:
                continue
            new_span = G.closure_mask(span | s.mask)
            if new_span.bit_count() != orders * s.order:
                continue
            chosen.append(i)
            rec(pos + 1, chosen, new_span, orders * s.order)
            chosen.pop()

    rec(0, [], 1, 1)
    return results


def oracle_factor_types_match(cert: DecompositionCertificate,
                              factorizations: list[list[Subgroup]]) -> bool:
    """Whether the certificate's factor multiset matches the oracle's.

    All oracle factorizations must share one multiset of isomorphism types;
    the certificate's factor types must equal it.
    """
    if not factorizations:
        return False
    H = cert.owner.carrier

    def type_key(groups: list[FiniteGroup]) -> list:
        reps: list[FiniteGroup] = []
        counts: list[int] = []
        for g in groups:
            for i, r in enumerate(reps):
                if are_isomorphic(g, r) is not None:
                    counts[i] += 1
                    break
            else:
                reps.append(g)
                counts.append(1)
        key = sorted((r.order, sorted(r.element_orders), c)
                     for r, c in zip(reps, counts))
        return key

    base = None
    for fac in factorizations:
        key = type_key([s.as_group()[0] for s in fac])
        if base is None:
            base = key
        elif key != base:
            return False
    cert_key = type_key([f.as_group()[0] for f in cert.factors])
    if cert_key != base:
        return False
    # Orders alone can collide for non-isomorphic groups; confirm with witnesses
    # between the certificate factors and one oracle factorization.
    sample = list(factorizations[0])
    remaining = sample[:]
    for f in cert.factors:
        fg, _ = f.as_group()
        hit = None
        for i, s in enumerate(remaining):
            if are_isomorphic(fg, s.as_group()[0]) is not None:
                hit = i
                break
        if hit is None:
            return False
        remaining.pop(hit)
    return not remaining
