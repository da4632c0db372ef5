"""Recognition of finite groups with no zero divisors, and the test corpus.

A finite group without zero divisors (for the trivial base, equivalently a
strongly indecomposable group: every subgroup is directly indecomposable) is
cyclic of prime-power order, generalized quaternion, or a faithful metacyclic
extension of a prime-power cyclic group by a coprime prime-power cyclic group.
``marin_class`` recognizes the shape structurally and cross-checks against the
exhaustive zero-divisor scan; any disagreement raises, since it would mean an
implementation bug or a counterexample to the classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ClassifierInconsistency, OrderCapExceeded
from .ggroups import GGroup, ZeroDivisorWitness, find_zero_divisor_pair
from .groups import (
    ISO_CAP,
    FiniteGroup,
    alternating,
    are_isomorphic,
    cyclic,
    dihedral,
    direct_product,
    generalized_quaternion,
    metacyclic,
    multiplicative_order,
    symmetric,
)

CYCLIC_PRIME_POWER = "cyclic-prime-power"
GENERALIZED_QUATERNION = "generalized-quaternion"
METACYCLIC = "metacyclic"
NOT_STRONGLY_INDECOMPOSABLE = "not-strongly-indecomposable"


@dataclass(frozen=True)
class MarinClass:
    """Classification tag with its shape parameters.

    ``cyclic-prime-power`` carries (p, n) with order p^n; the trivial group is
    recorded as (1, 0).  ``generalized-quaternion`` carries n with order 2^n.
    ``metacyclic`` carries (p, a, q, b) for order p^a * q^b with the q^b part
    acting faithfully.  ``not-strongly-indecomposable`` carries a zero-divisor
    witness instead.
    """

    kind: str
    p: Optional[int] = None
    n: Optional[int] = None
    a: Optional[int] = None
    q: Optional[int] = None
    b: Optional[int] = None
    witness: Optional[ZeroDivisorWitness] = None

    def describe(self) -> str:
        if self.kind == CYCLIC_PRIME_POWER:
            return f"{self.kind}(p={self.p},n={self.n})"
        if self.kind == GENERALIZED_QUATERNION:
            return f"{self.kind}(n={self.n})"
        if self.kind == METACYCLIC:
            return f"{self.kind}(p={self.p},a={self.a},q={self.q},b={self.b})"
        return self.kind

    def to_json(self) -> dict:
        out: dict = {"class": self.describe()}
        out["witness"] = self.witness.to_json() if self.witness else None
        return out


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def _is_cyclic(G: FiniteGroup) -> bool:
    return G.order in G.element_orders if G.order > 1 else True


def _structural_class(G: FiniteGroup, cap: int) -> Optional[MarinClass]:
    n = G.order
    if n == 1:
        return MarinClass(CYCLIC_PRIME_POWER, p=1, n=0)
    fact = factorize(n)
    if len(fact) == 1 and _is_cyclic(G):
        p, e = fact[0]
        return MarinClass(CYCLIC_PRIME_POWER, p=p, n=e)
    if len(fact) == 1 and fact[0][0] == 2 and fact[0][1] >= 3:
        e = fact[0][1]
        if are_isomorphic(G, generalized_quaternion(e), cap=cap) is not None:
            return MarinClass(GENERALIZED_QUATERNION, n=e)
    if len(fact) == 2:
        for (p, a), (q, b) in (fact, fact[::-1]):
            if p % 2 == 0:
                continue
            pa, qb = p ** a, q ** b
            if (p - 1) % qb:
                continue
            for k in range(2, pa):
                if multiplicative_order(k, pa) == qb:
                    if are_isomorphic(G, metacyclic(p, a, q, b, k), cap=cap) is not None:
                        return MarinClass(METACYCLIC, p=p, a=a, q=q, b=b)
    return None


def marin_class(G: FiniteGroup, *, cap: int = ISO_CAP) -> MarinClass:
    """Classify, cross-validating shape recognition against the divisor scan."""
    if G.order > cap:
        raise OrderCapExceeded("classification", G.order, cap)
    structural = _structural_class(G, cap)
    witness = find_zero_divisor_pair(GGroup.with_trivial_base(G), cap=cap)
    if structural is not None and witness is not None:
        raise ClassifierInconsistency(
            f"{G.name}: recognized as {structural.describe()} but has zero divisors "
            f"({witness.x},{witness.y})")
    if structural is None and witness is None:
        raise ClassifierInconsistency(
            f"{G.name}: no zero divisors but matches no recognized shape")
    if structural is not None:
        return structural
    return MarinClass(NOT_STRONGLY_INDECOMPOSABLE, witness=witness)


def prime_power_orders(G: FiniteGroup) -> tuple[bool, Optional[int]]:
    """True when every element order is 1 or a prime power; else the first violator."""
    for x in range(G.order):
        o = G.element_orders[x]
        if o > 1 and len(factorize(o)) > 1:
            return False, x
    return True, None


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    group: FiniteGroup
    tags: tuple[str, ...]


def _invariant_factor_chains(n: int) -> list[list[int]]:
    """Chains d1 | d2 | ... | dk with product n, d1 >= 2, k >= 2, lex ordered."""
    out: list[list[int]] = []

    def rec(remaining: int, last: int, chain: list[int]):
        if remaining == 1:
            if len(chain) >= 2:
                out.append(chain[:])
            return
        for d in range(max(2, last), remaining + 1):
            if remaining % d == 0 and d % last == 0:
                chain.append(d)
                rec(remaining // d, d, chain)
                chain.pop()

    rec(n, 1, [])
    return sorted(out)


def corpus(max_order: int = 64) -> list[CorpusEntry]:
    """Deterministic curated group list; not exhaustive over isomorphism types.

    Contains every cyclic group, every abelian group as an invariant-factor
    product, dihedral groups from the triangle up, generalized quaternion
    groups, symmetric groups from degree 3 and alternating from degree 4,
    faithful metacyclic extensions with acting part of order at least 3 (the
    order-2 ones duplicate odd dihedrals), and products of each nonabelian
    entry with a small cyclic group.
    """
    entries: list[CorpusEntry] = []
    for n in range(1, max_order + 1):
        entries.append(CorpusEntry(f"Z/{n}", cyclic(n), ("cyclic", "abelian")))
    for n in range(4, max_order + 1):
        for chain in _invariant_factor_chains(n):
            g = cyclic(chain[0], name=f"Z/{chain[0]}")
            for d in chain[1:]:
                g = direct_product(g, cyclic(d))
            name = "x".join(f"Z/{d}" for d in chain)
            entries.append(CorpusEntry(name, FiniteGroup(g.table, name=name, validate=False),
                                       ("abelian",)))
    nonabelian: list[CorpusEntry] = []
    for n in range(3, max_order // 2 + 1):
        nonabelian.append(CorpusEntry(f"D{n}", dihedral(n), ("dihedral",)))
    e = 3
    while 2 ** e <= max_order:
        nonabelian.append(CorpusEntry(f"Q{2 ** e}", generalized_quaternion(e), ("quaternion",)))
        e += 1
    import math

    k = 3
    while math.factorial(k) <= max_order:
        nonabelian.append(CorpusEntry(f"S{k}", symmetric(k), ("symmetric",)))
        k += 1
    k = 4
    while math.factorial(k) // 2 <= max_order:
        nonabelian.append(CorpusEntry(f"A{k}", alternating(k), ("alternating",)))
        k += 1
    meta: list[tuple[int, int, int, int, int, int]] = []
    for p in range(3, max_order + 1, 2):
        pf = factorize(p)
        if len(pf) != 1 or pf[0][1] != 1:
            continue
        a = 1
        while p ** a * 3 <= max_order:
            pa = p ** a
            for qb in range(3, max_order // pa + 1):
                qfact = factorize(qb)
                if len(qfact) != 1:
                    continue
                q, b = qfact[0]
                if q == p or (p - 1) % qb:
                    continue
                for k2 in range(2, pa):
                    if multiplicative_order(k2, pa) == qb:
                        meta.append((pa * qb, p, a, q, b, k2))
                        break
            a += 1
    for order, p, a, q, b, k2 in sorted(meta):
        nonabelian.append(CorpusEntry(f"M({p},{a},{q},{b})", metacyclic(p, a, q, b, k2),
                                      ("metacyclic",)))
    nonabelian.sort(key=lambda e: (e.group.order, e.name))
    entries.extend(nonabelian)
    for base in nonabelian:
        for m in (2, 3, 4, 5):
            if base.group.order * m <= max_order:
                g = direct_product(base.group, cyclic(m))
                entries.append(CorpusEntry(f"{base.name}xZ/{m}", g, ("product",)))
    return entries
