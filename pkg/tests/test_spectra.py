import pytest

from specdec.classification import corpus
from specdec.errors import NotNormal
from specdec.ggroups import GGroup
from specdec.groups import (
    cyclic,
    dihedral,
    direct_product,
    generalized_quaternion,
    symmetric,
    trivial_group,
)
from specdec.spectra import (
    Notion,
    domain_local_equivalence,
    is_irreducible,
    is_prime,
    is_prime_elementwise,
    is_radical_ideal,
    radical,
    radical_of,
    spectrum,
    v_set,
    verify_axioms,
)

from oracles import naive_intersection_prime

IP = Notion.INTERSECTION
QD = Notion.QUOTIENT_DOMAIN


def triv(g):
    return GGroup.with_trivial_base(g)


def by_tag(reports, tag):
    return next(r for r in reports if r.tag == tag)


def test_is_prime_z6_examples():
    x = triv(cyclic(6))
    n = x.carrier.subgroup([0, 2, 4])
    assert is_prime(x, n, IP) and is_prime(x, n, QD)
    assert is_prime(x, x.carrier.full_subgroup, IP)
    assert is_prime(x, x.carrier.full_subgroup, QD)
    assert not is_prime(x, x.carrier.trivial_subgroup, IP)
    assert not is_prime(x, x.carrier.trivial_subgroup, QD)


def test_notion_separation_on_klein_diagonal():
    x = triv(direct_product(cyclic(2), cyclic(2)))
    diag = x.carrier.subgroup([0, 3])
    assert is_prime(x, diag, QD)
    assert not is_prime(x, diag, IP)


def test_is_prime_requires_normal():
    s3 = symmetric(3)
    t = next(i for i, o in enumerate(s3.element_orders) if o == 2)
    with pytest.raises(NotNormal):
        is_prime(triv(s3), s3.subgroup([0, t]), IP)


def test_subgroupwise_matches_elementwise_form():
    for g in (cyclic(6), cyclic(12), direct_product(cyclic(2), cyclic(2)),
              symmetric(3), dihedral(4), dihedral(6), generalized_quaternion(3)):
        x = triv(g)
        for n in g.normal_subgroups():
            assert is_prime(x, n, IP) == is_prime_elementwise(x, n)
            assert is_prime_elementwise(x, n) == naive_intersection_prime(
                g.table, n.elements)


def test_spectrum_examples():
    x = triv(cyclic(6))
    for notion in (IP, QD):
        primes = [p.elements for p in spectrum(x, notion).primes]
        assert primes == [(0, 3), (0, 2, 4), (0, 1, 2, 3, 4, 5)]
    assert [p.elements for p in spectrum(triv(trivial_group()), IP).primes] == [(0,)]
    z12 = spectrum(triv(cyclic(12)), IP)
    assert [p.elements for p in z12.primes] == [
        (0, 4, 8), (0, 3, 6, 9), (0, 2, 4, 6, 8, 10), tuple(range(12))]


def test_spectrum_containment_matrix():
    spec = spectrum(triv(cyclic(12)), IP)
    c = spec.containment
    assert c[0][2] and not c[2][0]       # (0,4,8) inside the even subgroup
    assert all(row[len(spec.primes) - 1] for row in c)


def test_v_set_examples():
    x = triv(cyclic(6))
    spec = spectrum(x, IP)
    assert v_set(spec, x.carrier.trivial_subgroup).members == (0, 1, 2)
    vv = v_set(spec, x.carrier.subgroup([0, 3]))
    assert [spec.primes[i].elements for i in vv.members] == [
        (0, 3), (0, 1, 2, 3, 4, 5)]
    assert v_set(spec, x.carrier.full_subgroup).members == (2,)
    assert v_set(spec, x.carrier.trivial_subgroup, starred=True).members == (0, 1)


def test_v_set_monotone():
    x = triv(dihedral(6))
    spec = spectrum(x, IP)
    normals = x.carrier.normal_subgroups()
    for a in normals:
        for b in normals:
            if b.contains(a):
                assert set(v_set(spec, b).members) <= set(v_set(spec, a).members)


def test_radical_examples():
    assert radical(triv(cyclic(6)), IP).elements == (0,)
    assert radical(triv(cyclic(6)), QD).elements == (0,)
    k4 = triv(direct_product(cyclic(2), cyclic(2)))
    assert radical(k4, IP).elements == (0, 1, 2, 3)
    assert radical(k4, QD).elements == (0,)
    assert radical(triv(trivial_group()), IP).elements == (0,)


def test_radical_of_idempotent_monotone():
    x = triv(cyclic(12))
    normals = x.carrier.normal_subgroups()
    for n in normals:
        r = radical_of(x, n, IP)
        assert radical_of(x, r, IP).mask == r.mask
        assert r.contains(n)
    for a in normals:
        for b in normals:
            if b.contains(a):
                assert radical_of(x, b, IP).contains(radical_of(x, a, IP))
    assert is_radical_ideal(x, x.carrier.subgroup([0, 4, 8]), IP)


def test_irreducibility_examples():
    x = triv(cyclic(6))
    spec = spectrum(x, IP)
    # closed set of a prime is irreducible
    for p in spec.primes:
        assert is_irreducible(spec, v_set(spec, p))
    # punctured closed set of the trivial subgroup splits into two singletons
    assert not is_irreducible(spec, v_set(spec, x.carrier.trivial_subgroup,
                                          starred=True))
    assert is_irreducible(spec, v_set(spec, x.carrier.subgroup([0, 2, 4])))


def test_verify_axioms_z6_all_pass():
    for notion in (IP, QD):
        reports = verify_axioms(triv(cyclic(6)), notion)
        assert all(r.passed for r in reports)


def test_verify_axioms_klein_quotient_domain_failures():
    reports = verify_axioms(triv(direct_product(cyclic(2), cyclic(2))), QD)
    union = by_tag(reports, "closed-union")
    assert not union.passed
    assert union.witness == {"i": [0, 1], "j": [0, 2], "prime": [0, 3]}
    prop6 = by_tag(reports, "irreducible-iff-prime")
    assert not prop6.passed
    assert prop6.witness == {"ideal": [0], "irreducible": True,
                             "radical_ideal": True, "prime": False}


def test_verify_axioms_klein_intersection_passes():
    reports = verify_axioms(triv(direct_product(cyclic(2), cyclic(2))), IP)
    assert all(r.passed for r in reports)


def test_closed_family_stability_under_intersection_notion():
    for g in (cyclic(12), symmetric(3), dihedral(4), dihedral(6)):
        x = triv(g)
        spec = spectrum(x, IP)
        normals = g.normal_subgroups()
        family = {frozenset(v_set(spec, n).members) for n in normals}
        family.add(frozenset())
        for a in family:
            for b in family:
                assert a | b in family
                assert a & b in family


def test_intersection_primes_are_quotient_domain_primes_on_abelian():
    # For abelian carriers the preimage of a cyclic subgroup is normal, which
    # makes this containment a theorem; nonabelian groups can violate it.
    for entry in corpus(24):
        if not entry.group.is_abelian:
            continue
        x = triv(entry.group)
        ip = {p.mask for p in spectrum(x, IP).primes}
        qd = {p.mask for p in spectrum(x, QD).primes}
        assert ip <= qd, entry.name


def test_notion_divergence_on_nonabelian_groups_is_real():
    # The two notions are incomparable in general: the trivial subgroup of D4
    # is intersection-prime (every pair of nontrivial normal subgroups meets
    # in the centre) while D4 itself has zero divisors.  Confirm each reported
    # divergence through the independent elementwise route.
    divergent = {}
    for entry in corpus(24):
        x = triv(entry.group)
        ip = {p.elements for p in spectrum(x, IP).primes}
        qd = {p.elements for p in spectrum(x, QD).primes}
        only_ip = ip - qd
        for elems in only_ip:
            assert naive_intersection_prime(entry.group.table, elems)
        if only_ip:
            divergent[entry.name] = sorted(only_ip)
    assert "D4" in divergent and divergent["D4"] == [(0,)]
    assert all(not corpus_group.group.is_abelian
               for corpus_group in corpus(24) if corpus_group.name in divergent)


def test_maximal_normal_subgroups_are_quotient_domain_prime():
    for entry in corpus(24):
        g = entry.group
        x = triv(g)
        normals = g.normal_subgroups()
        for n in normals:
            if n.order == g.order:
                continue
            maximal = not any(m.order not in (n.order, g.order) and m.contains(n)
                              for m in normals)
            if maximal:
                assert is_prime(x, n, QD), (entry.name, n.elements)


def test_domain_local_equivalence_report():
    assert domain_local_equivalence(triv(cyclic(8))).passed
    assert domain_local_equivalence(triv(dihedral(4))).passed


def test_axiom_reports_fixed_order():
    tags = [r.tag for r in verify_axioms(triv(cyclic(6)), IP)]
    assert tags == ["injection-hereditary", "meet-integrity", "quotient-ideal",
                    "closed-union", "closed-family-intersection",
                    "irreducible-iff-prime", "noetherian"]


def test_verify_skips_heredity_above_subgroup_cap():
    tags = [r.tag for r in verify_axioms(triv(cyclic(40)), IP)]
    assert "injection-hereditary" not in tags
    assert "closed-union" in tags
