import pytest

from specdec.errors import OrderCapExceeded
from specdec.ggroups import (
    GGroup,
    adjoint_orbit_subgroup,
    find_zero_divisor_pair,
    g_stable_subgroups,
    is_domain,
    is_locally_g_indecomposable,
)
from specdec.groups import (
    GroupHomomorphism,
    cyclic,
    dihedral,
    direct_product,
    generalized_quaternion,
    symmetric,
    trivial_group,
)

from oracles import naive_orbit_subgroup, naive_zero_divisor


def triv(g):
    return GGroup.with_trivial_base(g)


def ident(g):
    return GGroup.with_identity_base(g)


def test_adjoint_orbit_trivial_base_is_cyclic():
    x = triv(cyclic(6))
    assert adjoint_orbit_subgroup(x, 2).elements == (0, 2, 4)
    d4 = triv(dihedral(4))
    for e in range(8):
        assert set(adjoint_orbit_subgroup(d4, e).elements) == \
            naive_orbit_subgroup(d4.carrier.table, [0], e)


def test_adjoint_orbit_identity_base():
    s3 = symmetric(3)
    x = ident(s3)
    t = next(i for i, o in enumerate(s3.element_orders) if o == 2)
    assert adjoint_orbit_subgroup(x, t).order == 6
    z6 = ident(cyclic(6))
    assert adjoint_orbit_subgroup(z6, 3).elements == (0, 3)


def test_adjoint_orbit_is_action_stable_and_contains_seed():
    s3 = symmetric(3)
    for x in (triv(s3), ident(s3)):
        for e in range(6):
            orb = adjoint_orbit_subgroup(x, e)
            assert e in orb
            for u in x.conjugator_set:
                assert all(s3.conjugate(u, m) in orb for m in orb.elements)


def test_zero_divisor_examples():
    k4 = triv(direct_product(cyclic(2), cyclic(2)))
    w = find_zero_divisor_pair(k4)
    assert (w.x, w.y) == (1, 2)
    assert w.gx.elements == (0, 1) and w.gy.elements == (0, 2)
    assert find_zero_divisor_pair(triv(cyclic(8))) is None
    assert find_zero_divisor_pair(triv(generalized_quaternion(3))) is None
    assert find_zero_divisor_pair(ident(symmetric(3))) is None


def test_zero_divisor_witness_invariants():
    for g in (cyclic(6), direct_product(cyclic(2), cyclic(4)), dihedral(4), dihedral(6)):
        w = find_zero_divisor_pair(triv(g))
        assert w is not None
        assert w.x != 0 and w.y != 0
        assert w.gx.mask & w.gy.mask == 1
        assert w.gy.mask & ~w.gx.centralizer_mask == 0


def test_zero_divisor_matches_naive_scan():
    for g in (cyclic(6), cyclic(8), dihedral(4), dihedral(5), symmetric(3),
              direct_product(cyclic(3), cyclic(3))):
        got = find_zero_divisor_pair(triv(g))
        want = naive_zero_divisor(g.table, [0])
        assert (got is None) == (want is None)
        if got is not None:
            assert (got.x, got.y) == want
    s3 = symmetric(3)
    got = find_zero_divisor_pair(ident(s3))
    assert (got is None) == (naive_zero_divisor(s3.table, range(6)) is None)


def test_zero_divisor_cap():
    with pytest.raises(OrderCapExceeded):
        find_zero_divisor_pair(triv(cyclic(40)), cap=32)


def test_g_stable_subgroups():
    s3 = symmetric(3)
    assert len(g_stable_subgroups(triv(s3))) == 6
    assert len(g_stable_subgroups(ident(s3))) == 3      # stability = normality
    assert len(g_stable_subgroups(ident(cyclic(4)))) == 3
    # trivial morphism from a nontrivial base stabilizes everything
    x = GGroup.with_trivial_morphism(cyclic(5), s3)
    assert len(g_stable_subgroups(x)) == 6


def test_g_stable_nontrivial_morphism():
    # base Z/3 mapped onto the rotation subgroup of S3
    s3 = symmetric(3)
    base = cyclic(3)
    rot = next(i for i, o in enumerate(s3.element_orders) if o == 3)
    image = (0, rot, s3.table[rot][rot])
    hom = GroupHomomorphism(base, s3, image)
    x = GGroup(base, s3, hom)
    stables = g_stable_subgroups(x)
    assert [s.elements for s in stables] == [
        (0,), (0, 3, 4), (0, 1, 2, 3, 4, 5)]


def test_locally_indecomposable_examples():
    assert is_locally_g_indecomposable(triv(cyclic(8)))[0]
    ok, wit = is_locally_g_indecomposable(triv(dihedral(4)))
    assert not ok
    whole, a, b = wit
    assert whole.elements == (0, 1, 4, 5)
    assert a.elements == (0, 1) and b.elements == (0, 4)
    assert is_locally_g_indecomposable(triv(trivial_group()))[0]


def test_locally_indecomposable_witness_is_valid_split():
    for g in (direct_product(cyclic(2), cyclic(2)), dihedral(4), cyclic(6)):
        ok, wit = is_locally_g_indecomposable(triv(g))
        assert not ok
        whole, a, b = wit
        assert a.order * b.order == whole.order
        assert a.mask & b.mask == 1
        assert whole.contains(a) and whole.contains(b)
        assert b.mask & ~a.centralizer_mask == 0


def test_domain_iff_locally_indecomposable_small_sweep():
    from specdec.classification import corpus

    for entry in corpus(16):
        for x in (triv(entry.group), ident(entry.group),
                  GGroup.with_trivial_morphism(entry.group, entry.group)):
            assert is_domain(x) == is_locally_g_indecomposable(x)[0], entry.name


def test_injection_heredity_instances():
    # every subgroup of a domain is a domain (trivial base)
    for g in (generalized_quaternion(4), cyclic(16), dihedral(5)):
        assert is_domain(triv(g))
        for s in g.all_subgroups():
            sub, _ = s.as_group()
            assert is_domain(triv(sub))


def test_meet_integrity_instances():
    # on a domain, normal subgroups meeting trivially cannot both be nontrivial
    for g in (generalized_quaternion(3), cyclic(9), dihedral(5), symmetric(3)):
        assert is_domain(triv(g))
        normals = g.normal_subgroups()
        for i in normals:
            for j in normals:
                if i.mask & j.mask == 1:
                    assert i.order == 1 or j.order == 1


def test_quotient_inherits_base():
    s3 = symmetric(3)
    x = ident(s3)
    a3 = s3.normal_subgroups()[1]
    quo, proj = x.quotient(a3)
    assert quo.base is s3
    assert quo.carrier.order == 2
    assert quo.morphism.image == tuple(proj(g) for g in range(6))
