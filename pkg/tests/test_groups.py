import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specdec.errors import (
    InvalidActionOrder,
    InvalidPermutation,
    NoIdentityAtZero,
    NonAssociative,
    NotLatinSquare,
    NotNormal,
    OrderCapExceeded,
    UnsupportedParameter,
)
from specdec.groups import (
    FiniteGroup,
    alternating,
    are_isomorphic,
    cyclic,
    dihedral,
    direct_product,
    from_cayley_table,
    from_permutation_generators,
    generalized_quaternion,
    metacyclic,
    symmetric,
    trivial_group,
)

from oracles import (
    naive_all_subgroups,
    naive_commutator_subgroup,
    naive_element_order,
    naive_normal_closure,
    naive_normal_subgroups,
)


def test_from_cayley_trivial():
    g = from_cayley_table([[0]])
    assert g.order == 1


def test_from_cayley_z2():
    g = from_cayley_table([[0, 1], [1, 0]])
    assert g.order == 2
    assert g.inverse == (0, 1)


def test_from_cayley_mod6_full_scan():
    table = [[(a + b) % 6 for b in range(6)] for a in range(6)]
    g = from_cayley_table(table)
    assert g.is_abelian
    # independent associativity oracle
    for a in range(6):
        for b in range(6):
            for c in range(6):
                assert table[table[a][b]][c] == table[a][table[b][c]]


def test_from_cayley_rejects_bad_tables():
    with pytest.raises(NotLatinSquare):
        from_cayley_table([[0, 0], [1, 1]])
    with pytest.raises(NoIdentityAtZero):
        from_cayley_table([[1, 0], [0, 1]])
    # Latin square with identity but not associative (order 5 loop)
    loop = [[0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0]]
    with pytest.raises(NonAssociative):
        from_cayley_table(loop)
    with pytest.raises(NotLatinSquare):
        from_cayley_table([[0, 1], [1, 5]])


def test_perm_generators_s3():
    g = from_permutation_generators(3, [(1, 2, 0), (1, 0, 2)])
    assert g.order == 6
    g.check_axioms()


def test_perm_generators_single_involution():
    g = from_permutation_generators(2, [(1, 0)])
    assert g.order == 2


def test_perm_generators_empty():
    assert from_permutation_generators(4, []).order == 1


def test_perm_generators_errors():
    with pytest.raises(InvalidPermutation):
        from_permutation_generators(3, [(0, 0, 1)])
    with pytest.raises(OrderCapExceeded):
        from_permutation_generators(5, [(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)], order_cap=30)


def test_named_quaternion():
    q8 = generalized_quaternion(3)
    assert q8.order == 8
    q8.check_axioms()
    assert sum(1 for o in q8.element_orders if o == 2) == 1
    # the involution is the square of the order-4 generator x (element 2)
    x = 2
    assert q8.element_orders[x] == 4
    assert q8.table[x][x] == 4
    assert q8.element_orders[4] == 2


def test_named_quaternion_orders():
    for n in (3, 4, 5):
        q = generalized_quaternion(n)
        assert q.order == 2 ** n
        assert sum(1 for o in q.element_orders if o == 2) == 1
    with pytest.raises(UnsupportedParameter):
        generalized_quaternion(2)


def test_named_cyclic_trivial():
    assert cyclic(1).order == 1
    assert trivial_group().order == 1


def test_named_metacyclic():
    # 2 has multiplicative order 3 mod 7
    assert pow(2, 3, 7) == 1 and pow(2, 1, 7) != 1
    g = metacyclic(7, 1, 3, 1, 2)
    assert g.order == 21
    assert not g.is_abelian
    g.check_axioms()
    with pytest.raises(InvalidActionOrder):
        metacyclic(7, 1, 3, 1, 3)  # 3 has order 6 mod 7


def test_named_dihedral_symmetric_alternating():
    for g, n in ((dihedral(4), 8), (symmetric(4), 24), (alternating(4), 12)):
        assert g.order == n
        g.check_axioms()


def test_constructed_groups_pass_axiom_scan():
    for g in (cyclic(12), dihedral(6), generalized_quaternion(4), symmetric(3),
              direct_product(cyclic(2), cyclic(4)), metacyclic(5, 1, 2, 2, 2)):
        g.check_axioms()


def test_direct_product_row_major():
    g = direct_product(cyclic(2), cyclic(3))
    assert g.order == 6
    # (a1,b1)*(a2,b2) at row-major labels
    assert g.table[1 * 3 + 2][0 * 3 + 1] == (1 % 2) * 3 + (2 + 1) % 3


def test_normal_closure_examples():
    s3 = symmetric(3)
    t = next(i for i, o in enumerate(s3.element_orders) if o == 2)
    assert s3.normal_closure([t]).order == 6
    assert cyclic(5).normal_closure([0]).elements == (0,)
    assert cyclic(6).normal_closure([2]).elements == (0, 2, 4)


def test_normal_closure_minimality_against_oracle():
    for g in (symmetric(3), dihedral(4), cyclic(12), generalized_quaternion(3)):
        normals = [set(s) for s in naive_normal_subgroups(g.table)]
        for x in range(g.order):
            nc = set(g.normal_closure([x]).elements)
            assert nc == set(naive_normal_closure(g.table, {x}))
            least = min((s for s in normals if x in s), key=len)
            assert nc == least


def test_commutator_subgroup():
    s3 = symmetric(3)
    assert s3.commutator_subgroup(s3.full_subgroup, s3.full_subgroup).order == 3
    z6 = cyclic(6)
    assert z6.commutator_subgroup(z6.full_subgroup, z6.full_subgroup).order == 1
    q8 = generalized_quaternion(3)
    derived = q8.derived_subgroup
    assert derived.elements == (0, 4)  # identity and the unique involution
    assert set(derived.elements) == set(
        naive_commutator_subgroup(q8.table, range(8), range(8)))


def test_commutator_contained_in_meet_for_normal_pairs():
    for g in (symmetric(3), dihedral(6), generalized_quaternion(4)):
        normals = g.normal_subgroups()
        for i in normals:
            for j in normals:
                comm = g.commutator_subgroup(i, j)
                assert comm.mask & ~(i.mask & j.mask) == 0


def test_quotient_examples():
    z6 = cyclic(6)
    q, proj = z6.quotient(z6.subgroup([0, 3]))
    assert q.order == 3
    assert are_isomorphic(q, cyclic(3)) is not None
    assert proj.kernel().elements == (0, 3)
    s3 = symmetric(3)
    q2, _ = s3.quotient(s3.normal_subgroups()[1])
    assert q2.order == 2
    qq, _ = s3.quotient(s3.full_subgroup)
    assert qq.order == 1


def test_quotient_projection_surjective_with_kernel():
    g = dihedral(6)
    for n in g.normal_subgroups():
        q, proj = g.quotient(n)
        assert len(set(proj.image)) == q.order
        assert proj.kernel().elements == n.elements


def test_quotient_not_normal():
    s3 = symmetric(3)
    t = next(i for i, o in enumerate(s3.element_orders) if o == 2)
    sub = s3.subgroup([0, t])
    with pytest.raises(NotNormal):
        s3.quotient(sub)


def test_normal_subgroups_counts():
    assert len(cyclic(6).normal_subgroups()) == 4
    assert len(trivial_group().normal_subgroups()) == 1
    assert len(symmetric(3).normal_subgroups()) == 3


def test_normal_subgroups_against_oracle():
    for g in (cyclic(12), symmetric(3), dihedral(4), dihedral(6),
              generalized_quaternion(3), direct_product(cyclic(2), cyclic(4)),
              metacyclic(7, 1, 3, 1, 2)):
        got = [set(s.elements) for s in g.normal_subgroups()]
        want = [set(s) for s in naive_normal_subgroups(g.table)]
        assert got == want


def test_all_subgroups_against_oracle():
    for g in (cyclic(8), dihedral(4), generalized_quaternion(3), symmetric(3),
              direct_product(cyclic(2), cyclic(2))):
        got = [set(s.elements) for s in g.all_subgroups()]
        want = [set(s) for s in naive_all_subgroups(g.table)]
        assert got == want


def test_subgroup_lagrange():
    g = dihedral(6)
    for s in g.all_subgroups():
        assert g.order % s.order == 0


def test_normal_cap():
    with pytest.raises(OrderCapExceeded):
        cyclic(20).normal_subgroups(cap=10)
    with pytest.raises(OrderCapExceeded):
        cyclic(40).all_subgroups(cap=32)


def test_are_isomorphic_witness():
    iso = are_isomorphic(cyclic(6), direct_product(cyclic(2), cyclic(3)))
    assert iso is not None and iso.is_bijective
    assert are_isomorphic(cyclic(4), direct_product(cyclic(2), cyclic(2))) is None
    g = symmetric(3)
    ident = are_isomorphic(g, g)
    assert ident is not None and ident.image == tuple(range(6))


def test_are_isomorphic_properties():
    pairs = [
        (dihedral(3), symmetric(3), True),
        (dihedral(3), metacyclic(3, 1, 2, 1, 2), True),
        (generalized_quaternion(3), dihedral(4), False),
        (cyclic(8), direct_product(cyclic(2), cyclic(4)), False),
        (direct_product(cyclic(3), cyclic(5)), cyclic(15), True),
        (dihedral(6), direct_product(symmetric(3), cyclic(2)), True),
    ]
    for a, b, expect in pairs:
        fwd = are_isomorphic(a, b)
        bwd = are_isomorphic(b, a)
        assert (fwd is not None) == expect
        assert (bwd is not None) == expect
        if fwd is not None:
            inv = fwd.inverse_hom()
            assert inv.domain is b and inv.is_bijective


def test_element_orders_against_oracle():
    g = metacyclic(5, 1, 2, 2, 2)
    for x in range(g.order):
        assert g.element_orders[x] == naive_element_order(g.table, x)


@given(st.integers(min_value=1, max_value=24))
@settings(max_examples=24, deadline=None)
def test_cyclic_properties(n):
    g = cyclic(n)
    g.check_axioms()
    assert g.is_abelian
    assert len(g.normal_subgroups()) == sum(1 for d in range(1, n + 1) if n % d == 0)


@given(st.integers(min_value=3, max_value=12))
@settings(max_examples=10, deadline=None)
def test_dihedral_properties(n):
    g = dihedral(n)
    g.check_axioms()
    assert not g.is_abelian
    assert g.center_mask.bit_count() == (2 if n % 2 == 0 else 1)
