"""Generic finite-group machinery over hashable elements with * and inv."""

import pytest

from weylkit.group_engine import (FiniteGroup, closure, quotient,
                                  small_generating_set, product_set,
                                  quaternion_group, Perm,
                                  ClosureCapExceeded)
from weylkit.signed_perm import SignedPerm, flip, transposition


def b2_group():
    return FiniteGroup(gens=[flip(2, 1), transposition(2, 1, 2)])


def test_closure_b2():
    g = b2_group()
    assert g.order == 8


def test_closure_cap():
    with pytest.raises(ClosureCapExceeded):
        closure([transposition(6, 1, 2), transposition(6, 2, 3),
                 transposition(6, 3, 4), transposition(6, 4, 5),
                 transposition(6, 5, 6), flip(6, 1)], cap=100)


def test_identity_and_membership():
    g = b2_group()
    assert g.identity == SignedPerm.identity(2)
    assert flip(2, 2) in g
    assert SignedPerm((2, 1)) in g


def test_center_and_classes_b2():
    g = b2_group()
    z = g.center()
    assert z.order == 2
    classes = g.conj_classes()
    assert sorted(len(c) for c in classes) == [1, 1, 2, 2, 2]


def test_subgroup_and_normality():
    g = b2_group()
    rot = FiniteGroup(gens=[flip(2, 1) * transposition(2, 1, 2)])
    assert rot.order == 4
    assert rot.is_subgroup_of(g)
    assert g.is_normal(rot)
    refl = FiniteGroup(gens=[transposition(2, 1, 2)])
    assert not g.is_normal(refl)


def test_quotient_of_d8_by_center():
    g = b2_group()
    q = quotient(g, g.center())
    assert q.order == 4
    assert all((c * c).rep == q.identity.rep for c in q.elements)


def test_normalizer_inside_ambient():
    g = b2_group()
    sub = FiniteGroup(gens=[flip(2, 1)])
    n = g.normalizer(sub)
    assert sub.is_subgroup_of(n)
    assert n.order == 4


def test_small_generating_set():
    g = b2_group()
    gens = small_generating_set(g.elements)
    assert len(gens) <= 3
    assert set(closure(gens)) == set(g.elements)


def test_product_set():
    a = [SignedPerm.identity(2), flip(2, 1)]
    b = [SignedPerm.identity(2), flip(2, 2)]
    assert len(product_set(a, b)) == 4


def test_perm_algebra():
    a = Perm((1, 2, 0))
    b = Perm((1, 0, 2))
    assert (a * a.inv()).imgs == (0, 1, 2)
    assert (a * b).imgs == tuple(a.imgs[i] for i in b.imgs)


def test_quaternion_group_structure():
    q8, z = quaternion_group()
    assert q8.order == 8
    assert z in q8 and z * z == q8.identity
    assert q8.center().order == 2
    # unique involution, six elements of order 4
    orders = []
    for g in q8.elements:
        k, x = 1, g
        while x != q8.identity:
            x = x * g
            k += 1
        orders.append(k)
    assert sorted(orders) == [1, 2, 4, 4, 4, 4, 4, 4]
    der = q8.derived_subgroup()
    assert set(der.elements) == {q8.identity, z}
