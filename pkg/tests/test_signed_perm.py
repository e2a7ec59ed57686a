"""Signed permutations and the relative Weyl group formula vs its oracle."""

from math import factorial

from hypothesis import given, settings, strategies as st

from weylkit.root_levi import decompose, all_levi_subsets
from weylkit.signed_perm import (SignedPerm, flip, transposition, full_group,
                                 full_group_order, in_d_subgroup,
                                 rel_weyl, rel_weyl_oracle,
                                 rel_weyl_matches_oracle, from_json)


def rand_signed_perm(rng, n):
    imgs = list(range(1, n + 1))
    rng.shuffle(imgs)
    return SignedPerm(tuple(s * i for s, i in
                            zip((rng.choice((1, -1)) for _ in imgs), imgs)))


@given(st.integers(2, 5), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_group_axioms(n, rng):
    a = rand_signed_perm(rng, n)
    b = rand_signed_perm(rng, n)
    c = rand_signed_perm(rng, n)
    e = SignedPerm.identity(n)
    assert (a * b) * c == a * (b * c)
    assert a * e == a and e * a == a
    assert a * a.inv() == e


def test_action_is_antihomomorphic_on_points():
    # act composes so that (a*b) acts as a after b
    a = SignedPerm((2, -1, 3))
    b = SignedPerm((-3, 2, 1))
    for i in range(1, 4):
        j = b.act(i)
        j = a.act(abs(j)) * (1 if j > 0 else -1)
        assert (a * b).act(i) == j


def test_flip_and_transposition():
    f = flip(3, 2)
    assert f.imgs == (1, -2, 3)
    assert f * f == SignedPerm.identity(3)
    t = transposition(3, 1, 3)
    assert t.imgs == (3, 2, 1)
    s = transposition(3, 1, 3, sign=-1)
    assert s.imgs == (-3, 2, -1)


def test_full_group_order_matches_enumeration():
    for weights in ((1, 1), (1, 2), (2, 2), (1, 1, 2)):
        elems = full_group(weights)
        assert len(elems) == full_group_order(weights)
        assert len({p.key() for p in elems}) == len(elems)


def test_full_group_preserves_weights():
    weights = (1, 2, 2)
    for p in full_group(weights):
        for i in range(len(weights)):
            assert weights[abs(p.imgs[i]) - 1] == weights[i]


def test_d_subgroup_is_index_two():
    weights = (1, 1, 2)
    elems = full_group(weights)
    inside = [p for p in elems if in_d_subgroup(p, weights)]
    assert 2 * len(inside) == len(elems)


def test_json_round_trip():
    p = SignedPerm((2, -1, 3))
    assert from_json(p.to_json()) == p


def test_rel_weyl_matches_oracle_small_ranks():
    for l in (2, 3):
        for delta in all_levi_subsets(l):
            dec = decompose(l, sorted(delta))
            ok, checks = rel_weyl_matches_oracle(dec)
            assert ok, (l, sorted(delta), checks)


def test_rel_weyl_order_frozen_examples():
    # empty Levi: labels form the full hyperoctahedral group on l points
    dec = decompose(4, ())
    orc = rel_weyl_oracle(dec)
    assert len(orc["image"]) == 2 ** 4 * factorial(4)
    assert len(orc["image_d"]) == 2 ** 3 * factorial(4)
    # full Levi: a single orbit, ambient of order 2
    dec = decompose(4, (1, 2, 3, 4))
    assert len(rel_weyl_oracle(dec)["image"]) <= 2


def test_rel_weyl_formula_equals_oracle_sets():
    dec = decompose(4, (1, 3))
    res = rel_weyl(dec)
    orc = rel_weyl_oracle(dec)
    assert set(res.ambient) == set(orc["image"])
    assert set(res.d_part) == set(orc["image_d"])
