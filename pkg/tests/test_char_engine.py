"""Character tables, extension solvers, wreath and product-glue builders."""

from fractions import Fraction

import pytest

from weylkit.group_engine import (FiniteGroup, quaternion_group, Perm)
from weylkit.signed_perm import SignedPerm, flip, transposition
from weylkit.char_engine import (CharTable, common_tables, extends_to,
                                 maximal_extendibility, linear_characters,
                                 char_order, linear_ext_cocycle,
                                 verify_halves_extension, wreath_ext_map,
                                 cor_tool_build, transversal_check)


def s3_group():
    return FiniteGroup(gens=[Perm((1, 0, 2)), Perm((0, 2, 1))])


def d8_group():
    return FiniteGroup(gens=[flip(2, 1), transposition(2, 1, 2)])


def test_char_table_s3():
    t = CharTable(s3_group())
    assert t.r == 3
    assert sorted(t.degree_of(chi) for chi in t.irreducibles) == [1, 1, 2]
    # sum of squared degrees equals the order
    assert sum(t.degree_of(c) ** 2 for c in t.irreducibles) == 6


def test_char_table_d8():
    t = CharTable(d8_group())
    assert sorted(t.degree_of(chi) for chi in t.irreducibles) == [1, 1, 1, 1, 2]


def test_first_orthogonality():
    t = CharTable(s3_group())
    for i, a in enumerate(t.irreducibles):
        for j, b in enumerate(t.irreducibles):
            assert t.inner(a, b) == (1 if i == j else 0)


def test_restriction_and_extends_a3_in_s3():
    g = s3_group()
    a3 = FiniteGroup(gens=[Perm((1, 2, 0))])
    tables = common_tables(g, a3)
    tg, ta = tables
    lin = [c for c in ta.irreducibles if ta.degree_of(c) == 1]
    trivial = next(c for c in lin if all(v == 1 for v in c))
    assert extends_to(g, a3, trivial, tables=tables)
    nontriv = [c for c in lin if c != trivial]
    # the two faithful characters of A3 are fused, not extended
    for c in nontriv:
        assert not extends_to(g, a3, c, tables=tables)


def test_maximal_extendibility_c2_in_d8():
    g = d8_group()
    z = g.center()
    ok, detail = maximal_extendibility(g, z)
    assert not ok     # the faithful central character cannot extend
    c4 = FiniteGroup(gens=[flip(2, 1) * transposition(2, 1, 2)])
    ok, _ = maximal_extendibility(g, c4)
    assert ok


def test_linear_characters_klein():
    g = FiniteGroup(gens=[flip(2, 1), flip(2, 2)])
    chars = linear_characters(g)
    assert len(chars) == 4
    for lam in chars:
        for a in g.elements:
            for b in g.elements:
                assert (lam[a] + lam[b]) % 1 == lam[a * b]
    assert sorted(char_order(lam) for lam in chars) == [1, 2, 2, 2]


def test_cocycle_solver_positive_case():
    g = d8_group()
    c4 = FiniteGroup(gens=[flip(2, 1) * transposition(2, 1, 2)])
    for lam in linear_characters(c4):
        stable = all(lam[h * x * h.inv()] == lam[x]
                     for h in g.gens for x in c4.elements)
        res = linear_ext_cocycle(lam, c4, g)
        if stable:
            assert res.ok
            for a in g.elements:
                for b in g.elements:
                    assert (res.witness[a] + res.witness[b]) % 1 \
                        == res.witness[a * b]
        else:
            assert not res.ok


def test_cocycle_solver_quaternion_obstruction():
    q8, z = quaternion_group()
    center = FiniteGroup(gens=[z])
    lam = {center.identity: Fraction(0), z: Fraction(1, 2)}
    res = linear_ext_cocycle(lam, center, q8)
    assert not res.ok
    assert res.certificate is not None
    assert res.certificate[0] == "central-derived intersection"
    # the non-faithful central character extends fine
    triv = {center.identity: Fraction(0), z: Fraction(0)}
    assert linear_ext_cocycle(triv, center, q8).ok


def test_halves_extension_rank2():
    recs = verify_halves_extension(2)
    bad = [name for name, ok, _ in recs if not ok]
    assert not bad, bad


def test_wreath_ext_map_c2_squared():
    out = wreath_ext_map((2,), [((1,),)], 2)
    assert out["equivariant"]
    assert len(out["map"]) == 4      # all pairs of the two characters of C2


def test_wreath_ext_map_with_outer_action():
    # base C3 with the inversion twist, two copies, diagonal inversion on top
    out = wreath_ext_map((3,), [((1,),), ((2,),)], 2, a_mats=[((2,),)])
    assert out["equivariant"]


def test_cor_tool_build_toy():
    m = FiniteGroup(gens=[flip(2, 1), flip(2, 2), transposition(2, 1, 2)])
    s = transposition(2, 1, 2)
    ff = flip(2, 1) * flip(2, 2)
    k = FiniteGroup(gens=[ff, s])
    k0 = FiniteGroup(gens=[s])
    v = FiniteGroup(gens=[flip(2, 1), flip(2, 2)])
    out = cor_tool_build(m, k, k0, v)
    assert out["equivariant"]
    lam_map = out["map"]
    for lam_key, big in lam_map.items():
        lam = dict(zip(k.elements, lam_key))
        for h in k.elements:
            assert big[h] == lam[h] % 1


def test_cor_tool_build_bad_hypotheses():
    m = FiniteGroup(gens=[flip(2, 1), flip(2, 2), transposition(2, 1, 2)])
    triv = FiniteGroup(elements=[m.identity])
    with pytest.raises(ValueError, match="central"):
        # K = V = M makes H = M, which is not central in the nonabelian K
        cor_tool_build(m, m, triv, m)


def test_transversal_check_d8():
    rot = Perm((1, 2, 3, 0))
    ref = Perm((3, 2, 1, 0))
    z = FiniteGroup(gens=[rot, ref])
    xt = FiniteGroup(gens=[rot])
    yh = FiniteGroup(gens=[rot * rot, ref])
    out = transversal_check(z, yh, xt)
    assert out["stable_transversal"] == out["factorizing_conjugate"] \
        == out["in_place_factorization"]
    assert out["stable_transversal"] is True
