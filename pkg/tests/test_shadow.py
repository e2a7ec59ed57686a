"""Shadow admissibility, stabilizer towers, the split, and the check sweeps."""

import random

import pytest

from weylkit.shadow import (OrbitSpec, CuspidalShadow, make_shadow,
                            shadow_from_json, validate, mu_symmetric,
                            build_groups, q1_positions, q_split,
                            table1_case, split_case_table,
                            obstructed_pair_example, verify_stable_cover,
                            enumerate_shadows, sweep_stable_cover,
                            random_shadow, verify_random_shadows,
                            config_signature)


def simple_shadow(**kw):
    orbs = [OrbitSpec(2, "t", True, eps=1)]
    args = dict(h0_in_ker=True, stab_level="Ltilde")
    args.update(kw)
    return make_shadow(orbs, args["h0_in_ker"], args["stab_level"])


def test_round_trip_json():
    sh = simple_shadow()
    assert shadow_from_json(sh.to_json()) == sh


def test_validate_weight1_sign_forcing():
    # an order-1 character forces eps = +1, order 2 forces eps = -1
    for lin, eps in ((1, -1), (2, 1)):
        orbs = [OrbitSpec(1, "a", True, eps=eps, lin_order=lin)]
        with pytest.raises(ValueError):
            make_shadow(orbs, True, "Ltilde",
                        mu_pair=None if lin == 4 else None)


def test_validate_single_class_per_small_order():
    orbs = [OrbitSpec(1, "a", True, eps=1, lin_order=1),
            OrbitSpec(1, "b", True, eps=1, lin_order=1)]
    ok, msgs = validate(CuspidalShadow(orbits=tuple(orbs), h0_in_ker=True,
                                       stab_level="Ltilde"))
    assert not ok
    assert any("single class" in m for m in msgs)


def test_validate_no_weight1_self_pair():
    orbs = (OrbitSpec(1, "a", True, eps=1, lin_order=1),)
    sh = CuspidalShadow(orbits=orbs, h0_in_ker=True, stab_level="Ltilde",
                        mu_pair=(("a", "a"),))
    ok, msgs = validate(sh)
    assert not ok


def test_validate_forced_order12_pairing():
    orbs = (OrbitSpec(1, "a", True, eps=1, lin_order=1),
            OrbitSpec(1, "b", True, eps=-1, lin_order=2))
    bad = CuspidalShadow(orbits=orbs, h0_in_ker=True, stab_level="Ltilde")
    ok, _ = validate(bad)
    assert not ok
    good = make_shadow(list(orbs), True, "Ltilde",
                       mu_pair={"a": "b", "b": "a"})
    assert mu_symmetric(good)


def test_validate_distinguished_never_twist_fixed():
    orbs = (OrbitSpec(-1, "j", True, eps=1),)
    sh = CuspidalShadow(orbits=orbs, h0_in_ker=True, stab_level="Lhat",
                        mu_pair=(("j", "j"),))
    ok, msgs = validate(sh)
    assert not ok
    assert any("never twist-fixed" in m for m in msgs)


def test_build_groups_tower_and_formulas():
    sh = make_shadow([OrbitSpec(2, "t", True, eps=1)] * 2, True, "Ltilde")
    g = build_groups(sh)
    assert all(g.formula_match.values()), g.formula_match
    assert g.w_tilde.is_subgroup_of(g.w_hat)
    assert g.w_hat.is_subgroup_of(g.w)
    assert set(g.w.elements) <= set(g.k.elements)


def test_outer_group_stabilizes_first_part():
    sh = make_shadow([OrbitSpec(-1, "j", False),
                      OrbitSpec(1, "a", True, eps=1, lin_order=1),
                      OrbitSpec(1, "b", True, eps=-1, lin_order=2)],
                     True, "Ltilde", mu_pair={"a": "b", "b": "a"})
    g = build_groups(sh)
    q1 = q1_positions(sh)
    for k in g.k.elements:
        image = {abs(k.imgs[i]) - 1 for i in q1}
        assert image == q1


def test_q_split_direct_product():
    sh = make_shadow([OrbitSpec(-1, "j", False),
                      OrbitSpec(2, "t", True, eps=1)], True, "Ltilde")
    sp = q_split(sh)
    assert sp["direct_product"]
    assert sp["q1"] | sp["q2"] == {0, 1}
    assert sp["q1"].isdisjoint(sp["q2"])


def test_table1_alias_and_frozen_row():
    assert table1_case is split_case_table
    out = table1_case(1, 1, 1)
    assert out["ok"]
    assert out["w1_order"] == 1          # W(D1) x W(D1)
    assert out["k1_order"] == 16         # 2 * |W(B1)|^2 * 2 (equal parts)
    out2 = table1_case(2, 1, 2)
    assert out2["ok"]
    assert out2["w1_order"] == 8         # |W(B2)| * |W(D1)|
    assert out2["k1_order"] == 32        # 2 * |W(B2)| * |W(B1)|


def test_obstructed_pair_example():
    out = obstructed_pair_example()
    assert out["w_tilde_order"] == 2
    assert out["eta0_stable"]
    assert not out["extends"]
    assert out["multiplicity_two"]


def test_verify_stable_cover_small():
    sh = make_shadow([OrbitSpec(2, "t", True, eps=1)], True, "Ltilde")
    recs = verify_stable_cover(sh)
    assert all(ok for _, ok, _ in recs), recs


def test_enumerate_shadows_all_admissible():
    count = 0
    for sh in enumerate_shadows((1, 2)):
        ok, msgs = validate(sh)
        assert ok, msgs
        count += 1
    assert count > 0


def test_sweep_small():
    res = sweep_stable_cover(max_orbits=1)
    assert res["ok"], res["failures"]
    assert res["shadows"] == res["distinct"] or res["shadows"] >= res["distinct"]


def test_config_signature_separates():
    a = make_shadow([OrbitSpec(2, "t", True, eps=1)], True, "Ltilde")
    b = make_shadow([OrbitSpec(2, "t", False)], True, "Ltilde",
                    mu_pair={"t": "t"})
    assert config_signature(a) != config_signature(b)


def test_random_shadows_are_admissible():
    rng = random.Random(7)
    for _ in range(25):
        sh = random_shadow(rng)
        ok, msgs = validate(sh)
        assert ok, msgs


def test_verify_random_shadows_small():
    res = verify_random_shadows(count=20, seed=3)
    assert res["ok"], res["failures"]
