"""Acceptance gate: ten end-to-end criteria, one test each.

Every test prints a single `criterion NN PASS/FAIL` line (visible with -s or
on failure) and asserts both correctness and its pinned wall-time budget.
All checks are exact; no floating-point tolerances are involved.
"""

import random
import time

from fractions import Fraction

from weylkit.root_levi import decompose, all_levi_subsets
from weylkit.signed_perm import rel_weyl_matches_oracle
from weylkit.spin_monomial import verify_relations
from weylkit.char_engine import verify_halves_extension, linear_ext_cocycle
from weylkit.group_engine import FiniteGroup, quaternion_group
from weylkit import torus_model as tm
from weylkit.shadow import (table1_case, obstructed_pair_example,
                            sweep_stable_cover, random_shadow,
                            verify_stable_cover, verify_random_shadows)
from weylkit.char_engine import wreath_ext_map


def report(n, desc, ok, elapsed, limit):
    print(f"criterion {n:02d} {'PASS' if ok else 'FAIL'}: {desc} "
          f"({elapsed:.1f}s / limit {limit}s)")
    assert ok, desc
    assert elapsed < limit, f"criterion {n} over budget: {elapsed:.1f}s"


def test_criterion_01_relative_weyl_formula_all_levis_rank4_rank5():
    for l in (4, 5):
        t0 = time.monotonic()
        bad = []
        for delta in all_levi_subsets(l):
            dec = decompose(l, sorted(delta))
            ok, checks = rel_weyl_matches_oracle(dec)
            if not ok:
                bad.append((sorted(delta), checks))
        report(1, f"relative Weyl formula matches brute force, rank {l}",
               not bad, time.monotonic() - t0, 120)


def test_criterion_02_monomial_relation_suite_rank4_rank5():
    t0 = time.monotonic()
    bad = []
    for l in (4, 5):
        for name, ok, detail in verify_relations(l):
            if not ok:
                bad.append((l, name, detail))
    report(2, "monomial-lift relation suite, ranks 4 and 5",
           not bad, time.monotonic() - t0, 300)


def test_criterion_03_halves_extension_ranks_2_3_4():
    t0 = time.monotonic()
    bad = []
    for lp in (2, 3, 4):
        for name, ok, detail in verify_halves_extension(lp):
            if not ok:
                bad.append((lp, name, detail))
    report(3, "halves-subgroup extension and sign-free normal form",
           not bad, time.monotonic() - t0, 120)


def test_criterion_04_quaternion_obstruction_is_nonzero():
    t0 = time.monotonic()
    q8, z = quaternion_group()
    center = FiniteGroup(gens=[z])
    lam = {center.identity: Fraction(0), z: Fraction(1, 2)}
    res = linear_ext_cocycle(lam, center, q8)
    ok = (not res.ok) and res.certificate is not None \
        and res.certificate[0] == "central-derived intersection" \
        and res.certificate[1] != 0
    report(4, "faithful central character of the quaternion group is "
           "obstructed", ok, time.monotonic() - t0, 60)


def test_criterion_05_stable_nonextending_multiplicity_two():
    t0 = time.monotonic()
    out = obstructed_pair_example()
    ok = (out["w_tilde_order"] == 2 and out["eta0_stable"]
          and not out["extends"] and out["multiplicity_two"])
    report(5, "two-orbit pair: stable character, no extension, "
           "multiplicity two", ok, time.monotonic() - t0, 60)


def test_criterion_06_stable_cover_sweep_and_random():
    t0 = time.monotonic()
    res = sweep_stable_cover(max_orbits=4)
    ok = res["ok"]
    rng = random.Random(0)
    checked = 0
    while checked < 100:
        sh = random_shadow(rng, max_orbits=6)
        if len(sh.orbits) not in (5, 6):
            continue
        recs = verify_stable_cover(sh)
        if not all(r[1] for r in recs):
            ok = False
            break
        checked += 1
    report(6, f"stable-cover theorems: exhaustive to 4 orbits "
           f"({res['shadows']} shadows) plus 100 random with 5-6 orbits",
           ok, time.monotonic() - t0, 900)


def test_criterion_07_split_case_table_all_rows():
    t0 = time.monotonic()
    bad = []
    for l1 in (1, 2, 3):
        for l2 in (1, 2, 3):
            for row in (1, 2, 3):
                out = table1_case(l1, l2, row)
                if not out["ok"]:
                    bad.append((l1, l2, row))
    report(7, "three-row split family, all part sizes up to 3",
           not bad, time.monotonic() - t0, 120)


def test_criterion_08_equivariant_wreath_extension_maps():
    t0 = time.monotonic()
    ok = True
    # C2 base, trivial twists, two copies
    ok &= wreath_ext_map((2,), [((1,),)], 2)["equivariant"]
    # C3 base with inversion twist, two copies, diagonal inversion on top
    ok &= wreath_ext_map((3,), [((1,),), ((2,),)], 2,
                         a_mats=[((2,),)])["equivariant"]
    # Klein base with coordinate swap, two copies, diagonal swap on top
    swap = ((0, 1), (1, 0))
    ident = ((1, 0), (0, 1))
    ok &= wreath_ext_map((2, 2), [ident, swap], 2,
                         a_mats=[swap])["equivariant"]
    report(8, "equivariant wreath-product extension maps, three base cases",
           bool(ok), time.monotonic() - t0, 300)


def test_criterion_09_shadow_formulas_match_enumeration_500_random():
    t0 = time.monotonic()
    res = verify_random_shadows(count=500, seed=0, max_orbits=5)
    report(9, "closed-form stabilizer orders match enumeration on 500 "
           "random shadows", res["ok"], time.monotonic() - t0, 300)


def test_criterion_10_center_order_four_cyclic_iff_odd_rank():
    t0 = time.monotonic()
    ok = True
    for l in (4, 5, 6, 7):
        z = tm.center_elements(l, 4)
        if len(z) != 4:
            ok = False
        has4 = any(h * h != tm.identity(l, 4) for h in z)
        if has4 != (l % 2 == 1):
            ok = False
    report(10, "center has order 4, cyclic exactly at odd rank",
           ok, time.monotonic() - t0, 60)
