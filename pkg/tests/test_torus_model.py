"""Exact 2-power torus model: center, halves, Lang map."""

import pytest

from weylkit import torus_model as tm
from weylkit.signed_perm import SignedPerm, flip, transposition


def elt_order(h):
    k, x = 1, h
    e = tm.identity(len(h.a), h.K)
    while x != e:
        x = x * h
        k += 1
    return k


def test_spin_coordinate_constraint():
    with pytest.raises(ValueError):
        tm.TorusElt(4, (1, 0), 0)
    h = tm.TorusElt(4, (2, 0), 1)
    assert h.a == (2, 0) and h.b == 1


def test_group_axioms_and_json():
    h = tm.h_set(3, 4, (1, 3), 5)
    assert h * h.inv() == tm.identity(3, 4)
    assert h.power(3) == h * h * h
    assert tm.from_json(h.to_json()) == h


def test_h0_is_central_involution():
    h0 = tm.h0(4, 4)
    assert elt_order(h0) == 2
    # fixed by every signed permutation
    for p in (flip(4, 1), transposition(4, 1, 2), transposition(4, 2, 4, -1)):
        assert tm.weyl_act(p, h0) == h0


def test_center_order_four_and_parity():
    for l in (4, 5, 6, 7):
        z = tm.center_elements(l, 4)
        assert len(z) == 4
        orders = sorted(elt_order(h) for h in z)
        if l % 2 == 1:
            assert orders == [1, 2, 4, 4]
        else:
            assert orders == [1, 2, 2, 2]


def test_center_generators_close_to_center():
    for l in (4, 5):
        gens = tm.center_generators(l, 4)
        got = {tm.identity(l, 4).key()}
        frontier = [tm.identity(l, 4)]
        while frontier:
            nxt = []
            for h in frontier:
                for g in gens:
                    x = h * g
                    if x.key() not in got:
                        got.add(x.key())
                        nxt.append(x)
            frontier = nxt
        assert got == {h.key() for h in tm.center_elements(l, 4)}


def test_halves_group_order_and_exponent():
    for l in (2, 3, 4):
        H = tm.halves_group(l, 4)
        assert len(H) == 2 ** l
        assert all(elt_order(h) <= 2 for h in H)


def test_weyl_act_is_an_action():
    p = transposition(3, 1, 2, -1)
    q = flip(3, 3)
    h = tm.h_root(3, 4, (1, -1, 0), 3)
    assert tm.weyl_act(p, tm.weyl_act(q, h)) == tm.weyl_act(p * q, h)


def test_root_eval_reflection_identity():
    # alpha(h_alpha(z^c)) = z^(2c) for a short root
    h = tm.h_root(4, 5, (1, 0, 0, 0), 3)
    assert tm.root_eval(h, (1, 0, 0, 0)) == 6


def test_lang2_round_trip_q5():
    q = 5
    K = tm.default_precision(q)
    x = tm.h_set(3, K, (1, 2), 7)
    h = tm.lang2(x, q)
    pre = tm.lang2_preimage(h, q)
    assert pre is not None
    assert tm.lang2(pre, q) == h
    # an exponent not divisible by gcd(q-1, M) has no preimage
    assert tm.lang2_preimage(tm.h_set(3, K, (1, 2), 7), q) is None


def test_lang2_preimage_lex_least():
    q = 5
    K = 4
    M = 1 << K
    h = tm.h_set(2, K, (1,), 4)
    pre = tm.lang2_preimage(h, q)
    # brute force: smallest (a1, a2, b) with x^(q-1) = h
    best = None
    for a1 in range(M):
        for a2 in range(M):
            for b in range(M):
                if (2 * b - a1 - a2) % M:
                    continue
                x = tm.TorusElt(K, (a1, a2), b)
                if tm.lang2(x, q) == h:
                    cand = (a1, a2, b)
                    best = cand if best is None else min(best, cand)
    assert pre.a == best[:2] and pre.b == best[2]


def test_lang2_q3mod4():
    q = 7
    K = tm.default_precision(q)
    assert K == 4
    h = tm.h0(2, K)
    pre = tm.lang2_preimage(h, q)
    assert pre is not None and tm.lang2(pre, q) == h


def test_parse_and_format_h_set():
    l, K = 4, 4
    h = tm.parse_h_set("h[1,3](w)", l, K)
    assert h == tm.h_set(l, K, (1, 3), tm.varpi_exp(K))
    assert tm.format_h_set((3, 1), "w") == "h[1,3](w)"
    with pytest.raises(ValueError):
        tm.parse_h_set("nonsense", l, K)


def test_spin_weight_exponent_h0():
    h0 = tm.h0(3, 4)
    for mu in ((1, 1, 1), (1, -1, 1), (-1, -1, -1)):
        assert tm.spin_weight_exponent(h0, mu) == 8
