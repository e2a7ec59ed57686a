"""The 2-power torus model: center, halves subgroup, and the Lang map.

Elements are exponent tuples (a_1..a_l, b) mod 2^K with the spin constraint
2b = sum(a_i).  The center always has four elements and is cyclic exactly
at odd rank; the Lang map h -> h^(q-1) has explicit lex-least preimages.
"""

from weylkit import torus_model as tm


def elt_order(h):
    k, x = 1, h
    e = tm.identity(len(h.a), h.K)
    while x != e:
        x = x * h
        k += 1
    return k


for l in (4, 5, 6, 7):
    z = tm.center_elements(l, 4)
    orders = sorted(elt_order(h) for h in z)
    kind = "cyclic C4" if 4 in orders else "Klein C2xC2"
    print(f"rank {l}: center orders {orders} -> {kind}")
print()

q = 5
K = tm.default_precision(q)
print(f"q = {q}, precision K = {K} (modulus {1 << K})")
x = tm.h_set(3, K, (1, 2), 7)
h = tm.lang2(x, q)
pre = tm.lang2_preimage(h, q)
print("  image of h[1,2](zeta^7) under h -> h^(q-1):", h.a, h.b)
print("  lex-least preimage:", pre.a, pre.b)
print("  round trip        :", tm.lang2(pre, q) == h)
print()

H = tm.halves_group(3, 4)
print(f"halves subgroup at rank 3: {len(H)} elements, "
      f"exponent {max(elt_order(h) for h in H)}")
