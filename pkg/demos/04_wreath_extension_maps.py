"""Equivariant extension maps through wreath products.

Given an equivariant extension map for an abelian base group inside a small
semidirect product, the per-cycle product formula assembles an extension
map for the a-fold wreath product, equivariant under the whole wreath group
and the diagonal outer action.  Everything is verified exhaustively inside
the builder: multiplicativity on all pairs, restriction, and equivariance.
"""

from weylkit.char_engine import wreath_ext_map

print("C2 base, two copies:")
out = wreath_ext_map((2,), [((1,),)], 2)
print("  characters handled:", len(out["map"]))
print("  equivariant       :", out["equivariant"])
print()

print("C3 base with inversion twist, two copies, diagonal inversion on top:")
out = wreath_ext_map((3,), [((1,),), ((2,),)], 2, a_mats=[((2,),)])
print("  characters handled:", len(out["map"]))
print("  equivariant       :", out["equivariant"])
print()

print("Klein base with coordinate swap, two copies, diagonal swap on top:")
swap = ((0, 1), (1, 0))
ident = ((1, 0), (0, 1))
out = wreath_ext_map((2, 2), [ident, swap], 2, a_mats=[swap])
print("  characters handled:", len(out["map"]))
print("  equivariant       :", out["equivariant"])
