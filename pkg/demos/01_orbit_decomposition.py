"""Decompose {1..l} into orbits for a choice of simple roots.

Each subset of the branched diagram is first normalized (the graph
automorphism folds case-equivalent subsets together), then the chosen
difference roots glue coordinates into weight-d blocks; leftover nodes stay
as weight-1 singletons and, in case ii, a distinguished orbit appears.
"""

from weylkit.root_levi import decompose, all_levi_subsets

dec = decompose(5, (1, 3))
print("rank 5, delta = {1,3}")
print("  case        :", dec.case)
print("  orbits      :", [list(o) for o in dec.orbits])
print("  weights     :", list(dec.weights))
print("  weight set D:", list(dec.dset))
print("  as JSON     :", dec.to_json())
print()

print("all subsets at rank 4, grouped by orbit shape:")
shapes = {}
for delta in all_levi_subsets(4):
    d = decompose(4, sorted(delta))
    key = tuple(sorted(len(o) for o in d.orbits)), d.case
    shapes.setdefault(key, []).append(sorted(delta))
for (shape, case), deltas in sorted(shapes.items()):
    print(f"  sizes {list(shape)} case {case}: {len(deltas)} subsets")
