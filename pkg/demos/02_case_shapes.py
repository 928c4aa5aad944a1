"""Why only shape D survives, on random instances.

Shapes A and C make X singular along a whole curve of the central fiber,
shape B gives a general anticanonical member with a non-canonical
singularity, and shape D always leaves X singular at the point A.
"""

import random

from dp1.generators import random_case_d_instance, random_case_instance
from dp1.maps import transform_fibration
from dp1.singularities.threefold import (affine_germ, elephant_check, is_singular_at,
                                         singular_curve_check)

rng = random.Random(7)

for tag in ("A", "C"):
    inst = random_case_instance(tag, rng, max_m=3, max_degree=4)
    curve = singular_curve_check(inst.fibration.to_wpoly(), {"t", "w", "z"})
    print(f"shape {tag}, m={inst.m}: X = {inst.fibration}")
    print(f"  singular along t = w = z = 0: {curve}")

inst = random_case_instance("B", rng, max_m=1, max_degree=4)
rep = elephant_check(affine_germ(inst.fibration.to_wpoly(), "y"), "x", samples=3)
print(f"shape B: X = {inst.fibration}")
print(f"  elephant members: {[s['type'] for s in rep.samples]} -> {rep.verdict}")

print("\nshape D:")
for _ in range(3):
    inst = random_case_d_instance(rng, max_degree=3)
    X = inst.fibration
    V = transform_fibration(X, inst.map).target
    at_a = is_singular_at(affine_germ(X.to_wpoly(), "y"))
    at_b = is_singular_at(affine_germ(V.to_wpoly(), "p"))
    print(f"  k={inst.case.k} m={inst.m}: X singular at A {at_a}, V singular at B {at_b}")
