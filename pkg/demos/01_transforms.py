"""Monomial maps between degree-1 del Pezzo fibrations.

Loads the shipped instances, applies their maps, and shows what happens
when a coefficient violates the valuation table.
"""

from dp1.algebra import WPoly, parse_wpoly
from dp1.claims import load_shipped
from dp1.maps import check_constraints, classify_case, transform_fibration
from dp1.normal_form import Fibration

instances = load_shipped()

for name, (X, mp, _) in instances.items():
    case = classify_case(mp)
    res = transform_fibration(X, mp)
    print(f"{name}: map {mp.fwd}, case {case.tag} (k={case.k}, l={case.l})")
    print(f"  X: {X}")
    print(f"  V: {res.target}   [cleared t^{res.cleared_valuation}]")
    back = transform_fibration(res.target, mp.inverse())
    print(f"  inverse map recovers X: {back.ok and back.target == X}")

# The second instance is an automorphism in disguise: swapping x and y
# (and renaming to p, q, r, s) turns X into V.
X, mp, _ = instances["example2"]
V = transform_fibration(X, mp).target.to_wpoly()
swapped = X.to_wpoly().substitute({"x": WPoly.var("y"), "y": WPoly.var("x")}).rename(V.names)
print("\nexample2 relabeled equals V:", swapped == V)

# A coefficient of too low valuation breaks the map; every offender is listed.
X, mp, _ = instances["example1"]
bad = Fibration.from_wpoly(X.to_wpoly() + parse_wpoly("x*y^5 + y^6"))
res = transform_fibration(bad, mp)
print(f"\nperturbed X: {bad}")
for v in res.violations:
    print(f"  {v['source_monomial']}: valuation {v['source_valuation']}, needs {v['required_source_valuation']}")
print("valuation table:", check_constraints(bad, classify_case(mp)).violations)
