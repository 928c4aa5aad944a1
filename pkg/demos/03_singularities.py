"""Central fibers and compound du Val points of the shipped instances,
plus the minimally elliptic fiber that a rational central fiber rules out."""

from dp1.algebra import parse_wpoly
from dp1.claims import load_shipped
from dp1.normal_form import Fibration
from dp1.singularities.fibers import central_fiber_type, threefold_singularities

for name, (X, _, _) in load_shipped().items():
    cf = central_fiber_type(X)
    pts = ", ".join(f"{p.label} at {p.location}" for p in cf.points) or "none"
    print(f"{name}: central fiber {cf.kind}; points: {pts}")
    for rep in threefold_singularities(X, trials=7, seed=0):
        sections = sorted({s["section_type"] for s in rep.evidence})
        print(f"  3-fold point {rep.label} at {rep.location} (sections: {sections})")

X = Fibration.from_wpoly(parse_wpoly("w^2 + z^3 - z*x^4"), allow_degenerate=True)
cf = central_fiber_type(X)
print(f"\nw^2 + z(z^2 - x^4): {[p.label for p in cf.points]}, "
      f"rationality violated: {cf.rationality_violation}")
