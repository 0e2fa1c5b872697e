"""Rational surgery on L realised as integer surgery on a Legendrian cable."""

from csurg.catalog import load_catalog
from csurg.legendrian import LegendrianClass, cable
from csurg.surgery_calculus import cable_conditions, cable_surgery_decompose, decide_integer

cat = load_catalog()
L = LegendrianClass(cat.knot("trefoil"), 1, 0)

for m, n in ((2, 3), (3, 4), (3, 7)):
    d = cable_surgery_decompose(L, m, n)
    C = cable(L, m, n)
    print(f"L_({m},{n}): tb={C.tb} r={C.r} tau={C.knot.tau} epsilon={C.knot.epsilon}")
    print(f"  {d.topological}, lens factor {d.lens['name']}")
    print(f"  integer surgery on the cable: {decide_integer(C, n).value.value}")
    rep = cable_conditions(L, m, n, n)
    print(f"  case table agrees with direct evaluation: {rep.agrees} ({rep.branch})")
