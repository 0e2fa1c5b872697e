"""Walk through contact surgeries on Legendrian trefoils, 8_20 and m(10_125)."""

from fractions import Fraction

from csurg.catalog import load_catalog
from csurg.ding_geiges import dg_expand
from csurg.legendrian import LegendrianClass, eh_slot
from csurg.surgery_calculus import decide_integer, decide_rational

cat = load_catalog()

print("Ding-Geiges presentations")
for pq in (Fraction(3), Fraction(7, 3), Fraction(1, 4)):
    d = dg_expand(pq)
    print(f"  {pq}: k={d.k} chain={list(d.chain)} ncf={d.ncf()}")

print("\nInteger surgeries")
for name, tb, r in (("trefoil", 1, 0), ("trefoil", -1, 0), ("8_20", -2, -1), ("m(10_125)", -3, 0)):
    L = LegendrianClass(cat.knot(name), tb, r)
    verdicts = [decide_integer(L, n).value.value for n in range(1, 5)]
    print(f"  {name} tb={tb} r={r} slot={eh_slot(L)}: n=1..4 -> {verdicts}")

print("\nA rational surgery, with its rule trace")
v = decide_rational(LegendrianClass(cat.knot("trefoil"), 1, 0), Fraction(5, 2))
print(f"  trefoil 5/2: {v.value.value}")
for rule, cite in v.trace:
    print(f"    {rule}: {cite}")
