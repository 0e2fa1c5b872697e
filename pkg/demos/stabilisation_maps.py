"""Compare the stabilisation maps read off the bordered box tensor with their closed form."""

import numpy as np

from csurg.bordered import closed_form_sigma, derive_sigma
from csurg.catalog import load_catalog
from csurg.floer_model import build_surgery_model, staircase_oracle

cat = load_catalog()
trefoil = cat.cfk_data("trefoil")

print("Generator model of the trefoil at framing -8")
model = build_surgery_model(trefoil, -8)
print(f"  {model.dim} generators, graded dims {dict(sorted(model.graded_dims().items()))}")
print(f"  staircase oracle agrees: {staircase_oracle(trefoil, -8) == model.graded_dims()}")

for n in (-2, 2, 4):
    derived = derive_sigma(trefoil, n)
    closed = closed_form_sigma(trefoil, n)
    same = all(np.array_equal(a, b) for a, b in zip(derived, closed))
    print(f"\nframing {n} -> {n - 1}: bordered matches closed form: {same}")
    print("  sigma_-:\n" + "\n".join("    " + " ".join(map(str, row)) for row in closed[0]))
    print("  sigma_+:\n" + "\n".join("    " + " ".join(map(str, row)) for row in closed[1]))
