"""Deciding whether two tensors are similar.

The decision procedure enumerates the permutations that match the zero
patterns, then solves a multiplicative system for the diagonal entries, and
finally verifies the candidate by reconstructing the target.  For order >= 3
this search is complete: if any witness exists, a structured one does.
"""

import numpy as np

from tensim import (
    clean,
    decide_similar,
    max_abs_diff,
    nnz,
    structured_transform,
    unit_tensor,
)
from tensim.generate import random_structured_witness, random_tensor

rng = np.random.default_rng(7)

# Forward-generate a similar pair, then pretend we only know (A, B).
A = random_tensor(rng, 3, 4, density=0.3)
hidden = random_structured_witness(rng, 3, 4)
B = clean(structured_transform(A, hidden))
print("A has", nnz(A), "nonzeros; B is a hidden transform of A")

found = decide_similar(A, B)
print("decided similar:", found is not None)
print("found sigma:", found.sigma.images, " (hidden was", hidden.sigma.images, ")")

# The found witness need not equal the hidden one when the pattern has
# automorphisms, but it must reproduce B.
err = max_abs_diff(structured_transform(A, found), B)
print("reconstruction error:", err)

# Scaling one entry of B usually destroys similarity: the multiplicative
# system for d becomes inconsistent and the search returns None.
data = B.data.copy()
pos = tuple(np.argwhere(data != 0)[0])
data[pos] *= 1.7
from tensim import Tensor

print("\nafter perturbing one entry:", decide_similar(A, clean(Tensor(data))))

# Different nonzero counts settle the question immediately.
extra = np.zeros((2, 2, 2), dtype=complex)
extra[0, 0, 0] = extra[1, 1, 1] = extra[0, 1, 1] = 1.0
print("unit tensor vs unit tensor + extra entry:",
      decide_similar(unit_tensor(3, 2), Tensor(extra)))

# Self-similarity always returns the identity witness.
w = decide_similar(A, A)
print("\nself-similarity witness: sigma =", w.sigma.images,
      ", d =", np.round(w.d.values.real, 12).tolist())
