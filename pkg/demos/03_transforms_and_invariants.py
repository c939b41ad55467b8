"""Similarity transforms and what they can never change.

For order >= 3 every similarity factors into a diagonal scaling followed by
a simultaneous relabeling of all indices.  Relabelings move entries around;
scalings multiply them by nonzero factors.  Neither can create or destroy a
nonzero, which is why the zero pattern (up to relabeling), the nonzero
count, and diagonality are similarity invariants.
"""

import numpy as np

from tensim import (
    DiagonalScaling,
    Permutation,
    Tensor,
    clean,
    decompose_witness,
    diagonal_tensor,
    diagonal_transform,
    general_transform,
    is_diagonal,
    nnz,
    permutation_transform,
    similarity_invariants,
    triangularizable_pattern,
    zero_pattern,
)
from tensim.generate import random_tensor, random_unit_preserving_witness

# A relabeling moves the single entry at (1,2,2) to (2,1,1).
data = np.zeros((2, 2, 2), dtype=complex)
data[0, 1, 1] = 5.0
A = Tensor(data)
swapped = permutation_transform(A, Permutation((2, 1)))
print("entry moved to:", [int(i) + 1 for i in np.argwhere(swapped.data != 0)[0]])

# A diagonal scaling multiplies that entry by d1^(1-m) d2 d2 = 9/4.
scaled = diagonal_transform(A, DiagonalScaling([2.0, 3.0]))
print("entry scaled to:", scaled.data[0, 1, 1].real)

# A uniform scaling changes nothing at all (the gauge freedom).
print("c*I acts as the identity:", diagonal_transform(A, DiagonalScaling([7j, 7j])) == A)

# Invariants in action: transform a random tensor by a random witness and
# compare the reports.
rng = np.random.default_rng(42)
X = random_tensor(rng, 3, 4, density=0.4)
w = random_unit_preserving_witness(rng, 3, 4)
Y = clean(general_transform(X, w))
print("\nnnz before/after:", nnz(X), nnz(Y))
print("reports equal:", similarity_invariants(X) == similarity_invariants(Y))

# Diagonality is rigid for order >= 3: a tensor similar to a diagonal tensor
# is itself diagonal (for matrices this is famously false).
D = diagonal_tensor(3, [1.0, -2.0])
out = clean(general_transform(D, random_unit_preserving_witness(rng, 3, 2)))
print("\ndiagonal stays diagonal:", is_diagonal(out))

# Triangularizability of the zero pattern is decidable by exhaustive search
# over relabelings; a None certifies that no relabeling works, so the tensor
# is not similar to any upper triangular tensor.
cyc = np.zeros((2, 2, 2), dtype=complex)
cyc[0, 1, 1] = 1.0
cyc[1, 0, 0] = 1.0
print("\ncyclic two-entry pattern triangularizable:",
      triangularizable_pattern(Tensor(cyc)) is not None)
single = np.zeros((2, 2, 2), dtype=complex)
single[1, 0, 0] = 1.0
print("single lower entry becomes triangular via sigma =",
      triangularizable_pattern(Tensor(single)).images)

# The pattern itself transforms by pure relabeling.
sigma = decompose_witness(w).sigma
print("\npattern of Y equals relabeled pattern of X:",
      zero_pattern(Y) == permutation_transform(zero_pattern(X), sigma.inverse()))
