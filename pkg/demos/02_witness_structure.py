"""What a similarity witness looks like for order >= 3.

A witness is a matrix pair (P, Q) with P I Q = I.  For matrices (order 2)
that just means Q = P^(-1), and there are many such pairs.  For order >= 3
the structure collapses: Q must be a diagonal matrix times a permutation,
and P is then forced.  This demo builds witnesses both ways and round-trips
between the two representations.
"""

import numpy as np

from tensim import (
    DiagonalScaling,
    Permutation,
    StructuredWitness,
    Tensor,
    Witness,
    check_unit_preserving,
    compose_witness,
    decompose_witness,
    is_generalized_permutation,
    witness_products,
    witness_structure_report,
)

# Build a witness from its canonical data: the swap permutation and the
# scaling diag(2, 3), intended for order-3 tensors.
s = StructuredWitness(Permutation((2, 1)), DiagonalScaling([2.0, 3.0]), 3)
w = compose_witness(s)
print("Q = D R_sigma:")
print(w.q.data.real)
print("P = R_sigma^T D^(1-m):")
print(w.p.data.real)
print("unit preserving:", check_unit_preserving(w))

# Every unit-preserving pair has exactly one nonzero per row and column.
print("Q, P are generalized permutation matrices:",
      is_generalized_permutation(w.q), is_generalized_permutation(w.p))

# Recover the canonical form from the matrices alone.
back = decompose_witness(w)
print("\nrecovered sigma:", back.sigma.images, " d:", back.d.values.real)

# The two structural identities every witness satisfies: the image I Q has
# zeros off the constant-tail positions, and P inverts its majorization
# matrix.  The report runs both checks.
report = witness_structure_report(w)
print("\nstructure report:", report.to_dict())

# A pair that is NOT unit preserving fails visibly.
t = Tensor([[1.0, 1.0], [0.0, 1.0]])
bad = Witness(t, t, 3)
bad_report = witness_structure_report(bad)
print("bad pair tail_zero_ok:", bad_report.tail_ok,
      " (the entry at (1,1,2) survives with value", bad_report.tail_max, ")")

# For order m >= 3 the products Q P and P Q are not the identity but
# diagonal matrices, namely powers of D.
qp, pq = witness_products(w)
print("\nQ P =", np.round(qp.data.real, 6).tolist(), " (this is D^(2-m))")
print("P Q =", np.round(pq.data.real, 6).tolist())

# With complex scalings everything still works; recovery is exact.
sc = StructuredWitness(
    Permutation((3, 1, 2)), DiagonalScaling([1 + 1j, 0.5, -2j]), 4
)
print("\ncomplex roundtrip d:", decompose_witness(compose_witness(sc)).d.values)
