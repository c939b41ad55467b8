"""The general tensor product, step by step.

An order-m tensor times an order-k tensor (same dimension n) contracts each
of the m-1 trailing slots of the left factor against the leading slot of the
right factor, giving order (m-1)(k-1)+1.  Matrices (k=2) act without changing
the order; vectors (k=1) collapse everything to a vector.
"""

import numpy as np

from tensim import (
    Tensor,
    apply_to_vector,
    general_product,
    majorization_matrix,
    nnz,
    unit_tensor,
)

# The unit tensor is the generalized Kronecker delta: ones exactly on the
# all-equal index positions.
I3 = unit_tensor(3, 2)
print("unit tensor of order 3, dim 2:", repr(I3))
print("nonzeros:", nnz(I3), "(one per diagonal position)")

# Multiplying the unit tensor by a matrix on the right produces entries
# q[i, j] * q[i, k]: each slot picks up one factor from row i.
Q = Tensor([[1, 2], [0, 1]])
IQ = general_product(I3, Q)
print("\n(I Q)[1, 1, 2] =", IQ.data[0, 0, 1], " (that is q11 * q12 = 2)")
print("(I Q)[1, 2, 2] =", IQ.data[0, 1, 1], " (that is q12^2     = 4)")

# The majorization matrix reads off the slice (i, j, j, ..., j); for I Q this
# collects the (m-1)-th powers of Q's entries.
print("\nmajorization matrix of I Q:")
print(majorization_matrix(IQ).data.real)

# Order arithmetic: order-3 times order-3 gives order (3-1)(3-1)+1 = 5.
rng = np.random.default_rng(0)
A = Tensor(rng.normal(size=(2, 2, 2)))
B = Tensor(rng.normal(size=(2, 2, 2)))
print("\norder of A B for two order-3 tensors:", general_product(A, B).order)

# A vector argument contracts all the way down: the unit tensor raises each
# component to the power m - 1.
x = np.array([1.0, 2.0])
print("\nI x for the order-3 unit tensor and x = (1, 2):", apply_to_vector(I3, x).real)

# The identity matrix really is an identity for the product.
eye = unit_tensor(2, 2)
print("\nI_matrix A == A:", general_product(eye, A) == A)
print("A I_matrix == A:", general_product(A, eye) == A)
