"""Characteristic polynomials and spectra at dimension 2.

The eigen equation A x^(m-1) = lambda x^[m-1] turns, at dimension 2, into a
pair of binary forms whose resultant is the characteristic polynomial: a
degree 2(m-1) polynomial whose roots (with multiplicity) form the spectrum.
Similar tensors share it up to a nonzero constant factor.
"""

import numpy as np

from tensim import (
    char_poly_dim2,
    charpolys_equivalent,
    diagonal_tensor,
    eigen_residual,
    eigenvector_dim2,
    spectrum_dim2,
    structured_transform,
    unit_tensor,
)
from tensim.generate import random_structured_witness, random_tensor
from tensim.spectral import charpoly_distance

# The unit tensor of order 3: phi = (lambda - 1)^4, spectrum {1, 1, 1, 1}.
I3 = unit_tensor(3, 2)
cp = char_poly_dim2(I3)
print("degree:", cp.degree)
print("spectrum of the unit tensor:", np.round(spectrum_dim2(I3), 8).tolist())

# Diagonal tensors: each diagonal value is an eigenvalue with multiplicity
# m - 1, so phi = ((lambda - 2)(lambda - 3))^2 here.
D = diagonal_tensor(3, [2.0, 3.0])
print("\nspectrum of diag(2, 3):", np.round(spectrum_dim2(D), 8).tolist())

# Similarity invariance: transform by a random witness with heavy scalings
# and compare the polynomials up to a constant factor.
rng = np.random.default_rng(11)
A = random_tensor(rng, 4, 2)
s = random_structured_witness(rng, 4, 2)
B = structured_transform(A, s)
pa, pb = char_poly_dim2(A), char_poly_dim2(B)
print("\npolynomials proportional:", charpolys_equivalent(pa, pb))
print("coefficientwise distance after normalization:", charpoly_distance(pa, pb))

# Spot-check a computed eigenvalue by recovering an eigenvector and
# measuring the residual of the eigen equation.
lam = spectrum_dim2(A)[0]
x = eigenvector_dim2(A, lam)
print("\nresidual at a computed eigenpair:", eigen_residual(A, lam, x))

# Order 2 falls back to the classical matrix characteristic polynomial.
from tensim import Tensor

M = Tensor([[0.0, 1.0], [1.0, 0.0]])
print("\nmatrix [[0,1],[1,0]] spectrum:", np.round(spectrum_dim2(M), 12).tolist())
