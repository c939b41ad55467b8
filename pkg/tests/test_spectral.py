import cmath

import numpy as np
import pytest

from tensim import (
    CharPoly,
    OrderError,
    ShapeError,
    Tensor,
    UnsupportedDimensionError,
    char_poly_dim2,
    charpolys_equivalent,
    diagonal_tensor,
    eigen_residual,
    eigenvector_dim2,
    spectra_match,
    spectrum_dim2,
    structured_transform,
    unit_tensor,
)
from tensim.generate import random_structured_witness, random_tensor
from tensim.spectral import charpoly_distance


def poly_from_roots(roots):
    coeffs = np.poly(np.asarray(roots, dtype=complex))[::-1]
    return CharPoly(tuple(complex(c) for c in coeffs))


class TestCharPolyFrozen:
    def test_unit_tensor_order3(self):
        # oracle: Sylvester matrix is diagonal with entries (1 - lambda),
        # so phi = (1 - lambda)^4, i.e. (lambda - 1)^4 up to normalization
        cp = char_poly_dim2(unit_tensor(3, 2))
        assert cp.degree == 4
        assert charpoly_distance(cp, CharPoly((1, -4, 6, -4, 1))) < 1e-12

    def test_diagonal_order3(self):
        # oracle: resultant of (d1 - lambda) x1^2 and (d2 - lambda) x2^2
        # factors as ((lambda - d1)(lambda - d2))^2; expanded by hand
        cp = char_poly_dim2(diagonal_tensor(3, [2, 3]))
        assert charpoly_distance(cp, CharPoly((36, -60, 37, -10, 1))) < 1e-12

    def test_zero_tensor(self):
        cp = char_poly_dim2(Tensor(np.zeros((2, 2, 2))))
        assert charpoly_distance(cp, CharPoly((0, 0, 0, 0, 1))) < 1e-12

    def test_order2_delegates_to_matrix(self):
        cp = char_poly_dim2(Tensor([[1, 2], [0, 1]]))
        assert cp.degree == 2
        assert np.allclose(cp.coeffs, [1, -2, 1])

    def test_degree_law(self):
        rng = np.random.default_rng(0)
        for m in (3, 4, 5):
            cp = char_poly_dim2(random_tensor(rng, m, 2))
            assert cp.degree == 2 * (m - 1)
            assert len(cp.coeffs) == 2 * m - 1
            assert abs(cp.coeffs[-1]) > 1e-8  # leading resultant coefficient

    def test_rejects_other_dims(self):
        with pytest.raises(UnsupportedDimensionError):
            char_poly_dim2(unit_tensor(3, 3))

    def test_rejects_vectors(self):
        with pytest.raises(OrderError):
            char_poly_dim2(Tensor([1.0, 2.0]))


class TestSimilarityInvariance:
    def test_random_witness_pairs(self):
        rng = np.random.default_rng(1)
        for _ in range(50):
            m = int(rng.choice([3, 4]))
            a = random_tensor(rng, m, 2)
            s = random_structured_witness(rng, m, 2)
            b = structured_transform(a, s)
            assert charpolys_equivalent(char_poly_dim2(a), char_poly_dim2(b), rtol=1e-7)

    def test_spectra_agree_too(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            m = int(rng.choice([3, 4]))
            a = random_tensor(rng, m, 2)
            s = random_structured_witness(rng, m, 2)
            b = structured_transform(a, s)
            assert spectra_match(spectrum_dim2(a), spectrum_dim2(b), atol=1e-6)


class TestSpectrum:
    def test_unit_tensor_all_ones(self):
        spec = spectrum_dim2(unit_tensor(3, 2))
        assert spectra_match(spec, [1, 1, 1, 1], atol=1e-6)

    def test_diagonal_ground_truth_frozen(self):
        spec = spectrum_dim2(diagonal_tensor(3, [2, 3]))
        assert np.max(np.abs(np.asarray(spec) - [2, 2, 3, 3])) < 1e-8

    def test_diagonal_ground_truth_random(self):
        rng = np.random.default_rng(3)
        for _ in range(30):
            m = int(rng.choice([3, 4]))
            vals = np.exp(rng.uniform(np.log(0.1), np.log(10), 2))
            vals = vals * np.exp(2j * np.pi * rng.uniform(size=2))
            if abs(vals[0] - vals[1]) < 0.05 * (1 + max(abs(vals[0]), abs(vals[1]))):
                continue
            spec = spectrum_dim2(diagonal_tensor(m, vals))
            expected = sorted(
                [complex(vals[0])] * (m - 1) + [complex(vals[1])] * (m - 1),
                key=lambda z: (z.real, z.imag),
            )
            assert np.max(np.abs(np.asarray(spec) - expected)) < 1e-8

    def test_zero_tensor(self):
        spec = spectrum_dim2(Tensor(np.zeros((2, 2, 2))))
        assert spectra_match(spec, [0, 0, 0, 0], atol=1e-8)

    def test_multiplicity_count(self):
        rng = np.random.default_rng(4)
        for m in (3, 4):
            spec = spectrum_dim2(random_tensor(rng, m, 2))
            assert len(spec) == 2 * (m - 1)


class TestInterpolationSelfConsistency:
    def test_fresh_samples_match_determinant(self):
        from tensim.spectral import _binary_form_coeffs, _sylvester_det

        rng = np.random.default_rng(5)
        for _ in range(10):
            m = int(rng.choice([3, 4]))
            a = random_tensor(rng, m, 2)
            cp = char_poly_dim2(a)
            rho = cp.sample_radius
            forms = _binary_form_coeffs(a)
            p = m - 1
            for k in range(5):
                lam = rho * cmath.exp(2j * cmath.pi * (k + 0.37) / 5)
                f = forms[0].copy()
                g = forms[1].copy()
                f[0] -= lam
                g[p] -= lam
                direct = _sylvester_det(f, g)
                interpolated = cp(lam)
                assert abs(direct - interpolated) <= 1e-7 * max(1.0, abs(direct))


class TestEigenResidual:
    def test_unit_tensor(self):
        assert eigen_residual(unit_tensor(3, 2), 1.0, [1.0, 1.0]) == 0.0

    def test_decoupled_diagonal(self):
        assert eigen_residual(diagonal_tensor(3, [2, 3]), 2.0, [1.0, 0.0]) == 0.0

    def test_rejects_zero_vector(self):
        with pytest.raises(ShapeError):
            eigen_residual(unit_tensor(3, 2), 1.0, [0.0, 0.0])

    def test_back_substitution(self):
        rng = np.random.default_rng(6)
        for _ in range(20):
            m = int(rng.choice([3, 4]))
            a = random_tensor(rng, m, 2)
            spec = spectrum_dim2(a)
            lam = spec[int(rng.integers(len(spec)))]
            x = eigenvector_dim2(a, lam)
            assert eigen_residual(a, lam, x) < 1e-6


class TestComparisonHelpers:
    def test_scaled_polynomials_are_equivalent(self):
        p = CharPoly((1, 2, 3))
        q = CharPoly((2j, 4j, 6j))
        assert charpolys_equivalent(p, q, rtol=1e-12)

    def test_different_polynomials_are_not(self):
        assert not charpolys_equivalent(CharPoly((1, 2, 3)), CharPoly((1, 2, 4)), rtol=1e-6)

    def test_spectra_match_permutation_insensitive(self):
        assert spectra_match([1 + 1j, 2], [2, 1 + 1j])

    def test_spectra_match_detects_difference(self):
        assert not spectra_match([1.0, 2.0], [1.0, 2.1], atol=1e-6)

    def test_spectra_match_near_ties(self):
        # canonical sort flips the order of near-tied roots; the optimal
        # assignment check must still match them up
        a = [1.0 + 1e-9j, 1.0 - 1e-9j]
        b = [1.0 - 1e-9j, 1.0 + 1e-9j]
        assert spectra_match(a, b, atol=1e-6)
