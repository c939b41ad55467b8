"""Random tensors and witnesses for experiments and tests.

Everything is deterministic given the ``numpy.random.Generator`` passed in.
"""

from __future__ import annotations

import numpy as np

from .core import Tensor
from .similarity import (
    DiagonalScaling,
    Permutation,
    StructuredWitness,
    Witness,
    compose_witness,
)


def random_tensor(
    rng: np.random.Generator,
    order: int,
    dim: int,
    density: float = 1.0,
    magnitude_range: tuple[float, float] = (0.3, 2.0),
    real: bool = False,
) -> Tensor:
    """Dense tensor whose entries are nonzero with probability ``density``.

    Nonzero magnitudes are uniform in ``magnitude_range`` (bounded away from
    zero so that cleaning thresholds never clip an honest entry), with
    uniform phases unless ``real`` is set.
    """
    shape = (dim,) * order
    mags = rng.uniform(*magnitude_range, size=shape)
    if real:
        values = mags * rng.choice([-1.0, 1.0], size=shape)
        values = values.astype(np.complex128)
    else:
        values = mags * np.exp(2j * np.pi * rng.uniform(size=shape))
    mask = rng.uniform(size=shape) < density
    values[~mask] = 0.0
    return Tensor(values)


def random_permutation(rng: np.random.Generator, n: int) -> Permutation:
    return Permutation(tuple(int(v) + 1 for v in rng.permutation(n)))


def random_diagonal(
    rng: np.random.Generator,
    n: int,
    magnitude_range: tuple[float, float] = (0.1, 10.0),
) -> DiagonalScaling:
    """Diagonal entries with log-uniform magnitudes and uniform phases."""
    lo, hi = np.log(magnitude_range[0]), np.log(magnitude_range[1])
    mags = np.exp(rng.uniform(lo, hi, size=n))
    phases = np.exp(2j * np.pi * rng.uniform(size=n))
    return DiagonalScaling(mags * phases)


def random_structured_witness(
    rng: np.random.Generator,
    m: int,
    n: int,
    magnitude_range: tuple[float, float] = (0.1, 10.0),
) -> StructuredWitness:
    return StructuredWitness(
        random_permutation(rng, n), random_diagonal(rng, n, magnitude_range), m
    )


def random_unit_preserving_witness(
    rng: np.random.Generator,
    m: int,
    n: int,
    magnitude_range: tuple[float, float] = (0.1, 10.0),
) -> Witness:
    return compose_witness(random_structured_witness(rng, m, n, magnitude_range))
