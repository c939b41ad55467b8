"""Independent reference implementations used as test oracles.

Everything here is written against the defining formulas, as literal loops
or via a different algorithm than the library, so that the two routes can
disagree when one is wrong.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from tensim.core import Tensor


def naive_general_product(a: Tensor, b: Tensor) -> Tensor:
    """Literal summation of the product formula, one output entry at a time."""
    m, k, n = a.order, b.order, a.dim
    out_order = (m - 1) * (k - 1) + 1
    out = np.zeros((n,) * out_order, dtype=np.complex128)
    alphas = list(itertools.product(range(n), repeat=k - 1))
    for i in range(n):
        for alpha in itertools.product(alphas, repeat=m - 1):
            total = 0j
            for tail in itertools.product(range(n), repeat=m - 1):
                term = a.data[(i,) + tail]
                for t, it in enumerate(tail):
                    term *= b.data[(it,) + alpha[t]]
                total += term
            flat_alpha = tuple(c for block in alpha for c in block)
            out[(i,) + flat_alpha] = total
    return Tensor(out)


def naive_diagonal_transform(a: Tensor, d: np.ndarray) -> Tensor:
    """Closed form ``a * d_{i1}^(1-m) * d_{i2} ... d_{im}``, per entry."""
    m = a.order
    out = np.zeros_like(a.data)
    for idx in itertools.product(range(a.dim), repeat=m):
        factor = d[idx[0]] ** (1 - m)
        for c in idx[1:]:
            factor *= d[c]
        out[idx] = a.data[idx] * factor
    return Tensor(out)


def naive_relabel(a: Tensor, images: tuple[int, ...]) -> Tensor:
    """``B[t] = a[sigma(t)]`` with ``images`` the 1-based image list."""
    out = np.zeros_like(a.data)
    for idx in itertools.product(range(a.dim), repeat=a.order):
        out[idx] = a.data[tuple(images[c] - 1 for c in idx)]
    return Tensor(out)


# ---------------------------------------------------------------------------
# Brute-force similarity oracle
# ---------------------------------------------------------------------------


def _left_null_basis(rows: list[list[int]]) -> list[list[int]]:
    """Integer basis of ``{z : z^T C = 0}`` via row reduction with a tracked
    unimodular transform.  Exact (arbitrary-precision integers)."""
    t = len(rows)
    if t == 0:
        return []
    n = len(rows[0])
    c = [list(r) for r in rows]
    u = [[1 if i == j else 0 for j in range(t)] for i in range(t)]
    used = [False] * t
    for col in range(n):
        while True:
            nzr = [i for i in range(t) if not used[i] and c[i][col] != 0]
            if len(nzr) <= 1:
                break
            nzr.sort(key=lambda i: abs(c[i][col]))
            i0, i1 = nzr[0], nzr[1]
            q = c[i1][col] // c[i0][col]
            for j in range(n):
                c[i1][j] -= q * c[i0][j]
            for j in range(t):
                u[i1][j] -= q * u[i0][j]
        nzr = [i for i in range(t) if not used[i] and c[i][col] != 0]
        if nzr:
            used[nzr[0]] = True
    return [u[i] for i in range(t) if not used[i] and all(v == 0 for v in c[i])]


def oracle_similar(a: Tensor, b: Tensor, tol: float = 1e-6) -> bool:
    """Brute-force similarity decision for small inputs.

    Enumerates every permutation; for each pattern match, the diagonal
    scaling exists iff every integer relation among the constraint exponent
    vectors is satisfied by the entry ratios (the multiplicative system over
    nonzero complex numbers is solvable exactly when it is consistent on the
    relations).  Relations are checked in log-magnitude and angle, which is
    free of branch choices.
    """
    m, n = a.order, a.dim
    nz_a = {tuple(int(c) for c in t) for t in np.argwhere(a.data != 0)}
    nz_b = [tuple(int(c) for c in t) for t in np.argwhere(b.data != 0)]
    if a.shape != b.shape or len(nz_a) != len(nz_b):
        return False
    for images in itertools.permutations(range(n)):
        mapped = [tuple(images[c] for c in t) for t in nz_b]
        if any(t not in nz_a for t in mapped):
            continue
        rows: list[list[int]] = []
        ratios: list[complex] = []
        for t, j in zip(nz_b, mapped):
            exps = [0] * n
            exps[j[0]] += 1 - m
            for c in j[1:]:
                exps[c] += 1
            rows.append(exps)
            ratios.append(complex(b.data[t]) / complex(a.data[j]))
        log_mags = [math.log(abs(r)) for r in ratios]
        angles = [math.atan2(r.imag, r.real) for r in ratios]
        consistent = True
        for z in _left_null_basis(rows):
            mag = sum(zi * lm for zi, lm in zip(z, log_mags))
            ang = sum(zi * an for zi, an in zip(z, angles))
            if abs(mag) > tol or abs(math.remainder(ang, 2.0 * math.pi)) > tol:
                consistent = False
                break
        if consistent:
            return True
    return False
