"""Deciding similarity of order ``m >= 3`` tensors, plus pattern-level search.

The decision procedure rests on the structure of witnesses: every similarity
is a diagonal scaling followed by a relabeling.  So ``A`` and ``B`` are
similar iff some permutation matches their zero patterns and the induced
multiplicative system on the diagonal entries is solvable:

    for every nonzero position t of B, with j = sigma^{-1}(t):
        b[t] = a[j] * d_{j_1}^(1-m) * d_{j_2} * ... * d_{j_m}

Taking the entry ratio ``b[t] / a[j]`` turns each position into one monomial
constraint ``prod_j d_j^(e_j) = ratio`` whose integer exponents sum to zero
(the source of the global-scalar gauge freedom).  The solver eliminates the
exponent vectors over the integers, tracking the right-hand sides
multiplicatively (log-magnitude plus angle), back-substitutes with principal
roots, and then verifies the candidate by full reconstruction.  The
verification step, not the solve, is the acceptance authority.

Inputs are assumed to carry exact zeros; clean floating-point noise first
(see :func:`tensim.core.clean`).
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from itertools import permutations as _all_permutations
from typing import Iterator

import numpy as np

from .core import Tensor, is_diagonal, max_abs_diff, nnz, zero_pattern
from .errors import OrderError, SearchLimitError, ShapeError
from .similarity import (
    DiagonalScaling,
    Permutation,
    StructuredWitness,
    diagonal_transform,
    permutation_transform,
)

#: Maximum elementwise reconstruction error accepted by the decision, as a
#: multiple of max(1, |B|_inf).
DECISION_TOL = 1e-8

#: Zero rows of the eliminated constraint system must be this close to the
#: trivial relation; the final reconstruction check is the real authority.
_CONSISTENCY_TOL = 1e-6

_HASH_MAX_DIM = 8
_TRIANGULAR_MAX_DIM = 10


# ---------------------------------------------------------------------------
# Pattern matching
# ---------------------------------------------------------------------------


def _nonzero_tuples(z: Tensor) -> list[tuple[int, ...]]:
    return [tuple(int(c) for c in t) for t in np.argwhere(z.data != 0)]


def _check_binary_pattern(z: Tensor, name: str) -> None:
    vals = z.data[z.data != 0]
    if vals.size and not np.all(vals == 1):
        raise ShapeError(f"{name} is not a 0/1 pattern tensor")


def pattern_permutations(za: Tensor, zb: Tensor) -> Iterator[Permutation]:
    """Yield every ``pi`` relabeling ``za`` onto ``zb``, i.e. with
    ``zb[t] == za[pi(t_1), ..., pi(t_m)]`` for all positions ``t``.

    Backtracks over partial assignments in lexicographic order of the image
    tuple, pruning candidates whose per-vertex statistics disagree: the
    number of nonzeros led by the vertex, and the number of nonzero positions
    in which the vertex occurs among the trailing indices.
    """
    if za.shape != zb.shape:
        return
    _check_binary_pattern(za, "first pattern")
    _check_binary_pattern(zb, "second pattern")
    nz_a = set(_nonzero_tuples(za))
    nz_b = _nonzero_tuples(zb)
    if len(nz_a) != len(nz_b):
        return
    n = za.dim

    def stats(tuples) -> tuple[list[int], list[int]]:
        head = [0] * n
        tail = [0] * n
        for t in tuples:
            head[t[0]] += 1
            for v in set(t[1:]):
                tail[v] += 1
        return head, tail

    head_a, tail_a = stats(nz_a)
    head_b, tail_b = stats(nz_b)
    candidates = [
        [w for w in range(n) if head_a[w] == head_b[v] and tail_a[w] == tail_b[v]]
        for v in range(n)
    ]
    if any(not c for c in candidates):
        return

    assign: list[int | None] = [None] * n  # 0-based image of each 0-based label
    used = [False] * n

    def prefix_consistent(depth: int) -> bool:
        assigned = set(range(depth + 1))
        image = {assign[v] for v in assigned}
        mapped = 0
        for t in nz_b:
            if all(c in assigned for c in t):
                mapped += 1
                if tuple(assign[c] for c in t) not in nz_a:
                    return False
        induced = sum(1 for t in nz_a if all(c in image for c in t))
        return induced == mapped

    def extend(v: int) -> Iterator[Permutation]:
        if v == n:
            yield Permutation(tuple(int(w) + 1 for w in assign))
            return
        for w in candidates[v]:
            if used[w]:
                continue
            assign[v] = w
            used[w] = True
            if prefix_consistent(v):
                yield from extend(v + 1)
            assign[v] = None
            used[w] = False

    yield from extend(0)


# ---------------------------------------------------------------------------
# The multiplicative scaling system
# ---------------------------------------------------------------------------


@dataclass
class ScalingConstraint:
    """One monomial constraint ``prod_j d_j^(exponents[j]) = ratio``.

    The ratio is carried as ``(log_magnitude, angle)`` so that integer row
    operations stay exact in the exponents and additive on the right-hand
    side.  ``angle`` is meaningful modulo ``2*pi``.
    """

    exponents: list[int]
    log_magnitude: float
    angle: float


class ScalingConstraintSystem:
    """The constraint system tying two pattern-matched tensors' entries
    to the diagonal scaling unknowns (one unknown per index label of ``A``)."""

    def __init__(self, n: int):
        self.n = n
        self.constraints: list[ScalingConstraint] = []

    def add(self, exponents: list[int], ratio: complex) -> None:
        if sum(exponents) != 0:
            raise AssertionError(
                f"constraint exponents must sum to zero (gauge), got {exponents}"
            )
        self.constraints.append(
            ScalingConstraint(exponents, math.log(abs(ratio)), math.atan2(ratio.imag, ratio.real))
        )

    @classmethod
    def assemble(
        cls, a: Tensor, b: Tensor, sigma: Permutation
    ) -> "ScalingConstraintSystem | None":
        """Build the system for ``B = R_sigma^T (D^(1-m) A D) R_sigma``.

        Returns ``None`` when the zero patterns do not actually correspond
        under ``sigma`` (no system exists).
        """
        m, n = a.order, a.dim
        inv = sigma.inverse().zero_based()
        pos_b = np.argwhere(b.data != 0)
        if pos_b.shape[0] != int(np.count_nonzero(a.data)):
            return None
        system = cls(n)
        for t in pos_b:
            j = tuple(int(inv[c]) for c in t)
            a_val = complex(a.data[j])
            if a_val == 0:
                return None
            exps = [0] * n
            exps[j[0]] += 1 - m
            for c in j[1:]:
                exps[c] += 1
            system.add(exps, complex(b.data[tuple(int(c) for c in t)]) / a_val)
        return system


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with x*a + y*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _combine(
    s: int, row_a: ScalingConstraint, t: int, row_b: ScalingConstraint
) -> ScalingConstraint:
    exps = [s * ea + t * eb for ea, eb in zip(row_a.exponents, row_b.exponents)]
    return ScalingConstraint(
        exps,
        s * row_a.log_magnitude + t * row_b.log_magnitude,
        s * row_a.angle + t * row_b.angle,
    )


def _wrapped_angle(angle: float) -> float:
    """Representative of ``angle`` modulo ``2*pi`` in ``(-pi, pi]``."""
    w = math.remainder(angle, 2.0 * math.pi)
    return w


def _eliminate(
    system: ScalingConstraintSystem, consistency_tol: float
) -> dict[int, ScalingConstraint] | None:
    """Integer echelon form of the exponent rows with exact rhs tracking.

    Returns the pivot rows keyed by pivot column, or ``None`` when a row
    reduces to the zero vector with a right-hand side detectably away from 1
    (the system has no solution).
    """
    basis: dict[int, ScalingConstraint] = {}
    for row in system.constraints:
        row = ScalingConstraint(list(row.exponents), row.log_magnitude, row.angle)
        while True:
            pivot = next((j for j, e in enumerate(row.exponents) if e != 0), None)
            if pivot is None:
                if abs(row.log_magnitude) > consistency_tol:
                    return None
                if abs(_wrapped_angle(row.angle)) > consistency_tol:
                    return None
                break
            if pivot not in basis:
                basis[pivot] = row
                break
            base = basis[pivot]
            a, b = base.exponents[pivot], row.exponents[pivot]
            g, x, y = _ext_gcd(a, b)
            new_base = _combine(x, base, y, row)
            new_row = _combine(a // g, row, -(b // g), base)
            basis[pivot] = new_base
            row = new_row
    return basis


def solve_diagonal(
    a: Tensor, b: Tensor, sigma: Permutation, rtol: float = DECISION_TOL
) -> DiagonalScaling | None:
    """Find ``d`` with ``B = R_sigma^T (D^(1-m) A D) R_sigma`` or ``None``.

    Unknowns not pinned by any constraint (one per connected component of
    the constraint graph, thanks to the zero-sum gauge) are set to 1; an
    empty system therefore returns the identity scaling.  The candidate is
    accepted only if full reconstruction matches ``b`` within ``rtol``
    relative error on every nonzero entry, which also absorbs the branch
    ambiguity of the principal roots taken during back-substitution.
    """
    if a.order < 3:
        raise OrderError("diagonal solve applies to order >= 3")
    if a.shape != b.shape:
        raise ShapeError("tensors must share order and dimension")
    if sigma.n != a.dim:
        raise ShapeError("permutation size does not match tensor dimension")
    system = ScalingConstraintSystem.assemble(a, b, sigma)
    if system is None:
        return None
    basis = _eliminate(system, _CONSISTENCY_TOL)
    if basis is None:
        return None
    e = np.zeros(a.dim, dtype=np.complex128)
    for j in sorted(basis, reverse=True):
        row = basis[j]
        rest = sum(row.exponents[k] * e[k] for k in range(j + 1, a.dim) if row.exponents[k])
        rhs = complex(row.log_magnitude, _wrapped_angle(row.angle)) - rest
        e[j] = rhs / row.exponents[j]
    scaling = DiagonalScaling(np.exp(e))
    reconstructed = permutation_transform(diagonal_transform(a, scaling), sigma.inverse())
    nz = b.data != 0
    if not np.array_equal(reconstructed.data != 0, nz):
        return None
    if nz.any():
        rel = np.abs(reconstructed.data[nz] - b.data[nz]) / np.abs(b.data[nz])
        if float(np.max(rel)) > rtol:
            return None
    return scaling


def decide_similar(a: Tensor, b: Tensor, rtol: float = DECISION_TOL) -> StructuredWitness | None:
    """Decide similarity of two order ``m >= 3`` tensors.

    Returns a structured witness whose transform reproduces ``b`` within
    ``rtol`` (times ``max(1, |B|_inf)`` elementwise), or ``None``.  The
    search enumerates pattern-matching permutations in lexicographic order
    and returns the first that also admits a diagonal scaling, so the result
    is deterministic.  Inputs must carry exact zeros.
    """
    if a.order != b.order or a.dim != b.dim:
        raise ShapeError("tensors must share order and dimension")
    if a.order < 3:
        raise OrderError("the decision procedure applies to order >= 3")
    za, zb = zero_pattern(a), zero_pattern(b)
    if nnz(za) != nnz(zb):
        return None
    scale = max(1.0, float(np.max(np.abs(b.data))))
    for pi in pattern_permutations(za, zb):
        sigma = pi.inverse()
        scaling = solve_diagonal(a, b, sigma, rtol)
        if scaling is None:
            continue
        witness = StructuredWitness(sigma, scaling, a.order)
        reconstructed = permutation_transform(diagonal_transform(a, scaling), pi)
        if max_abs_diff(reconstructed, b) <= rtol * scale:
            return witness
    return None


# ---------------------------------------------------------------------------
# Triangularizability and invariant reports
# ---------------------------------------------------------------------------


def triangularizable_pattern(a: Tensor) -> Permutation | None:
    """A permutation whose relabeling of ``Z(a)`` is upper triangular, or
    ``None`` when no permutation works.

    The search places labels position by position; a label may take the next
    position only once every label that must precede it (the head of some
    nonzero in whose tail it occurs) has been placed.  Exhausting the
    candidates therefore certifies a directed cycle among the labels, so no
    relabeling of the pattern is triangular; by the pattern invariance of
    similarity, the tensor is then not similar to any upper triangular
    tensor.  Returns the lexicographically first valid placement.
    """
    if a.order < 3:
        raise OrderError("triangular tensors are defined for order >= 3")
    n = a.dim
    if n > _TRIANGULAR_MAX_DIM:
        raise SearchLimitError(f"exhaustive search refused for dim > {_TRIANGULAR_MAX_DIM}")
    preds: list[set[int]] = [set() for _ in range(n)]
    for t in np.argwhere(a.data != 0):
        head = int(t[0])
        for c in t[1:]:
            c = int(c)
            if c != head:
                preds[c].add(head)
    placed: list[int] = []
    done = [False] * n
    for _ in range(n):
        pick = next(
            (v for v in range(n) if not done[v] and all(done[p] for p in preds[v])),
            None,
        )
        if pick is None:
            return None
        done[pick] = True
        placed.append(pick + 1)
    return Permutation(tuple(placed))


@dataclass(frozen=True)
class InvariantReport:
    """Similarity-invariant summary of a tensor.

    Two similar tensors of order ``m >= 3`` produce equal reports.  Fields
    that would require an infeasible search are ``None`` with the matching
    ``*_omitted`` flag set.
    """

    order: int
    dim: int
    nnz: int
    is_diagonal: bool
    triangularizable: bool | None
    triangularizable_omitted: bool
    canonical_hash: str | None
    canonical_hash_omitted: bool

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "dim": self.dim,
            "nnz": self.nnz,
            "is_diagonal": self.is_diagonal,
            "triangularizable": self.triangularizable,
            "triangularizable_omitted": self.triangularizable_omitted,
            "canonical_hash": self.canonical_hash,
            "canonical_hash_omitted": self.canonical_hash_omitted,
        }


def canonical_pattern_hash(a: Tensor) -> str:
    """Hash of the lexicographically minimal relabeling of ``Z(a)``.

    Minimizes the row-major 0/1 encoding over all permutations; equal for
    any two tensors whose patterns are relabelings of each other.
    """
    if a.dim > _HASH_MAX_DIM:
        raise SearchLimitError(f"canonical hash refused for dim > {_HASH_MAX_DIM}")
    pattern = (a.data != 0).astype(np.uint8)
    best: bytes | None = None
    for images in _all_permutations(range(a.dim)):
        s0 = np.asarray(images, dtype=np.intp)
        relabeled = pattern[np.ix_(*([s0] * a.order))].tobytes()
        if best is None or relabeled < best:
            best = relabeled
    return hashlib.sha256(best).hexdigest()


def similarity_invariants(a: Tensor) -> InvariantReport:
    """Report of quantities preserved by every similarity (order ``m >= 3``):
    nonzero count, pattern class (as a canonical hash), diagonality, and
    whether any relabeling of the pattern is upper triangular."""
    tri: bool | None = None
    tri_omitted = True
    if a.order >= 3 and a.dim <= _TRIANGULAR_MAX_DIM:
        tri = triangularizable_pattern(a) is not None
        tri_omitted = False
    chash: str | None = None
    hash_omitted = True
    if a.dim <= _HASH_MAX_DIM:
        chash = canonical_pattern_hash(a)
        hash_omitted = False
    return InvariantReport(
        order=a.order,
        dim=a.dim,
        nnz=nnz(a),
        is_diagonal=is_diagonal(a) if a.order >= 2 else False,
        triangularizable=tri,
        triangularizable_omitted=tri_omitted,
        canonical_hash=chash,
        canonical_hash_omitted=hash_omitted,
    )
