"""Symmetric / antisymmetric tensor-power blocks and their compressions.

Every block is materialized on the lexicographically ordered multi-index
basis.  Only the strict-index (compressed) blocks of the tilde operators
and mixed powers are ever built; the formulas never need the full ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .multiindex import (
    MultiIndex,
    enumerate_strict,
    enumerate_weak,
    index_weight,
    multiplicity,
    permutations_of,
)
from .permanent import per, per_batch, submatrix, minor_complement
from .scalars import is_exact, zeros_like_mode


@dataclass(frozen=True)
class TensorBlock:
    """A matrix indexed by ordered multi-index bases."""

    row_basis: tuple[MultiIndex, ...]
    col_basis: tuple[MultiIndex, ...]
    entries: np.ndarray
    flavor: str  # sym-full | sym-projected | antisym | tilde-sym | tilde-antisym | mixed

    def __post_init__(self):
        if self.entries.shape != (len(self.row_basis), len(self.col_basis)):
            raise ValueError("entry shape does not match the bases")


def det(A):
    """Determinant: fraction-free Bareiss in exact mode, LAPACK LU otherwise."""
    A = np.asarray(A)
    if A.shape[0] != A.shape[1]:
        raise ValueError("determinant requires a square matrix")
    if is_exact(A):
        return det_bareiss(A)
    if A.shape[0] == 0:
        return complex(1.0)
    return complex(np.linalg.det(A.astype(complex)))


def det_bareiss(A):
    """Fraction-free Bareiss elimination; exact for Gaussian-rational entries."""
    A = np.asarray(A)
    n = A.shape[0]
    from .scalars import ExactComplex

    if n == 0:
        return ExactComplex(1)
    M = [[A[i, j] for j in range(n)] for i in range(n)]
    sign = 1
    prev = ExactComplex(1)
    for i in range(n - 1):
        if not M[i][i]:
            for r in range(i + 1, n):
                if M[r][i]:
                    M[i], M[r] = M[r], M[i]
                    sign = -sign
                    break
            else:
                return ExactComplex(0)
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                M[r][c] = (M[r][c] * M[i][i] - M[r][i] * M[i][c]) / prev
        prev = M[i][i]
    result = M[n - 1][n - 1]
    return -result if sign < 0 else result


def det_batch(mats: np.ndarray) -> np.ndarray:
    """Determinants of a stack of k x k complex matrices."""
    mats = np.asarray(mats, dtype=complex)
    if mats.shape[-1] == 0:
        return np.ones(mats.shape[:-2], dtype=complex)
    return np.linalg.det(mats)


def sym_power(A, k: int) -> TensorBlock:
    """k-th symmetric tensor power on the weak-index basis.

    Entry (I, J) is (m(I) m(J))^{-1/2} per A[I|J].  Floating mode only
    (the normalization is irrational).
    """
    A = np.asarray(A, dtype=complex) if not is_exact(A) else A
    n = _order(A)
    if k < 1:
        raise ValueError("need k >= 1")
    basis = enumerate_weak(k, n)
    m = len(basis)
    entries = np.empty((m, m), dtype=complex)
    norms = np.array([math.sqrt(multiplicity(I)) for I in basis])
    blocks = np.empty((m, m, k, k), dtype=complex)
    Ac = np.asarray(A, dtype=complex) if is_exact(A) else A
    for a, I in enumerate(basis):
        for b, J in enumerate(basis):
            blocks[a, b] = _to_c(submatrix(Ac, I, J))
    entries = per_batch(blocks) / np.outer(norms, norms)
    return TensorBlock(basis, basis, entries, "sym-full")


def sym_power_projected(A, k: int) -> TensorBlock:
    """Compression of the k-th symmetric power to the strict-index basis."""
    n = _order(A)
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}")
    basis = enumerate_strict(k, n)
    entries = _map_blocks(A, basis, basis, submatrix, per)
    return TensorBlock(basis, basis, entries, "sym-projected")


def antisym_power(A, k: int) -> TensorBlock:
    """k-th antisymmetric (compound) power: entries det A[I|J] on Q_{k,n}."""
    n = _order(A)
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}")
    basis = enumerate_strict(k, n)
    entries = _map_blocks(A, basis, basis, submatrix, det)
    return TensorBlock(basis, basis, entries, "antisym")


def tilde_sym_block(A, k: int) -> TensorBlock:
    """Compressed complementary-permanent operator: (J, I) entry per A(I|J).

    At k = n the complement is empty and the single entry is per(empty) = 1.
    """
    n = _order(A)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= {n}")
    basis = enumerate_strict(k, n)
    entries = zeros_like_mode(A, (len(basis), len(basis)))
    for b, J in enumerate(basis):
        for a, I in enumerate(basis):
            entries[b, a] = per(minor_complement(A, I, J))
    return TensorBlock(basis, basis, entries, "tilde-sym")


def tilde_antisym_block(A, k: int) -> TensorBlock:
    """Compressed signed complementary-minor operator.

    (J, I) entry is (-1)^{|I|+|J|} det A(I|J).
    """
    n = _order(A)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= {n}")
    basis = enumerate_strict(k, n)
    entries = zeros_like_mode(A, (len(basis), len(basis)))
    for b, J in enumerate(basis):
        for a, I in enumerate(basis):
            val = det(minor_complement(A, I, J))
            if (index_weight(I) + index_weight(J)) % 2:
                val = -val
            entries[b, a] = val
    return TensorBlock(basis, basis, entries, "tilde-antisym")


def mixed_sym_projected(directions) -> TensorBlock:
    """Compressed symmetrized product X^1 v ... v X^k on Q_{k,n}.

    Entry (I, J) = (1/k!) sum_sigma per of the k x k matrix with (l, m)
    entry X^{sigma(m)}_{i_l j_m}.
    """
    return _mixed_block(directions, symmetric=True)


def mixed_antisym_projected(directions) -> TensorBlock:
    """Compressed antisymmetrized product X^1 ^ ... ^ X^k on Q_{k,n}."""
    return _mixed_block(directions, symmetric=False)


def _mixed_block(directions, symmetric: bool) -> TensorBlock:
    directions = tuple(directions)
    if not directions:
        raise ValueError("need at least one direction")
    k = len(directions)
    n = _order(directions[0])
    for X in directions:
        if np.asarray(X).shape != (n, n):
            raise ValueError("all directions must be square of the same order")
    if k > n:
        raise ValueError(f"need k <= {n}")
    basis = enumerate_strict(k, n)
    C = len(basis)
    exact = is_exact(directions[0])
    sigmas = permutations_of(k)
    kfact = math.factorial(k)

    if not exact:
        Xs = np.stack([np.asarray(X, dtype=complex) for X in directions])
        rows = np.array([I.zero_based() for I in basis])  # (C, k)
        cols = np.array([J.zero_based() for J in basis])
        acc = np.zeros((C, C), dtype=complex)
        evaluate = per_batch if symmetric else det_batch
        for sigma in sigmas:
            # blocks[a, b, l, m] = X[sigma[m]][rows[a, l], cols[b, m]]
            blocks = Xs[
                np.asarray(sigma)[None, None, None, :],
                rows[:, None, :, None],
                cols[None, :, None, :],
            ]
            acc += evaluate(blocks)
        entries = acc / kfact
    else:
        evaluate = per if symmetric else det
        entries = zeros_like_mode(directions[0], (C, C))
        from .scalars import exact_zeros, ExactComplex

        for a, I in enumerate(basis):
            ri = I.zero_based()
            for b, J in enumerate(basis):
                cj = J.zero_based()
                total = ExactComplex(0)
                for sigma in sigmas:
                    block = exact_zeros((k, k))
                    for l in range(k):
                        for m in range(k):
                            block[l, m] = directions[sigma[m]][ri[l], cj[m]]
                    total = total + evaluate(block)
                entries[a, b] = total / kfact
    return TensorBlock(basis, basis, entries, "mixed")


def block_trace(B: TensorBlock, C: TensorBlock):
    """tr(B.entries @ C.entries), mode-generic."""
    BE, CE = B.entries, C.entries
    if BE.shape[1] != CE.shape[0] or BE.shape[0] != CE.shape[1]:
        raise ValueError("incompatible block shapes for a trace product")
    total = None
    if BE.dtype != object and CE.dtype != object:
        return complex(np.trace(BE @ CE))
    for a in range(BE.shape[0]):
        for b in range(BE.shape[1]):
            term = BE[a, b] * CE[b, a]
            total = term if total is None else total + term
    return total


def _map_blocks(A, rows, cols, extract, evaluate):
    if is_exact(A):
        out = zeros_like_mode(A, (len(rows), len(cols)))
        for a, I in enumerate(rows):
            for b, J in enumerate(cols):
                out[a, b] = evaluate(extract(A, I, J))
        return out
    Ac = np.asarray(A, dtype=complex)
    k = len(rows[0]) if rows else 0
    blocks = np.empty((len(rows), len(cols), k, k), dtype=complex)
    for a, I in enumerate(rows):
        for b, J in enumerate(cols):
            blocks[a, b] = extract(Ac, I, J)
    if evaluate is per:
        return per_batch(blocks)
    return det_batch(blocks)


def _order(A) -> int:
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"square matrix required, got shape {A.shape}")
    return A.shape[0]


def _to_c(M):
    M = np.asarray(M)
    if M.dtype == object:
        from .scalars import to_complex

        return to_complex(M)
    return M.astype(complex)
