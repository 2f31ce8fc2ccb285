"""Characteristic-polynomial coefficients g_r and their derivatives.

g_r(A) is the sum of r x r principal minors; det(xI - A) =
x^n - g_1 x^{n-1} + ... + (-1)^n g_n.  The derivative formulas are the
determinant analogues of the permanent ones, applied inside every
principal restriction A_I and summed over I in Q_{r,n}.

Sign weights |J| in the signed-minor form are computed after relabelling
the restriction's rows/columns to 1..r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .multiindex import (
    MultiIndex,
    enumerate_strict,
    index_weight,
    permutations_of,
)
from .permanent import minor_complement, submatrix
from .scalars import ExactComplex, is_exact, zeros_like_mode
from .tensor import (
    block_trace,
    det,
    det_batch,
    mixed_antisym_projected,
    tilde_antisym_block,
)


@dataclass(frozen=True)
class CharPolyCoefficients:
    """The coefficients (g_1, ..., g_n); g_1 = tr A, g_n = det A."""

    g: tuple

    def __iter__(self):
        return iter(self.g)

    def __len__(self):
        return len(self.g)

    def __getitem__(self, r: int):
        """1-based access: coefficients[r] is g_r."""
        if not 1 <= r <= len(self.g):
            raise IndexError(f"r must be in [1..{len(self.g)}]")
        return self.g[r - 1]


@dataclass(frozen=True)
class PrincipalRestriction:
    """A principal submatrix A[I|I] together with its index set."""

    I: MultiIndex
    value: np.ndarray


def principal_restrictions(A, r: int) -> tuple[PrincipalRestriction, ...]:
    """All r x r principal restrictions of A, in lexicographic I order."""
    A = _square(A)
    return tuple(
        PrincipalRestriction(I, submatrix(A, I, I))
        for I in enumerate_strict(r, A.shape[0])
    )


def g_r(A, r: int):
    """Sum of the r x r principal minors of A."""
    A = _square(A)
    n = A.shape[0]
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= {n}")
    if is_exact(A):
        total = ExactComplex(0)
        for I in enumerate_strict(r, n):
            total = total + det(submatrix(A, I, I))
        return total
    Ac = A.astype(complex)
    strict = enumerate_strict(r, n)
    blocks = np.stack([submatrix(Ac, I, I) for I in strict])
    return complex(det_batch(blocks).sum())


def charpoly_all(A) -> CharPolyCoefficients:
    """All coefficients (g_1, ..., g_n) via principal-minor sums."""
    A = _square(A)
    n = A.shape[0]
    return CharPolyCoefficients(tuple(g_r(A, r) for r in range(1, n + 1)))


def dk_gr_columns(A, directions, k: int, r: int):
    """Column-replacement form, summed over principal restrictions."""
    A, directions, n = _validate(A, directions, k, r)
    if k > r:
        return _zero(A)
    sigmas = permutations_of(k)
    inner = enumerate_strict(k, r)
    total = None
    for rest in principal_restrictions(A, r):
        AI = rest.value
        XIs = [submatrix(np.asarray(X), rest.I, rest.I) for X in directions]
        if not is_exact(A):
            stack = np.empty((len(sigmas) * len(inner), r, r), dtype=complex)
            pos = 0
            for sigma in sigmas:
                for J in inner:
                    Z = AI.astype(complex).copy()
                    for p, jp in enumerate(J.zero_based()):
                        Z[:, jp] = XIs[sigma[p]][:, jp]
                    stack[pos] = Z
                    pos += 1
            term = complex(det_batch(stack).sum())
        else:
            term = ExactComplex(0)
            for sigma in sigmas:
                for J in inner:
                    Z = AI.copy()
                    for p, jp in enumerate(J.zero_based()):
                        Z[:, jp] = XIs[sigma[p]][:, jp]
                    term = term + det(Z)
        total = term if total is None else total + term
    return total if total is not None else _zero(A)


def dk_gr_minors(A, directions, k: int, r: int):
    """Signed complementary-minor form inside every principal restriction."""
    A, directions, n = _validate(A, directions, k, r)
    if k > r:
        return _zero(A)
    sigmas = permutations_of(k)
    inner = enumerate_strict(k, r)
    total = None
    for rest in principal_restrictions(A, r):
        AI = rest.value
        XIs = [submatrix(np.asarray(X), rest.I, rest.I) for X in directions]
        term = None
        for J in inner:
            cj = J.zero_based()
            for K in inner:
                rk = K.zero_based()
                comp = det(minor_complement(AI, K, J))
                sign = -1 if (index_weight(J) + index_weight(K)) % 2 else 1
                for sigma in sigmas:
                    if is_exact(A):
                        block = zeros_like_mode(A, (k, k))
                    else:
                        block = np.empty((k, k), dtype=complex)
                    for l in range(k):
                        for m in range(k):
                            block[l, m] = XIs[sigma[m]][rk[l], cj[m]]
                    piece = comp * det(block)
                    piece = -piece if sign < 0 else piece
                    term = piece if term is None else term + piece
        if term is not None:
            total = term if total is None else total + term
    return total if total is not None else _zero(A)


def dk_gr_tensor(A, directions, k: int, r: int):
    """Tensor-trace form: k! sum_I tr(tilde-antisym(A_I) * X^1_I ^...^ X^k_I)."""
    A, directions, n = _validate(A, directions, k, r)
    if k > r:
        return _zero(A)
    total = None
    for rest in principal_restrictions(A, r):
        XIs = tuple(submatrix(np.asarray(X), rest.I, rest.I) for X in directions)
        tilde = tilde_antisym_block(rest.value, k)
        mixed = mixed_antisym_projected(XIs)
        term = block_trace(tilde, mixed)
        total = term if total is None else total + term
    if total is None:
        return _zero(A)
    return math.factorial(k) * total


def dk_gr(A, directions, k: int, r: int, formula: str = "columns"):
    """Dispatch on the formula selector; "all" returns a dict of all three."""
    if formula == "columns":
        return dk_gr_columns(A, directions, k, r)
    if formula == "minors":
        return dk_gr_minors(A, directions, k, r)
    if formula == "tensor":
        return dk_gr_tensor(A, directions, k, r)
    if formula == "all":
        return {
            "columns": dk_gr_columns(A, directions, k, r),
            "minors": dk_gr_minors(A, directions, k, r),
            "tensor": dk_gr_tensor(A, directions, k, r),
        }
    raise ValueError(f"unknown formula {formula!r}")


def _validate(A, directions, k, r):
    A = _square(A)
    n = A.shape[0]
    directions = tuple(directions)
    if len(directions) != k:
        raise ValueError(f"expected {k} directions, got {len(directions)}")
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= {n}")
    if k < 1:
        raise ValueError("need k >= 1")
    for X in directions:
        if np.asarray(X).shape != A.shape:
            raise ValueError("directions must match the order of A")
    return A, directions, n


def _square(A):
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"square matrix required, got shape {A.shape}")
    return A


def _zero(A):
    return ExactComplex(0) if is_exact(A) else complex(0.0)
