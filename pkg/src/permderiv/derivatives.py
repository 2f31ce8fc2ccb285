"""The three closed forms for higher-order derivatives of the permanent.

All three take an ordered direction tuple (X^1, ..., X^k); the value is
symmetric in the directions and linear in each slot.  k > n gives 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .multiindex import MultiIndex, enumerate_strict, permutations_of
from .permanent import (
    ReplacementSpec,
    column_replace,
    minor_complement,
    padj,
    per,
    per_batch,
    sigma_columns,
    submatrix,
)
from .scalars import ExactComplex, is_exact
from .tensor import block_trace, mixed_sym_projected, tilde_sym_block

FORMULAS = ("columns", "minors", "tensor")

# When True (and assertions are enabled), dper cross-checks its three
# first-order forms on every call.
CHECK_FIRST_ORDER = True


@dataclass(frozen=True)
class DerivativeRequest:
    """A matrix, an ordered direction tuple, and a formula selector."""

    A: np.ndarray
    directions: tuple
    formula: str = "columns"

    def __post_init__(self):
        A = np.asarray(self.A)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError(f"square matrix required, got shape {A.shape}")
        for X in self.directions:
            if np.asarray(X).shape != A.shape:
                raise ValueError("directions must match the order of A")
        if self.formula not in FORMULAS + ("all",):
            raise ValueError(f"unknown formula {self.formula!r}")

    @property
    def order(self) -> int:
        return len(self.directions)


def dper(A, X):
    """First derivative of per at A in direction X: tr(padj(A)^T X)."""
    A = np.asarray(A)
    X = np.asarray(X)
    if X.shape != A.shape:
        raise ValueError("direction must match the order of A")
    P = padj(A)
    value = _sum(P[i, j] * X[i, j] for i in range(A.shape[0]) for j in range(A.shape[1]))
    if CHECK_FIRST_ORDER and __debug__:
        by_columns = _sum(
            per(column_replace(A, ReplacementSpec(MultiIndex((j + 1,)), (X,))))
            for j in range(A.shape[0])
        )
        by_minors = _sum(
            X[i, j] * per(minor_complement(A, MultiIndex((i + 1,)), MultiIndex((j + 1,))))
            for i in range(A.shape[0])
            for j in range(A.shape[1])
        )
        assert _close(value, by_columns) and _close(value, by_minors), (
            "first-order forms disagree"
        )
    return value


def dkper_columns(req: DerivativeRequest):
    """Column-replacement form: sum over sigma and J of per A(J; X^sigma)."""
    A = np.asarray(req.A)
    n = A.shape[0]
    k = req.order
    if k == 0:
        return per(A)
    strict = enumerate_strict(k, n) if k <= n else ()
    if not strict:
        return _zero(A)
    sigmas = permutations_of(k)
    if not is_exact(A):
        Ac = A.astype(complex)
        Xs = [np.asarray(X, dtype=complex) for X in req.directions]
        stack = np.empty((len(sigmas) * len(strict), n, n), dtype=complex)
        pos = 0
        for sigma in sigmas:
            for J in strict:
                Z = Ac.copy()
                for p, jp in enumerate(J.zero_based()):
                    Z[:, jp] = Xs[sigma[p]][:, jp]
                stack[pos] = Z
                pos += 1
        return complex(per_batch(stack).sum())
    total = ExactComplex(0)
    for sigma in sigmas:
        ordered = tuple(req.directions[sigma[p]] for p in range(k))
        for J in strict:
            total = total + per(column_replace(A, ReplacementSpec(J, ordered)))
    return total


def dkper_minors(req: DerivativeRequest):
    """Minor-expansion form: sum of per A(I|J) * per Y^sigma_[J] [I|J]."""
    A = np.asarray(req.A)
    n = A.shape[0]
    k = req.order
    if k == 0:
        return per(A)
    if k > n:
        return _zero(A)
    strict = enumerate_strict(k, n)
    sigmas = permutations_of(k)
    if not is_exact(A):
        Ac = A.astype(complex)
        Xs = np.stack([np.asarray(X, dtype=complex) for X in req.directions])
        rows = np.array([I.zero_based() for I in strict])
        cols = np.array([J.zero_based() for J in strict])
        C = len(strict)
        comps = np.empty((C, C, n - k, n - k), dtype=complex)
        for a, I in enumerate(strict):
            for b, J in enumerate(strict):
                comps[a, b] = minor_complement(Ac, I, J)
        per_comp = per_batch(comps)  # (C, C) indexed (I, J)
        total = 0.0 + 0.0j
        for sigma in sigmas:
            blocks = Xs[
                np.asarray(sigma)[None, None, None, :],
                rows[:, None, :, None],
                cols[None, :, None, :],
            ]
            total += (per_comp * per_batch(blocks)).sum()
        return complex(total)
    total = ExactComplex(0)
    for sigma in sigmas:
        for J in strict:
            spec = ReplacementSpec(J, req.directions)
            Y = sigma_columns(spec, sigma)
            for I in strict:
                total = total + per(minor_complement(A, I, J)) * per(submatrix(Y, I, J))
    return total


def dkper_tensor(req: DerivativeRequest):
    """Tensor-trace form: k! tr(tilde-block * mixed symmetric block)."""
    A = np.asarray(req.A)
    n = A.shape[0]
    k = req.order
    if k == 0:
        return per(A)
    if k > n:
        return _zero(A)
    tilde = tilde_sym_block(A, k)
    mixed = mixed_sym_projected(req.directions)
    return math.factorial(k) * block_trace(tilde, mixed)


def dkper(A, directions, formula: str = "columns"):
    """Dispatch on the formula selector; "all" returns a dict of all three."""
    req = DerivativeRequest(np.asarray(A), tuple(directions), formula)
    if formula == "columns":
        return dkper_columns(req)
    if formula == "minors":
        return dkper_minors(req)
    if formula == "tensor":
        return dkper_tensor(req)
    return {
        "columns": dkper_columns(req),
        "minors": dkper_minors(req),
        "tensor": dkper_tensor(req),
    }


def _zero(A):
    return ExactComplex(0) if is_exact(A) else complex(0.0)


def _sum(terms):
    total = None
    for t in terms:
        total = t if total is None else total + t
    return total


def _close(a, b, tol=1e-12):
    if isinstance(a, ExactComplex) or isinstance(b, ExactComplex):
        return a == b
    scale = max(abs(a), abs(b), 1.0)
    return abs(a - b) <= tol * scale
