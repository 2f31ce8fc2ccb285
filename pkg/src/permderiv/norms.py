"""Singular values, operator/trace norms, derivative norms, perturbation bounds.

The SVD is a one-sided Jacobi iteration on the complex matrix: column pairs
are orthogonalized by 2x2 unitary rotations until all inner products fall
below the convergence threshold.  Deterministic and dependency-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .charpoly import principal_restrictions
from .scalars import is_exact, to_complex

JACOBI_MAX_SWEEPS = 60
JACOBI_TOL = 1e-14


class SvdConvergenceError(RuntimeError):
    """One-sided Jacobi failed to converge; carries the off-diagonal residual."""

    def __init__(self, residual: float, sweeps: int):
        super().__init__(
            f"one-sided Jacobi did not converge in {sweeps} sweeps "
            f"(off-diagonal residual {residual:.3e})"
        )
        self.residual = residual
        self.sweeps = sweeps


@dataclass(frozen=True)
class SingularSpectrum:
    """Descending singular values with unitary factors: A = U diag(values) V."""

    values: np.ndarray
    left_factor: np.ndarray
    right_factor: np.ndarray

    def reconstruct(self) -> np.ndarray:
        m = self.left_factor.shape[0]
        n = self.right_factor.shape[1]
        S = np.zeros((m, n))
        r = min(m, n)
        S[:r, :r] = np.diag(self.values[:r])
        return self.left_factor @ S @ self.right_factor


@dataclass(frozen=True)
class BoundReport:
    """A norm or perturbation bound, optionally with an attaining witness."""

    value: float
    kind: str  # "upper" or "exact"
    witness: Optional[np.ndarray] = None


def svd(A) -> SingularSpectrum:
    """Complex SVD by one-sided Jacobi; A = U diag(s) V with U, V unitary."""
    A = to_complex(A) if is_exact(A) else np.asarray(A, dtype=complex)
    if A.ndim != 2:
        raise ValueError("svd expects a matrix")
    m, n = A.shape
    if m < n:
        flipped = svd(A.conj().T)
        return SingularSpectrum(
            flipped.values,
            flipped.right_factor.conj().T,
            flipped.left_factor.conj().T,
        )
    G = A.copy()
    Vacc = np.eye(n, dtype=complex)
    fro = np.linalg.norm(A)
    if fro == 0.0:
        return SingularSpectrum(np.zeros(n), np.eye(m, dtype=complex), np.eye(n, dtype=complex))
    tiny = (JACOBI_TOL * fro) ** 2
    converged = False
    off = 0.0
    for _ in range(JACOBI_MAX_SWEEPS):
        off = 0.0
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                gp = G[:, p]
                gq = G[:, q]
                a = float(np.real(gp.conj() @ gp))
                b = float(np.real(gq.conj() @ gq))
                c = complex(gp.conj() @ gq)
                ac = abs(c)
                scale = math.sqrt(a * b)
                if ac <= JACOBI_TOL * scale or ac <= tiny:
                    continue
                off = max(off, ac / scale)
                rotated = True
                phase = c / ac
                tau = (b - a) / (2.0 * ac)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                cs = 1.0 / math.hypot(1.0, t)
                sn = t * cs
                J = np.array(
                    [[cs, sn * phase], [-sn * np.conj(phase), cs]], dtype=complex
                )
                G[:, [p, q]] = G[:, [p, q]] @ J
                Vacc[:, [p, q]] = Vacc[:, [p, q]] @ J
        if not rotated:
            converged = True
            break
    if not converged:
        raise SvdConvergenceError(off, JACOBI_MAX_SWEEPS)
    s = np.linalg.norm(G, axis=0)
    order = np.argsort(-s, kind="stable")
    s = s[order]
    G = G[:, order]
    Vacc = Vacc[:, order]
    U = np.zeros((m, m), dtype=complex)
    cutoff = max(s[0], fro) * 1e-15 if s.size else 0.0
    good = []
    for j in range(n):
        if s[j] > cutoff:
            U[:, j] = G[:, j] / s[j]
            good.append(j)
        else:
            s[j] = 0.0
    _complete_unitary(U, good, m)
    return SingularSpectrum(s, U, Vacc.conj().T)


def _complete_unitary(U, good_cols, m):
    """Fill the non-populated columns of U with an orthonormal completion."""
    have = list(good_cols)
    missing = [j for j in range(m) if j not in have]
    if not missing:
        return
    basis = [U[:, j] for j in have]
    fill = iter(missing)
    for i in range(m):
        v = np.zeros(m, dtype=complex)
        v[i] = 1.0
        for u in basis:
            v = v - (u.conj() @ v) * u
        norm = np.linalg.norm(v)
        if norm > 1e-10:
            v = v / norm
            basis.append(v)
            try:
                U[:, next(fill)] = v
            except StopIteration:
                return


def singular_values(A) -> np.ndarray:
    return svd(A).values


def operator_norm(A) -> float:
    """Largest singular value."""
    return float(singular_values(A)[0])


def trace_norm(A) -> float:
    """Sum of singular values (dual of the operator norm)."""
    return float(singular_values(A).sum())


def trace_norm_witness(A) -> np.ndarray:
    """A unit-operator-norm X with |tr(A X^H)| = trace norm: X = U V."""
    spec = svd(A)
    return spec.left_factor[:, : spec.right_factor.shape[0]] @ spec.right_factor


def elementary_symmetric(k: int, values) -> float:
    """k-th elementary symmetric polynomial via the Newton triangle recurrence."""
    values = list(values)
    r = len(values)
    if not 0 <= k <= r:
        raise ValueError(f"need 0 <= k <= {r}")
    e = [1.0] + [0.0] * k
    for x in values:
        for j in range(min(k, len(e) - 1), 0, -1):
            e[j] = e[j] + x * e[j - 1]
    return e[k]


def dkper_norm_bound(A, k: int) -> BoundReport:
    """Upper bound k! C(n,k) ||A||^{n-k} for the norm of D^k per at A."""
    A = np.asarray(A)
    n = A.shape[0]
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}")
    norm = operator_norm(A)
    value = math.factorial(k) * math.comb(n, k) * norm ** (n - k)
    witness = None
    Ac = to_complex(A) if is_exact(A) else np.asarray(A, dtype=complex)
    if k == 1 and np.allclose(Ac, np.eye(n)):
        witness = np.eye(n, dtype=complex)  # dper(I, I) = n = bound
    return BoundReport(value, "upper", witness)


def per_perturb_bound(A, X) -> BoundReport:
    """Taylor bound: |per(A+X) - per A| <= sum_k C(n,k) ||A||^{n-k} ||X||^k."""
    A = np.asarray(A)
    X = np.asarray(X)
    if X.shape != A.shape:
        raise ValueError("A and X must have the same shape")
    n = A.shape[0]
    na = operator_norm(A)
    nx = operator_norm(X)
    value = sum(math.comb(n, k) * na ** (n - k) * nx**k for k in range(1, n + 1))
    return BoundReport(value, "upper")


def dk_gr_norm_exact(A, k: int, r: int) -> BoundReport:
    """Exact norm of D^k g_r: k! sum_I p_{r-k}(singular values of A_I)."""
    A = np.asarray(A)
    n = A.shape[0]
    if not 1 <= k <= r <= n:
        raise ValueError(f"need 1 <= k <= r <= {n}")
    total = 0.0
    for rest in principal_restrictions(A, r):
        s = singular_values(rest.value)
        total += elementary_symmetric(r - k, s)
    value = math.factorial(k) * total
    witness = None
    Ac = to_complex(A) if is_exact(A) else np.asarray(A, dtype=complex)
    if k == 1 and np.allclose(Ac, np.diag(np.diag(Ac))) and np.all(
        np.real(np.diag(Ac)) >= 0
    ) and np.allclose(np.imag(np.diag(Ac)), 0):
        # for nonnegative diagonal A the supremum is attained at X = I
        witness = np.eye(n, dtype=complex)
    return BoundReport(value, "exact", witness)


def gr_perturb_bound(A, X, r: int) -> BoundReport:
    """Sharp Taylor bound for g_r built from singular values of restrictions."""
    A = np.asarray(A)
    X = np.asarray(X)
    if X.shape != A.shape:
        raise ValueError("A and X must have the same shape")
    n = A.shape[0]
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= {n}")
    nx = operator_norm(X)
    value = 0.0
    for rest in principal_restrictions(A, r):
        s = singular_values(rest.value)
        for k in range(1, r + 1):
            value += elementary_symmetric(r - k, s) * nx**k
    return BoundReport(value, "upper")


def gr_perturb_bound_weak(A, X, r: int) -> BoundReport:
    """Weaker norm-only bound: sum_k C(n,r) C(r,k) ||A||^{r-k} ||X||^k.

    Dominates the sharp bound termwise, since each elementary symmetric
    polynomial p_{r-k} of the r singular values of a restriction is at most
    C(r,k) times the largest one raised to the r-k.
    """
    A = np.asarray(A)
    X = np.asarray(X)
    if X.shape != A.shape:
        raise ValueError("A and X must have the same shape")
    n = A.shape[0]
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= {n}")
    na = operator_norm(A)
    nx = operator_norm(X)
    value = sum(
        math.comb(n, r) * math.comb(r, k) * na ** (r - k) * nx**k
        for k in range(1, r + 1)
    )
    return BoundReport(value, "upper")
