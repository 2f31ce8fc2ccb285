"""Formula-independent ground truth for the derivative layer.

`mixed_partial_interp` extracts the coefficient of t_1...t_k from
phi(A + t_1 X^1 + ... + t_k X^k) by exact Lagrange interpolation on the
integer grid {0..d}^k, which equals the k-th mixed partial at 0.  It shares
the permanent/determinant evaluators with the library but none of the
closed-form derivative formulas.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import numpy as np

from .charpoly import g_r
from .permanent import per
from .scalars import ExactComplex, is_exact

MAX_ORDER = 8
MAX_N = 6


def _linear_coeff_weights(d: int) -> list[Fraction]:
    """Weights w_j with sum_j w_j f(j) = coefficient of t in the degree-d
    interpolant of f on nodes 0..d."""
    weights = []
    for j in range(d + 1):
        # L_j(t) = prod_{i != j} (t - i) / (j - i); take its t^1 coefficient
        coeffs = [Fraction(1)]  # polynomial in t, low to high degree
        denom = Fraction(1)
        for i in range(d + 1):
            if i == j:
                continue
            denom *= j - i
            new = [Fraction(0)] * (len(coeffs) + 1)
            for p, cp in enumerate(coeffs):
                new[p] += cp * (-i)
                new[p + 1] += cp
            coeffs = new
        weights.append((coeffs[1] if len(coeffs) > 1 else Fraction(0)) / denom)
    return weights


def _functional(phi, r):
    if callable(phi):
        return phi
    if phi == "per":
        return per
    if phi in ("gr", "g_r"):
        if r is None:
            raise ValueError("g_r selector requires r")
        return lambda M: g_r(M, r)
    raise ValueError(f"unknown functional selector {phi!r}")


def mixed_partial_interp(phi, A, directions, *, r: int | None = None, degree: int | None = None):
    """Mixed partial of phi(A + sum t_i X^i) in t_1..t_k at 0, by interpolation.

    phi is "per", "gr" (with r), or any callable polynomial functional of
    degree <= `degree` (defaults: n for per, r for gr).
    """
    A = np.asarray(A)
    n = A.shape[0]
    directions = tuple(np.asarray(X) for X in directions)
    k = len(directions)
    if k > MAX_ORDER:
        raise ValueError(f"interpolation oracle limited to order {MAX_ORDER}")
    if n > MAX_N:
        raise ValueError(f"interpolation oracle limited to n <= {MAX_N}")
    if degree is None:
        degree = n if (phi == "per" or callable(phi)) else (r if r is not None else n)
    func = _functional(phi, r)
    exact = is_exact(A)
    if exact:
        for X in directions:
            if not is_exact(X):
                raise ValueError("exact mode requires exact-mode directions")
    weights = _linear_coeff_weights(degree)
    total = ExactComplex(0) if exact else complex(0.0)
    for nodes in product(range(degree + 1), repeat=k):
        w = Fraction(1)
        for t in nodes:
            w *= weights[t]
        if w == 0:
            continue
        M = A
        for t, X in zip(nodes, directions):
            if t:
                M = M + t * X
        value = func(M)
        if exact:
            total = total + w * value
        else:
            total = total + float(w) * value
    return total


def finite_diff(phi, A, X, h: float, *, r: int | None = None):
    """Central difference (phi(A+hX) - phi(A-hX)) / 2h; error O(h^2)."""
    if h <= 0:
        raise ValueError("need h > 0")
    A = np.asarray(A, dtype=complex)
    X = np.asarray(X, dtype=complex)
    func = _functional(phi, r)
    return (func(A + h * X) - func(A - h * X)) / (2.0 * h)


def faddeev_leverrier(A) -> tuple[complex, ...]:
    """Characteristic-polynomial coefficients (g_1..g_n) via the trace recursion.

    With det(xI - A) = x^n + c_1 x^{n-1} + ... + c_n, the recursion is
    M_1 = A, c_1 = -tr A, M_{j+1} = A (M_j + c_j I), c_{j+1} = -tr M_{j+1}/(j+1),
    and g_r = (-1)^r c_r.
    """
    if is_exact(A):
        from .scalars import to_complex

        A = to_complex(A)
    else:
        A = np.asarray(A, dtype=complex)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("square matrix required")
    coeffs = []
    M = A.copy()
    c = -complex(np.trace(M))
    coeffs.append(-c)
    eye = np.eye(n, dtype=complex)
    for j in range(1, n):
        M = A @ (M + c * eye)
        c = -complex(np.trace(M)) / (j + 1)
        coeffs.append(c if (j + 1) % 2 == 0 else -c)
    return tuple(coeffs)
