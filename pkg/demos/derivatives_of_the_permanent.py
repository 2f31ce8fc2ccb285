"""Compute higher-order directional derivatives of the matrix permanent.

The permanent is a multilinear function of the matrix columns, so all of its
Frechet derivatives exist and can be written in closed form.  This script
evaluates the k-th derivative three independent ways and shows they agree:

  * replacing columns of A by columns of the direction matrices,
  * expanding over complementary minors of A,
  * a trace pairing of two symmetric tensor blocks.
"""

import math

import numpy as np

from permderiv import dkper, dper, padj, per

rng = np.random.default_rng(11)

n = 4
A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
X = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
Y = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))

print(f"per(A) = {per(A):.6f}")

# First derivative: a trace against the permanental adjoint, the analogue of
# Jacobi's formula for the determinant.
first = dper(A, X)
print(f"D per(A)(X)           = {first:.6f}")
print(f"tr(padj(A)^T X)       = {np.trace(padj(A).T @ X):.6f}")

# Second mixed derivative from all three closed forms.
for name, value in dkper(A, (X, Y), formula="all").items():
    print(f"D^2 per(A)(X, Y) [{name:>7s}] = {value:.6f}")

# At order k = n the derivative forgets A entirely:
# D^n per(A)(X, ..., X) = n! per(X).
top = dkper(A, (X,) * n)
print(f"D^{n} per(A)(X,..,X)  = {top:.6f}")
print(f"{n}! per(X)           = {math.factorial(n) * per(X):.6f}")
