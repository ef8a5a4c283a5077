#!/usr/bin/env python3
"""QR of a Laurent polynomial matrix: paraunitary Q.

Matrices over R[z, z^-1] model convolutive filters.  The rotation engine
works directly on exponent-indexed coefficients; the resulting Q is
*paraunitary*: Q^H(z) Q(z) = I, which we spot-check by evaluating Q at
points on the unit circle.

Coefficient supports grow as rotations mix monomials, so a relative trim
threshold keeps elements compact; the reconstruction error stays at the
trim scale.
"""

import numpy as np

from algdecomp import AlgMatrix, aqr, laurent, random_matrix

L = laurent(1)
A = random_matrix(L, 3, 2, np.random.default_rng(5), degree=2)
print("input supports:", [[A[i, j].support for j in range(2)]
                          for i in range(3)])

rep = aqr(A, eps=1e-8, trim=1e-12)
print(f"{rep.rotations} rotations, {rep.sweeps} sweeps, "
      f"{rep.trimmed} coefficients trimmed")
print("Q supports:", [[rep.q[i, j].support for j in range(3)]
                      for i in range(3)])
print(f"||A - QR||_F = {(rep.q @ rep.r - A).frob():.2e}")
print(f"||Q^H Q - I||_F = {(rep.q.herm() @ rep.q - AlgMatrix.identity(L, 3)).frob():.2e}")


def evaluate(M, z):
    return np.array([[sum(c * z ** lab[0] for lab, c in M[i, j].coeffs.items())
                      for j in range(M.n)] for i in range(M.m)])


print("\nparaunitarity on the unit circle:")
for t in (0.0, 0.3, 0.77):
    z = np.exp(2j * np.pi * t)
    Qz = evaluate(rep.q, z)
    err = np.abs(Qz.conj().T @ Qz - np.eye(3)).max()
    print(f"  z = exp(2 pi i {t:.2f}): ||Q(z)^H Q(z) - I||_max = {err:.2e}")
