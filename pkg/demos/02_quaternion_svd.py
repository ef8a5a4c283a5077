#!/usr/bin/env python3
"""Quaternion SVD with exact-termination QR passes.

The quaternions are cl(0,2): two anticommuting generators squaring to -1.
Because they form a division algebra, beta(a) = a/|a| turns every Givens
rotation into an exact annihilation, and the SVD reduces to a handful of
alternating QR passes.

The singular values are checked against an independent oracle: each
quaternion entry becomes a 4x4 real block (the regular representation), and
numpy's SVD of that real matrix must show every quaternion singular value
with multiplicity four.
"""

import numpy as np

from algdecomp import asvd, quaternion_algebra, random_matrix, rmr_lift

H = quaternion_algebra()
A = random_matrix(H, 3, 3, np.random.default_rng(2))

rep = asvd(A, eps=1e-12)
print(f"{rep.qrd_calls} QR passes, {rep.rotations} rotations, "
      f"off-diagonal residual {rep.residual:.2e}")

diag = sorted((rep.d[k, k].re() for k in range(3)), reverse=True)
print("singular values:", np.round(diag, 10))

oracle = np.sort(np.linalg.svd(rmr_lift(A), compute_uv=False))[::-1]
print("real-representation spectrum (each value x4):")
print(np.round(oracle, 10))

want = np.repeat(diag, 4)
print(f"max deviation: {np.abs(oracle - want).max():.2e}")

recon = (rep.u @ rep.d @ rep.v.herm() - A).frob()
print(f"||A - U D V^H||_F = {recon:.2e}")
