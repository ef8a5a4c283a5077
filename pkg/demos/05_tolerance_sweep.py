#!/usr/bin/env python3
"""Rotation counts versus tolerance: where each engine wins.

The rotation engine's work grows as the tolerance shrinks; per-block QR
over a division algebra terminates exactly, so the representation engine's
count is flat in the tolerance.  After normalising for per-rotation cost
(a cl(4,1) rotation moves 32 real coefficients per entry, a complex one
moves 2, a factor of 16), the representation route is far cheaper.

The same table is available from the command line:

    algdecomp sweep-eps --algebra "cl(4,1)" --op qr --random 3 2 --seed 7 \
        --eps-list 1e-2,1e-4,1e-6,1e-8,1e-10 --output sweep.csv
"""

import numpy as np

from algdecomp import aqr, clifford, random_matrix, rep_cl41, wqr

spec = clifford(4, 1)
A = random_matrix(spec, 3, 2, np.random.default_rng(7))
rep = rep_cl41()
ratio = 2.0 / spec.dim  # complex rotation cost / cl(4,1) rotation cost

print(f"{'eps':>8} {'rotation-engine':>16} {'block-engine':>13} "
      f"{'block, normalised':>18}")
for eps in (1e-2, 1e-4, 1e-6, 1e-8, 1e-10):
    jac = aqr(A, beta="basis", norm="inf", eps=eps)
    wed = wqr(A, rep, eps=0.0)
    print(f"{eps:8.0e} {jac.rotations:16d} {wed.rotations:13d} "
          f"{wed.rotations * ratio:18.2f}")

print("\nblock QR is tolerance-independent (exact termination); the")
print("rotation engine pays roughly linearly in the number of digits.")
