"""Closed-form density matrix against brute-force spinor averaging.

Run with ``python3 demos/03_spinor_oracle.py``.

The closed form needs only three thermal weights and four angular numbers.
The brute-force route builds every spinor on a sphere grid, forms the
projectors and integrates over momentum. Agreement shows the reduction is right.
"""

import math
import time

import numpy as np

from fermiparity import ModelParams, assemble_rho12, rho12_from_spinor_integral

np.set_printoptions(precision=5, suppress=True, linewidth=110)

params = ModelParams(s=1, t_m=1.0, chi=math.pi / 8, mu=math.pi / 2)

# %% The two routes
closed = assemble_rho12(params).matrix
start = time.perf_counter()
brute = rho12_from_spinor_integral(params).matrix
print(f"spinor integral took {time.perf_counter() - start:.3f} s")
print(closed)
print("max |closed - brute| =", np.max(np.abs(closed - brute)))

# %% Sweep a small grid of parameters
for s in (0, 1):
    for t in (1e-3, 1.0, 1e2):
        p = ModelParams(s, t, math.pi / 4, 0.0)
        d = np.max(np.abs(assemble_rho12(p).matrix - rho12_from_spinor_integral(p).matrix))
        print(f"s={s} t_m={t:g}: {d:.1e}")
