# %% [markdown]
# Forward problem and the probe identity on a small grid.
# Two operators share their vector field near the boundary and differ inside
# by a rotational field and a potential bump.

# %%
from __future__ import annotations

import numpy as np

from biharmonic_inverse.geometry import make_grid
from biharmonic_inverse.operator import assemble, make_coefficients
from biharmonic_inverse.probes import identity_check, make_probe
from biharmonic_inverse.spectral import align, eigensolve, weyl_slope

base = [{"preset": "constant_B", "value": (0.3, -0.2)},
        {"preset": "bump_q", "amp": 1.0, "center": (0.4, 0.6), "width": 0.2}]
diff = [{"preset": "rotational_B", "amp": 0.05, "center": (0.5, 0.45), "width": 0.15},
        {"preset": "bump_q", "amp": 2.0, "center": (0.5, 0.45), "width": 0.15}]
grid = make_grid(1.0, 1.0, 31, 31)
op1 = assemble(grid, make_coefficients(grid, base))
op2 = assemble(grid, make_coefficients(grid, base + diff))

# %% full eigenbasis of both operators
d1 = eigensolve(op1)
d2 = align(d1, eigensolve(op2))
print("lowest eigenvalues", np.round(d1.lam[:4], 2), np.round(d2.lam[:4], 2))
print("Weyl slope on this grid", round(weyl_slope(d1.lam), 3))

# %% boundary pairing difference against its spectral expression
for tau in (8.0, 16.0, 32.0):
    pair = make_probe((2 * np.pi, 0.0), tau, grid=grid, variant="discrete")
    rep = identity_check(op1, op2, d1, d2, pair)
    print(f"tau={tau:4.0f}  dS={rep['dS']:.4e}  relative gap={rep['relative']:.2e}")
