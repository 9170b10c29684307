"""
Spectral radius of the two-centre construction
==============================================

Shifted power iteration against the closed form and the three-class
reduced system. The Collatz-Wielandt bracket shrinks to the radius.
"""

import numpy as np

from berge_k3t import build_F, closed_form_rho_F, reduced_system_rho_F, spectral_radius, verify_eigenpair
from berge_k3t.errors import NoConvergence
from berge_k3t.spectral import degree_sum_gap

for n in (11, 19, 27):
    F = build_F(n, 3)
    res = spectral_radius(F.base)
    cf = closed_form_rho_F(n, 3)
    red = reduced_system_rho_F(n, 3)[0]
    print(f"n={n}: iteration {res.rho:.12f}  closed form {cf:.12f}  reduced {red:.12f}  ({res.iterations} steps)")

# watch the bracket narrow on n = 19
F = build_F(19, 3).base
for k in (1, 2, 5, 10, 20):
    try:
        spectral_radius(F, max_iter=k)
    except NoConvergence as exc:
        b = exc.result
        print(f"after {k:>2} steps: {b.lower:.8f} <= rho <= {b.upper:.8f}")

# Perron vector: u and w carry the most weight, the v's the least
res = spectral_radius(F)
print("x_u, x_v1, lattice:", res.x[0], res.x[2], res.x[3])
print("residual:", verify_eigenpair(F, res.rho, res.x).residual)
print("sum_{N_u} d_v / (r-1) - rho^2 =", degree_sum_gap(F, res))

# shift-independence of the answer
print([round(spectral_radius(F, shift=s).rho, 10) for s in (0.5, 1.0, 2.0)])
print("unit r-norm:", np.sum(res.x**3))
