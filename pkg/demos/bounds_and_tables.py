"""
Bounds against exhaustive tables
================================

Exact rational evaluation of f and the quadratic, then the true extremal
values at desk scale by orderly enumeration.
"""

from berge_k3t import bound_report, eval_f, turan_upper_bound
from berge_k3t.harness import extremal_table, spectral_table

print("f(11,3,3,5,5) =", eval_f(11, 3, 3, 5, 5))
tb = turan_upper_bound(11, 3, 3)
print(f"g1 = {tb.g1}, g2 = {tb.g2}, d <= {tb.d_bound:.3f}, edges <= {tb.edge_bound:.2f} (raw {tb.raw_edge_bound:.2f})")

rep = bound_report(11, 3, 5)
for key, val in rep.to_dict().items():
    print(f"{key:>22}: {val}")

print()
print(" n  ex   turan   spex    upper")
for n in (5, 6, 7):
    ex = extremal_table(n, 3, 3)
    sp = spectral_table(n, 3, 3)
    print(f"{n:>2} {ex.max_edges:>3} {ex.margins['turan_edge_bound']:>7.2f} {sp.max_rho:>6.3f} {sp.margins['spectral_upper']:>8.3f}")

# an extremal witness at n = 7
print("witness:", extremal_table(7, 3, 3).edge_witness.edges)
