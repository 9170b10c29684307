"""
Probing the structure of spectral extremal graphs
=================================================

Compare the radius of F, every member of the G family, sampled H members
and a local search that adds free edges to the best H found.
"""

from berge_k3t.harness import probe_conjecture

for n, t in ((11, 4), (11, 5), (19, 4)):
    rep = probe_conjecture(n, 3, t, sample_budget=6, seed=0, search_steps=150)
    print(f"(n, t) = ({n}, {t}): rho(F) = {rep.rho_F:.5f}")
    print(f"  G family: {rep.g_count} members, {rep.g_examined} examined, best rho {rep.best_G_rho:.5f}")
    print(f"  H samples: best rho {rep.best_H_rho:.5f}; local search reached {rep.search_rho:.5f}")
    if rep.counterexample:
        print("  local search beat every sampled H member; edges:", rep.counterexample["edges"])
