"""
The extremal constructions, built and checked
=============================================

Lattices, the two-centre hypergraph F, its extensions G and H, and the
r = 2 reference graph.
"""

from collections import Counter

from berge_k3t import build_F, contains_berge, k3t_skeleton, lattice, reference_graph, sample_G, sample_H

# [4]^2: 16 points, 8 axis-parallel lines, two colour classes of 4 lines each
L = lattice(4, 2)
print("[4]^2:", L.base.n, "vertices,", L.base.m, "edges, colours", Counter(L.colors))

# F on 11 vertices: one block [2]^3, so 4 red lines through u and 4 blue lines through w
F = build_F(11, 3)
H = F.base
print("F(11,3):", H.m, "edges; d_u =", H.degrees[F.u], "d_w =", H.degrees[F.w])
print("  colours:", Counter(F.colors))
print("  latent c1 lines (not edges of F):", F.latent[1])

# G adds t-1 latent lines through v_1; with t = 5 all four are taken
G = sample_G(11, 3, 5, seed=0)
print("G(11,3,5): d_v1 =", G.base.degrees[G.vs[0]], "edges =", G.base.m)

# H embeds a 3-partite graph across lattice blocks; it needs at least 3 blocks
for n in (11, 19, 27):
    Hc = sample_H(n, 3, 5, seed=1)
    free = contains_berge(Hc.base, k3t_skeleton(5)) is None
    print(f"H({n},3,5): {Hc.colors.count('embed')} embedded edges, Berge-K_3,5-free: {free}")

# nesting: F inside G inside H, same roles
G = sample_G(27, 3, 5, seed=2)
Hc = sample_H(27, 3, 5, seed=2, G=G)
print("F <= G <= H:", set(build_F(27, 3).base.edges) <= set(G.base.edges) <= set(Hc.base.edges))

# the r = 2 reference graph K_2 joined with two triangles
R = reference_graph(8, 3, 3)
print("K_2 + 2K_3:", R.n, "vertices,", R.m, "edges")
