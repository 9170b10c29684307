"""Generators for the lattice hypergraphs and the two-centre extremal constructions.

``build_F`` glues an edge ``l = {u, w, v_1..v_{r-2}}`` to copies of the
plane [r-1]^2: every direction-1 line of a copy plus ``u`` is a red edge,
every direction-2 line plus ``w`` a blue edge. Lattice vertices are grouped
into virtual blocks [r-1]^r so that directions 3..r supply the latent
colour classes used by :func:`sample_G`.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass, field

from .errors import DivisibilityViolated, InvalidParams, NotEnoughColorEdges
from .hypergraph import LinearHypergraph, build_linear


def _lines(side: int, dim: int, direction: int):
    """Lines of [side]^dim along ``direction`` (0-based) as lists of mixed-radix indices."""
    out = []
    others = [k for k in range(dim) if k != direction]
    for fixed in itertools.product(range(side), repeat=dim - 1):
        coord = [0] * dim
        for k, c in zip(others, fixed):
            coord[k] = c
        line = []
        for c in range(side):
            coord[direction] = c
            line.append(sum(coord[k] * side**k for k in range(dim)))
        out.append(line)
    return out


@dataclass(frozen=True)
class LatticeHypergraph:
    base: LinearHypergraph
    d: int
    coordinates: dict
    colors: tuple

    def color_class(self, c: int) -> list[tuple[int, ...]]:
        return [e for e, col in zip(self.base.edges, self.colors) if col == c]


def lattice(r: int, d: int) -> LatticeHypergraph:
    """The integer lattice [r]^d as a linear r-graph; edge colour = direction 1..d."""
    if r < 2 or d < 1:
        raise InvalidParams(f"need r >= 2 and d >= 1, got r={r}, d={d}")
    edges, colors = [], []
    for k in range(d):
        for line in _lines(r, d, k):
            edges.append(line)
            colors.append(k + 1)
    coords = {}
    for v in range(r**d):
        coords[v] = tuple(v // r**k % r + 1 for k in range(d))
    return LatticeHypergraph(build_linear(r**d, r, edges), d, coords, tuple(colors))


@dataclass(frozen=True)
class Construction:
    """A hypergraph with the roles of its special vertices and edge colours.

    ``colors`` labels each edge ``"l"``, ``"red"``, ``"blue"``, ``"c<i>"``
    (an edge through ``v_i``) or ``"embed"`` (edges added by ``sample_H``).
    """

    base: LinearHypergraph
    t: int | None
    u: int
    w: int
    vs: tuple
    blocks: tuple
    colors: tuple
    latent: dict = field(default_factory=dict, compare=False)

    @property
    def l_edge(self) -> tuple[int, ...]:
        return tuple(sorted((self.u, self.w) + self.vs))

    def roles(self) -> dict:
        return {"u": self.u, "w": self.w, "v": list(self.vs), "blocks": [list(b) for b in self.blocks]}

    def to_dict(self) -> dict:
        out = self.base.to_dict()
        out["roles"] = self.roles()
        out["colors"] = list(self.colors)
        if self.t is not None:
            out["t"] = self.t
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _check_F(n, r):
    if r < 3 or n <= r:
        raise InvalidParams(f"build_F needs n > r >= 3, got n={n}, r={r}")
    if (n - r) % (r - 1) ** r:
        raise DivisibilityViolated(f"(r-1)^r = {(r - 1) ** r} does not divide n-r = {n - r}")


def build_F(n: int, r: int) -> Construction:
    """Two-centre construction with u = 0, w = 1, v_i = i + 1 and l = {0..r-1}."""
    _check_F(n, r)
    side, size = r - 1, (r - 1) ** r
    nblocks = (n - r) // size
    u, w = 0, 1
    vs = tuple(range(2, r))
    edges = [list(range(r))]
    colors = ["l"]
    blocks = []
    latent = {i: [] for i in range(1, r - 1)}
    for b in range(nblocks):
        off = r + b * size
        blocks.append(tuple(range(off, off + size)))
        for line in _lines(side, r, 0):
            edges.append([u] + [off + x for x in line])
            colors.append("red")
        for line in _lines(side, r, 1):
            edges.append([w] + [off + x for x in line])
            colors.append("blue")
        for i in range(1, r - 1):
            latent[i].extend(tuple(off + x for x in line) for line in _lines(side, r, i + 1))
    H = build_linear(n, r, edges)
    return Construction(H, None, u, w, vs, tuple(blocks), tuple(colors), latent)


def _G_from_choice(F: Construction, t: int, choice: dict) -> Construction:
    edges = list(F.base.edges)
    colors = list(F.colors)
    for i, lines in sorted(choice.items()):
        for line in lines:
            edges.append((F.vs[i - 1],) + tuple(line))
            colors.append(f"c{i}")
    H = build_linear(F.base.n, F.base.r, edges)
    return Construction(H, t, F.u, F.w, F.vs, F.blocks, tuple(colors), F.latent)


def _check_G(n, r, t):
    _check_F(n, r)
    if t < 3:
        raise InvalidParams(f"t must be >= 3, got {t}")
    per_color = (n - r) // (r - 1)
    if t - 1 > per_color:
        raise NotEnoughColorEdges(f"t-1 = {t - 1} exceeds the {per_color} edges of each latent colour")


def sample_G(n: int, r: int, t: int, seed: int | None = None) -> Construction:
    """Add t-1 random latent lines of colour c_i through v_i, for each i."""
    _check_G(n, r, t)
    F = build_F(n, r)
    rng = random.Random(seed)
    choice = {i: sorted(rng.sample(F.latent[i], t - 1)) for i in range(1, r - 1)}
    return _G_from_choice(F, t, choice)


def count_G(n: int, r: int, t: int) -> int:
    _check_G(n, r, t)
    return math.comb((n - r) // (r - 1), t - 1) ** (r - 2)


def enumerate_G(n: int, r: int, t: int, budget: int | None = None):
    """Yield every member of the G family in a fixed order, at most ``budget`` of them."""
    _check_G(n, r, t)
    F = build_F(n, r)
    per = [list(itertools.combinations(F.latent[i], t - 1)) for i in range(1, r - 1)]
    for count, combo in enumerate(itertools.product(*per)):
        if budget is not None and count >= budget:
            return
        yield _G_from_choice(F, t, {i + 1: list(c) for i, c in enumerate(combo)})


def sample_H(n: int, r: int, t: int, seed: int | None = None, G: Construction | None = None,
             max_candidates: int = 200_000) -> Construction:
    """Embed a multipartite linear r-graph on the lattice blocks of G.

    Candidate edges take one vertex from each of r distinct blocks; they are
    shuffled and accepted greedily while linearity holds, every vertex keeps
    embedded degree <= t-3 and total degree <= t-1. With fewer than r blocks
    nothing can be embedded and H = G.
    """
    if t <= r:
        raise InvalidParams(f"sample_H needs t > r, got t={t}, r={r}")
    rng = random.Random(seed)
    if G is None:
        G = sample_G(n, r, t, seed=rng.randrange(1 << 30))
    H = G.base
    if len(G.blocks) < r or t - 3 < 1:
        return G
    deg = [int(d) for d in H.degrees]
    emb = [0] * H.n
    covered = set(H.pair_index)
    cands = []
    for parts in itertools.combinations(range(len(G.blocks)), r):
        for e in itertools.product(*(G.blocks[p] for p in parts)):
            cands.append(e)
            if len(cands) >= max_candidates:
                break
        if len(cands) >= max_candidates:
            break
    rng.shuffle(cands)
    added = []
    for e in cands:
        if any(emb[x] >= t - 3 or deg[x] >= t - 1 for x in e):
            continue
        pairs = list(itertools.combinations(sorted(e), 2))
        if any(p in covered for p in pairs):
            continue
        covered.update(pairs)
        for x in e:
            emb[x] += 1
            deg[x] += 1
        added.append(e)
    if not added:
        return G
    base = H.with_edges(added)
    return Construction(base, t, G.u, G.w, G.vs, G.blocks, G.colors + ("embed",) * len(added), G.latent)


def reference_graph(n: int, s: int, t: int) -> LinearHypergraph:
    """K_{s-1} joined with (n-s+1)/t disjoint copies of K_t, as a 2-graph."""
    if s < 2 or t < 1 or n < s:
        raise InvalidParams(f"need s >= 2, t >= 1, n >= s; got n={n}, s={s}, t={t}")
    if (n - s + 1) % t:
        raise DivisibilityViolated(f"t = {t} does not divide n-s+1 = {n - s + 1}")
    hub = list(range(s - 1))
    edges = list(itertools.combinations(hub, 2))
    for c in range((n - s + 1) // t):
        clique = range(s - 1 + c * t, s - 1 + (c + 1) * t)
        edges.extend(itertools.combinations(clique, 2))
        edges.extend((h, x) for h in hub for x in clique)
    return build_linear(n, 2, edges)


def construction_from_dict(data: dict) -> Construction:
    H = build_linear(int(data["n"]), int(data["r"]), data["edges"])
    roles = data["roles"]
    return Construction(
        H, data.get("t"), roles["u"], roles["w"], tuple(roles["v"]),
        tuple(tuple(b) for b in roles["blocks"]), tuple(data["colors"]),
    )
