"""Berge-F containment: exact search, witness certificates and their validation."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

from .errors import InvalidParams, InvalidT
from .hypergraph import LinearHypergraph


@dataclass(frozen=True)
class SkeletonGraph:
    """A simple graph on vertices ``0..m-1``."""

    m: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for a, b in self.edges:
            if a == b:
                raise InvalidParams(f"loop at {a}")
            if not (0 <= a < self.m and 0 <= b < self.m):
                raise InvalidParams(f"skeleton edge {(a, b)} out of range")
            p = (min(a, b), max(a, b))
            if p in seen:
                raise InvalidParams(f"duplicate skeleton edge {p}")
            seen.add(p)

    def degree(self, a: int) -> int:
        return sum(1 for e in self.edges if a in e)


def skeleton(m: int, edges: Iterable[tuple[int, int]]) -> SkeletonGraph:
    return SkeletonGraph(m, tuple((min(a, b), max(a, b)) for a, b in edges))


def k3t_skeleton(t: int) -> SkeletonGraph:
    """K_{3,t}: vertices 0,1,2 form the small side, 3..t+2 the large side."""
    if t < 1:
        raise InvalidT(f"t must be >= 1, got {t}")
    return skeleton(3 + t, [(a, 3 + j) for a in range(3) for j in range(t)])


def triangle() -> SkeletonGraph:
    return skeleton(3, [(0, 1), (0, 2), (1, 2)])


@dataclass(frozen=True)
class BergeWitness:
    core_map: dict
    edge_map: dict

    def to_dict(self) -> dict:
        return {
            "core_map": {str(a): int(x) for a, x in sorted(self.core_map.items())},
            "edge_map": {f"{a}-{b}": int(i) for (a, b), i in sorted(self.edge_map.items())},
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "BergeWitness":
        core = {int(a): int(x) for a, x in data["core_map"].items()}
        em = {}
        for key, i in data["edge_map"].items():
            a, b = key.split("-")
            em[(int(a), int(b))] = int(i)
        return cls(core, em)


def validate_witness(H: LinearHypergraph, F: SkeletonGraph, W: BergeWitness) -> bool:
    core = W.core_map
    if set(core) != set(range(F.m)):
        return False
    images = list(core.values())
    if len(set(images)) != len(images) or any(not 0 <= x < H.n for x in images):
        return False
    wanted = {(min(a, b), max(a, b)) for a, b in F.edges}
    got = {(min(a, b), max(a, b)): i for (a, b), i in W.edge_map.items()}
    if set(got) != wanted or len(got) != len(W.edge_map):
        return False
    used = list(got.values())
    if len(set(used)) != len(used):
        return False
    for (a, b), i in got.items():
        if not 0 <= i < H.m:
            return False
        e = H.edges[i]
        if core[a] not in e or core[b] not in e:
            return False
    return True


def _bipartite_match(candidates: list[list[int]]) -> list[int] | None:
    """Perfect matching of left items to distinct right items (Kuhn's augmenting paths)."""
    owner: dict[int, int] = {}

    def augment(i, seen):
        for j in candidates[i]:
            if j in seen:
                continue
            seen.add(j)
            if j not in owner or augment(owner[j], seen):
                owner[j] = i
                return True
        return False

    for i in range(len(candidates)):
        if not augment(i, set()):
            return None
    out = [0] * len(candidates)
    for j, i in owner.items():
        out[i] = j
    return out


def edge_assignment(H: LinearHypergraph, F: SkeletonGraph, core_map: dict, method: str = "coedge"):
    """Map skeleton edges to distinct hyperedges for a fixed core map, or ``None``.

    ``method="coedge"`` uses linearity (each skeleton edge has at most one
    candidate, so only distinctness is checked); ``method="matching"`` solves
    the general bipartite matching between skeleton edges and every hyperedge
    containing both endpoints.
    """
    if method == "coedge":
        em, used = {}, set()
        for a, b in F.edges:
            x, y = core_map[a], core_map[b]
            i = H.pair_index.get((min(x, y), max(x, y)))
            if i is None or i in used:
                return None
            used.add(i)
            em[(a, b)] = i
        return em
    if method == "matching":
        cands = []
        for a, b in F.edges:
            x, y = core_map[a], core_map[b]
            cands.append([i for i in H.incidence[x] if y in H.edges[i]])
        match = _bipartite_match(cands)
        if match is None:
            return None
        return {e: i for e, i in zip(F.edges, match)}
    raise InvalidParams(f"unknown method {method!r}")


def contains_berge(H: LinearHypergraph, F: SkeletonGraph) -> BergeWitness | None:
    """Return a Berge-F witness in ``H`` or ``None`` if ``H`` is Berge-F-free.

    Backtracks over injective core maps. Skeleton vertices are placed in
    descending skeleton degree; candidate hypergraph vertices are tried in
    descending degree with ties by index. A placement is rejected as soon as
    a skeleton edge to an already placed vertex has no co-edge or reuses an
    edge, which for linear hypergraphs is exactly the matching condition.
    """
    if F.m > H.n or len(F.edges) > H.m:
        return None
    fdeg = [F.degree(a) for a in range(F.m)]
    order = sorted(range(F.m), key=lambda a: (-fdeg[a], a))
    pos = {a: k for k, a in enumerate(order)}
    # skeleton edges to earlier-placed vertices, per placement step
    back = [[] for _ in order]
    for a, b in F.edges:
        if pos[a] < pos[b]:
            back[pos[b]].append((a, b, a))
        else:
            back[pos[a]].append((a, b, b))
    hdeg = H.degrees
    ranked = sorted(range(H.n), key=lambda x: (-int(hdeg[x]), x))

    core: dict[int, int] = {}
    em: dict[tuple[int, int], int] = {}
    used_v: set[int] = set()
    used_e: set[int] = set()

    def candidates(step):
        a = order[step]
        if not back[step]:
            return [x for x in ranked if hdeg[x] >= fdeg[a] and x not in used_v]
        anchors = [core[p] for _, _, p in back[step]]
        # must be adjacent to every already-placed skeleton neighbour
        common = None
        for x in anchors:
            nb = set()
            for i in H.incidence[x]:
                if i not in used_e:
                    nb.update(H.edges[i])
            common = nb if common is None else common & nb
        return [x for x in ranked if x in common and hdeg[x] >= fdeg[a] and x not in used_v]

    def place(step) -> bool:
        if step == len(order):
            return True
        a = order[step]
        for x in candidates(step):
            added = []
            ok = True
            for sa, sb, p in back[step]:
                y = core[p]
                i = H.pair_index.get((min(x, y), max(x, y)))
                if i is None or i in used_e:
                    ok = False
                    break
                used_e.add(i)
                em[(sa, sb)] = i
                added.append((sa, sb, i))
            if ok:
                core[a] = x
                used_v.add(x)
                if place(step + 1):
                    return True
                del core[a]
                used_v.discard(x)
            for sa, sb, i in added:
                used_e.discard(i)
                del em[(sa, sb)]
        return False

    if place(0):
        return BergeWitness(dict(sorted(core.items())), dict(sorted(em.items())))
    return None


def is_berge_k3t_free(H: LinearHypergraph, t: int) -> bool:
    return contains_berge(H, k3t_skeleton(t)) is None


def naive_berge_triangle(H: LinearHypergraph) -> bool:
    """Brute force over triples of distinct edges and vertex choices in their pairwise intersections."""
    sets = [set(e) for e in H.edges]
    for i, j, k in combinations(range(H.m), 3):
        ab = sets[i] & sets[j]
        bc = sets[j] & sets[k]
        ca = sets[k] & sets[i]
        for x, y, z in product(ab, bc, ca):
            if len({x, y, z}) == 3:
                return True
    return False
