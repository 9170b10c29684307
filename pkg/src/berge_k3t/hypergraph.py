"""Immutable linear r-uniform hypergraphs and their neighbourhood machinery.

Vertices are the integers ``0..n-1``; every edge is stored as a sorted tuple.
Linearity (two edges share at most one vertex) is enforced when the
hypergraph is built, so every function below may rely on the co-edge of an
adjacent pair being unique.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import (
    DuplicateEdge,
    EmptySet,
    InvalidParams,
    LinearityViolation,
    NonUniformEdge,
    NotAdjacent,
    SameVertex,
    VertexOutOfRange,
)


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class LinearHypergraph:
    """A validated linear r-graph. Build instances with :func:`build_linear`."""

    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]
    pair_index: dict = field(repr=False, compare=False)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices through each vertex, in edge order."""
        inc = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for x in e:
                inc[x].append(i)
        return tuple(tuple(lst) for lst in inc)

    @cached_property
    def degrees(self) -> np.ndarray:
        d = np.zeros(self.n, dtype=np.int64)
        for e in self.edges:
            d[list(e)] += 1
        d.setflags(write=False)
        return d

    @cached_property
    def edge_array(self) -> np.ndarray:
        arr = np.array(self.edges, dtype=np.int64).reshape(len(self.edges), self.r)
        arr.setflags(write=False)
        return arr

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        _check_vertex(self, v)
        out = set()
        for i in self.incidence[v]:
            out.update(self.edges[i])
        out.discard(v)
        return frozenset(out)

    def canonical_edges(self) -> tuple[tuple[int, ...], ...]:
        """Edge list in lexicographic order (labels unchanged)."""
        return tuple(sorted(self.edges))

    def with_edges(self, extra: Iterable[Iterable[int]]) -> "LinearHypergraph":
        return build_linear(self.n, self.r, list(self.edges) + [tuple(e) for e in extra])

    def to_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "edges": [list(e) for e in self.edges]}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def __len__(self) -> int:
        return len(self.edges)


def build_linear(n: int, r: int, edges: Iterable[Iterable[int]]) -> LinearHypergraph:
    """Validate ``edges`` and return the linear r-graph on ``n`` vertices.

    Edge order is preserved; each edge is sorted. Raises ``NonUniformEdge``,
    ``VertexOutOfRange``, ``DuplicateEdge`` or ``LinearityViolation``.
    """
    if r < 2:
        raise InvalidParams(f"uniformity must be >= 2, got {r}")
    if n < r:
        raise InvalidParams(f"need n >= r, got n={n}, r={r}")
    stored = []
    seen = set()
    pair_index = {}
    for raw in edges:
        e = tuple(sorted(int(x) for x in raw))
        if len(e) != r or len(set(e)) != r:
            raise NonUniformEdge(f"edge {tuple(raw)} does not have {r} distinct vertices")
        if e[0] < 0 or e[-1] >= n:
            raise VertexOutOfRange(f"edge {e} has a vertex outside 0..{n - 1}")
        if e in seen:
            raise DuplicateEdge(f"edge {e} appears twice")
        seen.add(e)
        idx = len(stored)
        for p in combinations(e, 2):
            if p in pair_index:
                raise LinearityViolation(p, (stored[pair_index[p]], e))
            pair_index[p] = idx
        stored.append(e)
    return LinearHypergraph(n, r, tuple(stored), pair_index)


def from_dict(data: dict) -> LinearHypergraph:
    return build_linear(int(data["n"]), int(data["r"]), data["edges"])


def load_json(path) -> LinearHypergraph:
    with open(path) as fh:
        return from_dict(json.load(fh))


def _check_vertex(H: LinearHypergraph, v: int) -> None:
    if not 0 <= v < H.n:
        raise VertexOutOfRange(f"vertex {v} outside 0..{H.n - 1}")


def co_edge_index(H: LinearHypergraph, u: int, w: int) -> int | None:
    _check_vertex(H, u)
    _check_vertex(H, w)
    if u == w:
        raise SameVertex(f"co_edge needs two distinct vertices, got {u} twice")
    return H.pair_index.get(_pair(u, w))


def co_edge(H: LinearHypergraph, u: int, w: int) -> tuple[int, ...] | None:
    """The unique edge through ``u`` and ``w``, or ``None`` if they are not adjacent."""
    i = co_edge_index(H, u, w)
    return None if i is None else H.edges[i]


def adjacent(H: LinearHypergraph, u: int, w: int) -> bool:
    return u != w and _pair(u, w) in H.pair_index


def common_neighborhood(H: LinearHypergraph, S: Iterable[int]) -> frozenset[int]:
    S = list(S)
    if not S:
        raise EmptySet("common_neighborhood needs a nonempty vertex set")
    out = H.neighbors(S[0])
    for v in S[1:]:
        out = out & H.neighbors(v)
    return out


@dataclass(frozen=True)
class NeighborhoodPartition:
    u: int
    w: int
    n1: frozenset
    n2: frozenset
    co_edge_rest: frozenset


def partition_neighborhood(H: LinearHypergraph, u: int, w: int) -> NeighborhoodPartition:
    """Split N_u into common neighbours off the co-edge, private neighbours, and the co-edge."""
    l_uw = co_edge(H, u, w)
    if l_uw is None:
        raise NotAdjacent(f"vertices {u} and {w} are not adjacent")
    Nu, Nw = H.neighbors(u), H.neighbors(w)
    n1 = (Nu & Nw) - set(l_uw)
    n2 = Nu - Nw - {w}
    return NeighborhoodPartition(u, w, frozenset(n1), frozenset(n2), frozenset(l_uw) - {u})


@dataclass(frozen=True)
class EdgeProfile:
    """Edge counts by the size of their intersection with a reference set.

    ``counts[k]`` is the number of edges meeting ``U`` in exactly ``k``
    vertices; ``per_vertex[v, k]`` restricts that count to edges through ``v``.
    """

    U: frozenset
    counts: np.ndarray
    per_vertex: np.ndarray

    def e(self, k: int, v: int | None = None) -> int:
        if v is None:
            return int(self.counts[k])
        return int(self.per_vertex[v, k])

    def vertex_sum(self, v: int, ks: Iterable[int]) -> int:
        return int(sum(self.per_vertex[v, k] for k in ks))


def edge_profile(H: LinearHypergraph, U: Iterable[int]) -> EdgeProfile:
    U = frozenset(U)
    for x in U:
        _check_vertex(H, x)
    counts = np.zeros(H.r + 1, dtype=np.int64)
    per_vertex = np.zeros((H.n, H.r + 1), dtype=np.int64)
    for e in H.edges:
        k = sum(1 for x in e if x in U)
        counts[k] += 1
        for x in e:
            per_vertex[x, k] += 1
    return EdgeProfile(U, counts, per_vertex)


def degree(H: LinearHypergraph, v: int) -> int:
    _check_vertex(H, v)
    return len(H.incidence[v])


def max_degree(H: LinearHypergraph) -> int:
    return int(H.degrees.max()) if H.n else 0


def is_connected(H: LinearHypergraph) -> bool:
    """Every vertex reachable from vertex 0 through shared edges (isolated vertices count)."""
    if H.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for i in H.incidence[x]:
            for y in H.edges[i]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return len(seen) == H.n


def canonical_key(H: LinearHypergraph) -> tuple:
    return (H.n, H.r, H.canonical_edges())
