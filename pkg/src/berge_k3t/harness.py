"""Exhaustive small-scale search: enumeration of linear r-graphs, extremal tables, conjecture probe.

Enumeration is orderly: a labelled edge list is *canonical* when it is the
lexicographically least sorted edge list among all its relabellings. Dropping
the largest edge of a canonical list leaves a canonical list, so extending
canonical lists by edges above their last edge, and keeping only canonical
results, visits every isomorphism class exactly once.
"""

from __future__ import annotations

import itertools
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from .berge import contains_berge, is_berge_k3t_free, k3t_skeleton
from .bounds import spectral_lower_bound, spectral_upper_bound, tait_bound, turan_upper_bound
from .constructions import build_F, count_G, enumerate_G, sample_G, sample_H
from .errors import BergeError, BudgetExceeded, InvalidParams, NegativeF, NoConvergence
from .hypergraph import LinearHypergraph, build_linear, is_connected
from .spectral import spectral_radius

WORKERS_ENV = "BERGE_K3T_WORKERS"


@lru_cache(maxsize=None)
def _perms(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64)


@lru_cache(maxsize=None)
def _weights(n: int, r: int) -> np.ndarray:
    return np.array([n ** (r - 1 - k) for k in range(r)], dtype=np.int64)


def is_canonical(n: int, r: int, edges: list[tuple[int, ...]]) -> bool:
    """True if the sorted ``edges`` are lexicographically least among all relabellings.

    Only relabellings sending a maximum-degree vertex to 0 are tried: in the
    least form vertex 0 has maximum degree, since edges through 0 sort first.
    """
    if not edges:
        return True
    E = np.array(edges, dtype=np.int64)
    deg = np.bincount(E.ravel(), minlength=n)
    if deg[0] != deg.max():
        return False
    P = _perms(n)
    # P[k, v] is the image of v; keep rows whose preimage of 0 has max degree
    pre0 = np.argmin(P, axis=1)
    P = P[deg[pre0] == deg.max()]
    w = _weights(n, r)
    base = E @ w
    img = np.sort(P[:, E], axis=2) @ w
    img.sort(axis=1)
    diff = img - base
    nz = diff != 0
    first = nz.argmax(axis=1)
    val = diff[np.arange(len(diff)), first]
    return not np.any(nz.any(axis=1) & (val < 0))


def enumerate_linear(
    n: int,
    r: int,
    predicate: Callable[[LinearHypergraph], bool] | None = None,
    max_nodes: int = 1_000_000,
    time_limit: float | None = None,
) -> Iterator[LinearHypergraph]:
    """Yield one canonical representative of each isomorphism class of linear r-graphs on n vertices.

    ``predicate`` must be monotone decreasing (closed under taking
    sub-hypergraphs); classes failing it are neither yielded nor extended.
    Raises ``BudgetExceeded`` after yielding partial results when
    ``max_nodes`` classes or ``time_limit`` seconds are exhausted.
    """
    if n < r or r < 2:
        raise InvalidParams(f"need n >= r >= 2, got n={n}, r={r}")
    if n > 9:
        raise BudgetExceeded(f"n = {n} is beyond exhaustive enumeration")
    all_edges = list(itertools.combinations(range(n), r))
    start = time.monotonic()
    visited = 0
    # depth-first stack of (edges, covered pairs, next candidate position)
    stack = [([], frozenset(), 0)]
    while stack:
        if visited >= max_nodes:
            raise BudgetExceeded(f"stopped after {visited} classes", partial=visited)
        if time_limit is not None and time.monotonic() - start > time_limit:
            raise BudgetExceeded(f"time limit hit after {visited} classes", partial=visited)
        edges, covered, pos = stack.pop()
        H = build_linear(n, r, edges)
        if predicate is not None and not predicate(H):
            continue
        visited += 1
        yield H
        children = []
        for k in range(pos, len(all_edges)):
            e = all_edges[k]
            pairs = set(itertools.combinations(e, 2))
            if pairs & covered:
                continue
            cand = edges + [e]
            if is_canonical(n, r, cand):
                children.append((cand, covered | pairs, k + 1))
        stack.extend(reversed(children))


def naive_class_count(n: int, r: int) -> int:
    """Count isomorphism classes by listing every labelled linear r-graph and deduplicating."""
    all_edges = list(itertools.combinations(range(n), r))
    perms = list(itertools.permutations(range(n)))
    forms = set()

    def form(edges):
        best = None
        for p in perms:
            img = sorted(tuple(sorted(p[x] for x in e)) for e in edges)
            if best is None or img < best:
                best = img
        return tuple(best)

    def grow(edges, covered, start):
        forms.add(form(edges))
        for k in range(start, len(all_edges)):
            e = all_edges[k]
            pairs = set(itertools.combinations(e, 2))
            if pairs & covered:
                continue
            grow(edges + [e], covered | pairs, k + 1)

    grow([], frozenset(), 0)
    return len(forms)


@dataclass
class ExtremalRecord:
    n: int
    r: int
    t: int
    max_edges: int | None = None
    edge_witness: LinearHypergraph | None = None
    max_rho: float | None = None
    rho_witness: LinearHypergraph | None = None
    examined: int = 0
    free_count: int = 0
    connected_count: int = 0
    complete: bool = True
    wall_time: float = 0.0
    margins: dict = field(default_factory=dict)

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "n": self.n,
            "r": self.r,
            "t": self.t,
            "max_edges": self.max_edges,
            "edge_witness": self.edge_witness.to_dict() if self.edge_witness else None,
            "max_rho": self.max_rho,
            "rho_witness": self.rho_witness.to_dict() if self.rho_witness else None,
            "examined": self.examined,
            "free_count": self.free_count,
            "connected_count": self.connected_count,
            "complete": self.complete,
            "margins": self.margins,
        }
        if timing:
            out["wall_time"] = self.wall_time
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _free_predicate(t: int):
    F = k3t_skeleton(t)
    return lambda H: contains_berge(H, F) is None


def free_classes(n, r, t, max_nodes=1_000_000, time_limit=None):
    """All Berge-K_{3,t}-free classes plus a completeness flag."""
    out, complete = [], True
    try:
        for H in enumerate_linear(n, r, _free_predicate(t), max_nodes, time_limit):
            out.append(H)
    except BudgetExceeded:
        complete = False
    return out, complete


def extremal_table(n: int, r: int, t: int, max_nodes: int = 1_000_000, time_limit: float | None = None) -> ExtremalRecord:
    """Largest edge count over Berge-K_{3,t}-free linear r-graphs on n vertices."""
    start = time.monotonic()
    rec = ExtremalRecord(n, r, t)
    classes, rec.complete = free_classes(n, r, t, max_nodes, time_limit)
    rec.examined = rec.free_count = len(classes)
    for H in classes:
        if rec.max_edges is None or H.m > rec.max_edges:
            rec.max_edges, rec.edge_witness = H.m, H
    if r >= 3 and t >= 3:
        tb = turan_upper_bound(n, r, t)
        rec.margins["turan_edge_bound"] = tb.edge_bound
        rec.margins["turan_margin"] = tb.edge_bound - rec.max_edges
    rec.wall_time = time.monotonic() - start
    return rec


def _rho(H):
    try:
        return spectral_radius(H).rho
    except NoConvergence as exc:
        return exc.result.rho


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def spectral_table(n: int, r: int, t: int, max_nodes: int = 1_000_000, time_limit: float | None = None) -> ExtremalRecord:
    """Largest spectral radius over connected Berge-K_{3,t}-free linear r-graphs on n vertices."""
    start = time.monotonic()
    rec = ExtremalRecord(n, r, t)
    classes, rec.complete = free_classes(n, r, t, max_nodes, time_limit)
    rec.examined = rec.free_count = len(classes)
    conn = [H for H in classes if is_connected(H)]
    rec.connected_count = len(conn)
    workers = _workers()
    if workers > 1 and len(conn) > 1:
        with ProcessPoolExecutor(workers) as pool:
            rhos = list(pool.map(_rho, conn))
    else:
        rhos = [_rho(H) for H in conn]
    for H, rho in zip(conn, rhos):
        if rec.max_rho is None or rho > rec.max_rho + 1e-12:
            rec.max_rho, rec.rho_witness = rho, H
    for H in classes:
        if rec.max_edges is None or H.m > rec.max_edges:
            rec.max_edges, rec.edge_witness = H.m, H
    if r >= 3:
        try:
            up = spectral_upper_bound(n, r, t)
            rec.margins["spectral_upper"] = up
            if rec.max_rho is not None:
                rec.margins["spectral_upper_margin"] = up - rec.max_rho
        except NegativeF:
            rec.margins["spectral_upper"] = None
    if t > r and (n - r) % (r - 1) ** r == 0:
        rec.margins["spectral_lower"] = spectral_lower_bound(n, r)
    if r == 2 and n >= 3 and (n - 2) % t == 0:
        rec.margins["tait_bound"] = tait_bound(n, 3, t)
        rec.margins["tait_large_n_assumed"] = True
    rec.wall_time = time.monotonic() - start
    return rec


@dataclass
class ConjectureReport:
    n: int
    r: int
    t: int
    rho_F: float
    g_count: int
    g_examined: int
    g_rhos: list
    best_G_index: int | None
    best_G_rho: float | None
    h_rhos: list
    best_H_rho: float | None
    best_H: dict | None
    search_rho: float | None
    counterexample: dict | None

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def _local_search(H: LinearHypergraph, t: int, steps: int, rng: random.Random):
    """Hill-climb by adding random edges that keep H linear, connected and Berge-K_{3,t}-free."""
    best, best_rho = H, _rho(H)
    verts = list(range(H.n))
    for _ in range(steps):
        e = tuple(sorted(rng.sample(verts, H.r)))
        pairs = itertools.combinations(e, 2)
        if any(p in best.pair_index for p in pairs):
            continue
        cand = best.with_edges([e])
        if not is_berge_k3t_free(cand, t):
            continue
        rho = _rho(cand)
        if rho > best_rho:
            best, best_rho = cand, rho
    return best, best_rho


def probe_conjecture(n: int, r: int, t: int, sample_budget: int, seed: int = 0, search_steps: int = 200) -> ConjectureReport:
    """Compare the G family, sampled H members and a local search around the best H.

    With ``sample_budget == 0`` only the base construction F is evaluated.
    A local-search result beating the best H member is returned in full as
    ``counterexample`` for inspection; it does not refute anything by itself.
    """
    if t <= r:
        raise InvalidParams(f"probe needs t > r, got t={t}, r={r}")
    F = build_F(n, r)
    rho_F = _rho(F.base)
    total = count_G(n, r, t)
    if sample_budget <= 0:
        return ConjectureReport(n, r, t, rho_F, total, 0, [], None, None, [], None, None, None, None)
    rng = random.Random(seed)
    if total <= sample_budget:
        family = list(enumerate_G(n, r, t))
    else:
        family = [sample_G(n, r, t, seed=rng.randrange(1 << 30)) for _ in range(sample_budget)]
    g_rhos = [_rho(G.base) for G in family]
    gi = max(range(len(g_rhos)), key=lambda i: (g_rhos[i], -i))
    G_hat = family[gi]
    h_rhos, best_H, best_H_rho = [], None, None
    for _ in range(sample_budget):
        Hc = sample_H(n, r, t, seed=rng.randrange(1 << 30), G=G_hat)
        if not is_berge_k3t_free(Hc.base, t):
            raise BergeError(f"sampled H member contains Berge-K_{{3,{t}}}: {Hc.to_json()}")
        rho = _rho(Hc.base)
        h_rhos.append(rho)
        if best_H_rho is None or rho > best_H_rho:
            best_H, best_H_rho = Hc, rho
    found, found_rho = _local_search(best_H.base, t, search_steps, rng)
    counter = found.to_dict() if found_rho > best_H_rho + 1e-9 else None
    return ConjectureReport(
        n, r, t, rho_F, total, len(family), g_rhos, gi, g_rhos[gi], h_rhos, best_H_rho,
        best_H.to_dict(), found_rho, counter,
    )


def certify_record(rec: ExtremalRecord) -> bool:
    """Reload every witness from JSON and re-check freeness with the oracle."""
    for H in (rec.edge_witness, rec.rho_witness):
        if H is None:
            continue
        again = build_linear(H.n, H.r, json.loads(H.to_json())["edges"])
        if not is_berge_k3t_free(again, rec.t):
            return False
    return True
