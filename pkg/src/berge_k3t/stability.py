"""Witness extraction from a large common co-neighbourhood, and the lemma checkers.

Given adjacent ``u, w``, a neighbour ``v`` of ``u`` and a set ``W`` of common
neighbours of ``v, u, w`` lying on pairwise distinct edges through ``v``, a
set of size at least ``(t-1)(r-1)+1`` forces a Berge-K_{3,t}. The
:func:`extract_witness` routine finds it with the greedy selection rules of
the stability argument, recording every decision in a :class:`SelectionTrace`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .berge import BergeWitness, k3t_skeleton, validate_witness
from .bounds import eval_f
from .errors import HypothesisUnmet, InvalidParams, NotAdjacent, StabilityViolation
from .hypergraph import (
    LinearHypergraph,
    adjacent,
    build_linear,
    co_edge,
    common_neighborhood,
    edge_profile,
    partition_neighborhood,
)


def threshold(r: int, t: int) -> int:
    return (t - 1) * (r - 1) + 1


@dataclass(frozen=True)
class StabilityContext:
    u: int
    w: int
    v: int
    W: frozenset

    def to_dict(self) -> dict:
        return {"u": self.u, "w": self.w, "v": self.v, "W": sorted(self.W)}


@dataclass
class SelectionStep:
    edge: int
    candidates: list
    chosen: int | None = None
    min_value: int | None = None
    tied: list = field(default_factory=list)
    profile: tuple = ()
    residual: frozenset = frozenset()


@dataclass
class SelectionTrace:
    case: int
    k: int
    private_edges: list
    remaining_order: list
    chosen: list
    steps: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "k": self.k,
            "private_edges": self.private_edges,
            "remaining_order": self.remaining_order,
            "chosen": self.chosen,
            "steps": [
                {
                    "edge": s.edge,
                    "candidates": s.candidates,
                    "chosen": s.chosen,
                    "min_value": s.min_value,
                    "tied": s.tied,
                    "profile": list(s.profile),
                    "residual": sorted(s.residual),
                }
                for s in self.steps
            ],
        }


def _admissible_pool(H: LinearHypergraph, u: int, w: int, v: int) -> set:
    pool = set(common_neighborhood(H, (v, u, w)))
    for a, b in ((v, u), (v, w), (u, w)):
        e = co_edge(H, a, b)
        if e is not None:
            pool -= set(e)
    return pool


def context_problems(H: LinearHypergraph, ctx: StabilityContext) -> list[str]:
    """Reasons ``ctx`` violates the structural hypothesis (empty when it holds)."""
    u, w, v, W = ctx.u, ctx.w, ctx.v, ctx.W
    out = []
    if not adjacent(H, u, w):
        return [f"u={u} and w={w} are not adjacent"]
    if v == w or not adjacent(H, u, v):
        return [f"v={v} is not in N_u minus w"]
    extra = set(W) - _admissible_pool(H, u, w, v)
    if extra:
        out.append(f"W has vertices outside the admissible pool: {sorted(extra)}")
    seen = {}
    for y in sorted(W):
        if y == v or not adjacent(H, v, y):
            continue
        i = H.pair_index[(min(v, y), max(v, y))]
        if i in seen:
            out.append(f"W vertices {seen[i]} and {y} share the edge through v")
        seen[i] = y
    return out


def scan_contexts(H: LinearHypergraph, t: int) -> list[StabilityContext]:
    """All ordered (u, w, v) whose maximal thinned W reaches the threshold."""
    if t < 3 or H.r < 3:
        raise InvalidParams(f"scan needs t >= 3 and r >= 3, got t={t}, r={H.r}")
    need = threshold(H.r, t)
    out = []
    for u in range(H.n):
        Nu = sorted(H.neighbors(u))
        for w in Nu:
            for v in Nu:
                if v == w:
                    continue
                pool = _admissible_pool(H, u, w, v)
                if len(pool) < need:
                    continue
                by_edge = {}
                for y in sorted(pool):
                    by_edge.setdefault(H.pair_index[(min(v, y), max(v, y))], y)
                if len(by_edge) >= need:
                    out.append(StabilityContext(u, w, v, frozenset(by_edge.values())))
    return out


def _line(H, a, b) -> frozenset:
    return frozenset(H.edges[H.pair_index[(min(a, b), max(a, b))]])


def extract_witness(H: LinearHypergraph, ctx: StabilityContext, t: int,
                    min_rule: bool = True, max_rule: bool = True):
    """Extract an explicit Berge-K_{3,t} from a context meeting the hypothesis.

    Returns ``(witness, trace)``. The witness uses skeleton vertices 0, 1, 2
    for ``v, u, w`` and 3.. for the selected ``y_1..y_t``.

    ``min_rule`` and ``max_rule`` switch off the two selection rules (the
    least candidate is then taken); only useful for ablation experiments.

    Raises ``HypothesisUnmet`` if the context is invalid or ``W`` is below
    ``(t-1)(r-1)+1``, and ``StabilityViolation`` if the selection stalls.
    """
    problems = context_problems(H, ctx)
    if problems:
        raise HypothesisUnmet("; ".join(problems))
    if t < 1:
        raise HypothesisUnmet(f"t must be positive, got {t}")
    need = threshold(H.r, t)
    if len(ctx.W) < need:
        raise HypothesisUnmet(f"|W| = {len(ctx.W)} below the threshold {need}")

    u, w, v = ctx.u, ctx.w, ctx.v
    W = frozenset(ctx.W)
    lw = {y: _line(H, w, y) for y in W}
    through_u = [i for i in H.incidence[u] if W.intersection(H.edges[i])]

    private = {}
    for i in through_u:
        own = sorted(y for y in W.intersection(H.edges[i]) if lw[y] & W == {y})
        if own:
            private[i] = own[0]
    private_edges = [i for i in through_u if i in private]
    rest = [i for i in through_u if i not in private]
    k = len(private_edges)

    if k >= t - 1:
        picked = private_edges[: t - 1]
        chosen = [private[i] for i in picked]
        covered = set().union(*(H.edges[i] for i in picked)) if picked else set()
        left = sorted(W - covered)
        chosen.append(left[0])
        trace = SelectionTrace(1, k, private_edges, [], chosen)
    else:
        chosen = [private[i] for i in private_edges]
        Wp = frozenset(y for y in W if any(y in H.edges[i] for i in rest))
        order = sorted(rest, key=lambda i: (len(W.intersection(H.edges[i])), i))
        trace = SelectionTrace(2, k, private_edges, order, chosen)
        used_w: set = set()
        used_u: set = set()
        for pos, i in enumerate(order):
            if len(chosen) >= t:
                break
            step = _select_from_edge(H, i, order[pos + 1:], W, Wp, lw, used_w, used_u, min_rule, max_rule)
            trace.steps.append(step)
            if step.chosen is None:
                continue
            chosen.append(step.chosen)
            used_w |= lw[step.chosen]
            used_u |= set(H.edges[i])
        if len(chosen) < t:
            raise StabilityViolation(
                f"selection stalled with {len(chosen)} of {t} vertices",
                hypergraph=H,
                context=ctx,
                trace=trace,
            )

    witness = _assemble(H, v, u, w, chosen[:t])
    if not validate_witness(H, k3t_skeleton(t), witness):
        raise StabilityViolation(
            "assembled witness failed validation", hypergraph=H, context=ctx, trace=trace
        )
    return witness, trace


def _select_from_edge(H, i, later, W, Wp, lw, used_w, used_u, min_rule=True, max_rule=True) -> SelectionStep:
    e = H.edges[i]
    cands = sorted(y for y in Wp.intersection(e) if y not in used_w)
    step = SelectionStep(edge=i, candidates=cands)
    if not cands:
        return step
    residual = Wp - used_u
    step.residual = frozenset(residual)
    # min-rule: fewest residual W' vertices on the w-line
    sizes = {y: len(lw[y] & residual) for y in cands}
    low = min(sizes.values())
    tied = [y for y in cands if sizes[y] == low] if min_rule else cands
    step.min_value = low
    step.tied = tied
    # max-rule: lexicographically largest cumulative overlap with the
    # remaining edges, taken in descending order of their unblocked W' size
    estar = sorted(later, key=lambda j: (-len(Wp.intersection(H.edges[j]) - used_w), j))

    def profile(y):
        acc, prof = set(), []
        for j in estar:
            acc |= W.intersection(H.edges[j])
            prof.append(len(lw[y] & acc))
        return tuple(prof)

    best = max(tied, key=lambda y: (profile(y), -y)) if max_rule else tied[0]
    step.chosen = best
    step.profile = profile(best)
    return step


def _assemble(H, v, u, w, ys) -> BergeWitness:
    core = {0: v, 1: u, 2: w}
    em = {}
    for j, y in enumerate(ys):
        core[3 + j] = y
        for a, x in ((0, v), (1, u), (2, w)):
            em[(a, 3 + j)] = H.pair_index[(min(x, y), max(x, y))]
    return BergeWitness(core, dict(sorted(em.items())))


def plant_context(r: int, t: int, seed: int | None = None, extra: int = 0, noise: int = 0):
    """Random linear r-graph with a planted context whose W meets the threshold.

    The ``W`` vertices are cells of a grid whose rows are edges through ``u``
    and whose columns are edges through ``w``; rows and columns hold at most
    ``r-1`` cells and each cell gets its own edge through ``v``. ``extra``
    adds cells beyond the threshold and ``noise`` attempts that many random
    extra edges (kept only when linearity survives). Returns ``(H, ctx)``.
    """
    rng = random.Random(seed)
    size = threshold(r, t) + extra
    nrows = rng.randint(-(-size // (r - 1)), size)
    ncols = rng.randint(-(-size // (r - 1)), size)
    cells = set()
    row_load = [0] * nrows
    col_load = [0] * ncols
    free = [(a, b) for a in range(nrows) for b in range(ncols)]
    rng.shuffle(free)
    for a, b in free:
        if len(cells) == size:
            break
        if row_load[a] < r - 1 and col_load[b] < r - 1:
            cells.add((a, b))
            row_load[a] += 1
            col_load[b] += 1
    if len(cells) < size:
        return plant_context(r, t, rng.randrange(1 << 30), extra, noise)

    u, w, v = 0, 1, 2
    nxt = [3]

    def fresh(count):
        out = list(range(nxt[0], nxt[0] + count))
        nxt[0] += count
        return out

    v_on_l = rng.random() < 0.5
    l_uw = [u, w] + ([v] if v_on_l else []) + fresh(r - 2 - (1 if v_on_l else 0))
    edges = [l_uw]
    if not v_on_l:
        edges.append([u, v] + fresh(r - 2))
    cell_vertex = {c: fresh(1)[0] for c in sorted(cells)}
    for a in range(nrows):
        mine = [cell_vertex[c] for c in sorted(cells) if c[0] == a]
        if mine:
            edges.append([u] + mine + fresh(r - 1 - len(mine)))
    for b in range(ncols):
        mine = [cell_vertex[c] for c in sorted(cells) if c[1] == b]
        if mine:
            edges.append([w] + mine + fresh(r - 1 - len(mine)))
    for y in cell_vertex.values():
        edges.append([v, y] + fresh(r - 2))
    n = nxt[0]
    H = build_linear(n, r, edges)
    if noise:
        covered = set(H.pair_index)
        for _ in range(noise):
            e = tuple(sorted(rng.sample(range(3, n), r)))
            pairs = {(e[a], e[b]) for a in range(r) for b in range(a + 1, r)}
            if pairs & covered:
                continue
            covered |= pairs
            edges.append(list(e))
        H = build_linear(n, r, edges)
    return H, StabilityContext(u, w, v, frozenset(cell_vertex.values()))


@dataclass
class LemmaReport:
    """Outcome of one lemma check on an adjacent pair; ``violations`` empty means it holds."""

    u: int
    w: int
    t: int
    rows: list
    violations: list
    certified_free: bool | None = None

    @property
    def ok(self) -> bool:
        return not self.violations


def check_lemma32(H: LinearHypergraph, t: int, u: int, w: int, certified_free: bool | None = None) -> LemmaReport:
    """Evaluate the three co-neighbourhood edge-count inequalities at every relevant vertex.

    Each row is ``(part, v, value, bound, margin)`` with part ``"N1"``,
    ``"N2"`` or ``"l_uw"``. The inequalities are only guaranteed on
    Berge-K_{3,t}-free hypergraphs; ``certified_free`` is recorded as given.
    """
    part = partition_neighborhood(H, u, w)
    prof = edge_profile(H, common_neighborhood(H, (u, w)))
    r = H.r
    rows, bad = [], []
    specs = (
        ("N1", part.n1, range(2, r + 1), t * (r - 1) + 1),
        ("N2", part.n2, range(1, r), t * (r - 1)),
        ("l_uw", part.co_edge_rest - {w}, range(2, r + 1), (t - 1) * (r - 1) + 1),
    )
    for name, verts, ks, bound in specs:
        for x in sorted(verts):
            val = prof.vertex_sum(x, ks)
            row = (name, x, val, bound, bound - val)
            rows.append(row)
            if val > bound:
                bad.append(row)
    return LemmaReport(u, w, t, rows, bad, certified_free)


def check_lemma33(H: LinearHypergraph, t: int, u: int, w: int, certified_free: bool | None = None) -> LemmaReport:
    """Compare the degree sum over N_u minus w with (r-1) f(n, r, t, d_u, d_w) - d_w exactly."""
    if not adjacent(H, u, w):
        raise NotAdjacent(f"vertices {u} and {w} are not adjacent")
    r = H.r
    du, dw = int(H.degrees[u]), int(H.degrees[w])
    lhs = sum(int(H.degrees[x]) for x in H.neighbors(u) if x != w)
    rhs = (r - 1) * eval_f(H.n, r, t, Fraction(du), Fraction(dw)) - dw
    row = ("sum", u, Fraction(lhs), rhs, rhs - lhs)
    return LemmaReport(u, w, t, [row], [row] if lhs > rhs else [], certified_free)


def matching_witness(H: LinearHypergraph, ctx: StabilityContext, t: int) -> BergeWitness | None:
    """Berge-K_{3,t} from a maximum matching between u-lines and w-lines.

    Each ``y`` in ``W`` joins the edge ``l_uy`` to the edge ``l_wy``; a
    matching of size ``t`` picks ``y_1..y_t`` with distinct lines on both
    sides. Every line carries at most ``r-1`` vertices of ``W``, so a context
    meeting the threshold always has such a matching. Independent of the
    greedy selection in :func:`extract_witness`.
    """
    if context_problems(H, ctx):
        return None
    ys = sorted(ctx.W)
    rows = sorted({H.pair_index[(min(ctx.u, y), max(ctx.u, y))] for y in ys})
    cols = sorted({H.pair_index[(min(ctx.w, y), max(ctx.w, y))] for y in ys})
    ri = {e: i for i, e in enumerate(rows)}
    ci = {e: i for i, e in enumerate(cols)}
    cell = {}
    for y in ys:
        a = ri[H.pair_index[(min(ctx.u, y), max(ctx.u, y))]]
        b = ci[H.pair_index[(min(ctx.w, y), max(ctx.w, y))]]
        cell[(a, b)] = y
    keys = sorted(cell)
    M = csr_matrix(
        (np.ones(len(keys)), ([a for a, _ in keys], [b for _, b in keys])),
        shape=(len(rows), len(cols)),
    )
    match = maximum_bipartite_matching(M, perm_type="column")
    chosen = sorted(cell[(a, int(b))] for a, b in enumerate(match) if b >= 0)
    if len(chosen) < t:
        return None
    return _assemble(H, ctx.v, ctx.u, ctx.w, chosen[:t])
