import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from berge_k3t.berge import contains_berge, k3t_skeleton, validate_witness
from berge_k3t.constructions import build_F, sample_H
from berge_k3t.errors import HypothesisUnmet, InvalidParams, NotAdjacent, StabilityViolation
from berge_k3t.harness import enumerate_linear
from berge_k3t.hypergraph import build_linear, co_edge
from berge_k3t.stability import (
    StabilityContext,
    check_lemma32,
    check_lemma33,
    context_problems,
    extract_witness,
    matching_witness,
    plant_context,
    scan_contexts,
    threshold,
)

from .conftest import linear_hypergraphs

# u=0, w=1, v=2; W = {5..9} sits on three u-lines, three w-lines and five v-lines
BUILT = build_linear(17, 3, [
    (0, 1, 3), (0, 2, 4),
    (0, 5, 6), (0, 7, 8), (0, 9, 10),
    (1, 5, 7), (1, 6, 9), (1, 8, 11),
    (2, 5, 12), (2, 6, 13), (2, 7, 14), (2, 8, 15), (2, 9, 16),
])
BUILT_CTX = StabilityContext(0, 1, 2, frozenset(range(5, 10)))


def sunflower_case1(r=3, size=5):
    """Each W vertex has its own u-, w- and v-line: every u-line is private."""
    edges = [(0, 1, 3), (0, 2, 4)]
    nxt = 5
    W = []
    for _ in range(size):
        y = nxt
        W.append(y)
        edges += [(0, y, y + 1), (1, y, y + 2), (2, y, y + 3)]
        nxt += 4
    return build_linear(nxt, r, edges), StabilityContext(0, 1, 2, frozenset(W))


def assert_trace_ok(H, ctx, t, trace):
    ys = trace.chosen[:t]
    assert len(set(ys)) == t and set(ys) <= ctx.W
    for x in (ctx.u, ctx.w, ctx.v):
        lines = [co_edge(H, x, y) for y in ys]
        assert None not in lines and len(set(lines)) == t


def test_threshold():
    assert threshold(3, 3) == 5
    assert threshold(4, 4) == 10


def test_scan_single_edge_empty():
    assert scan_contexts(build_linear(3, 3, [(0, 1, 2)]), 3) == []


def test_scan_F_empty_and_free():
    F = build_F(11, 3).base
    assert scan_contexts(F, 3) == []
    assert contains_berge(F, k3t_skeleton(3)) is None


def test_scan_purpose_built():
    assert scan_contexts(BUILT, 3) == [BUILT_CTX]
    assert context_problems(BUILT, BUILT_CTX) == []


def test_scan_guards():
    with pytest.raises(InvalidParams):
        scan_contexts(BUILT, 2)
    with pytest.raises(InvalidParams):
        scan_contexts(build_linear(3, 2, [(0, 1)]), 3)


def test_extract_purpose_built():
    wit, trace = extract_witness(BUILT, BUILT_CTX, 3)
    assert validate_witness(BUILT, k3t_skeleton(3), wit)
    assert len(set(wit.edge_map.values())) == 9
    # 8 is alone on its w-line {1, 8, 11}, so the u-line {0, 7, 8} is private
    assert trace.case == 2 and trace.k == 1 and trace.private_edges == [3]
    assert_trace_ok(BUILT, BUILT_CTX, 3, trace)
    assert contains_berge(BUILT, k3t_skeleton(3)) is not None


def test_extract_case1():
    H, ctx = sunflower_case1()
    wit, trace = extract_witness(H, ctx, 3)
    assert trace.case == 1 and trace.k == 5
    assert validate_witness(H, k3t_skeleton(3), wit)
    assert_trace_ok(H, ctx, 3, trace)


def test_threshold_boundary():
    short = StabilityContext(0, 1, 2, frozenset(range(5, 9)))
    assert len(short.W) == threshold(3, 3) - 1
    with pytest.raises(HypothesisUnmet):
        extract_witness(BUILT, short, 3)


def test_invalid_context_rejected():
    # 3 is on l_uw, so it is not admissible
    with pytest.raises(HypothesisUnmet):
        extract_witness(BUILT, StabilityContext(0, 1, 2, frozenset({3, 5, 6, 7, 8, 9})), 3)
    # 10 is not adjacent to w
    with pytest.raises(HypothesisUnmet):
        extract_witness(BUILT, StabilityContext(0, 1, 2, frozenset({5, 6, 7, 8, 10})), 3)
    with pytest.raises(HypothesisUnmet):
        extract_witness(BUILT, StabilityContext(0, 16, 2, BUILT_CTX.W), 3)


def test_plant_context_meets_hypothesis():
    for seed in range(30):
        H, ctx = plant_context(4, 3, seed, extra=seed % 3, noise=seed % 5)
        assert context_problems(H, ctx) == []
        assert len(ctx.W) >= threshold(4, 3)


@settings(max_examples=120, deadline=None)
@given(st.sampled_from([3, 4]), st.sampled_from([3, 4]), st.integers(0, 10**6),
       st.integers(0, 3), st.integers(0, 12))
def test_extraction_law(r, t, seed, extra, noise):
    H, ctx = plant_context(r, t, seed, extra=extra, noise=noise)
    wit, trace = extract_witness(H, ctx, t)
    assert validate_witness(H, k3t_skeleton(t), wit)
    assert_trace_ok(H, ctx, t, trace)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([3, 4]), st.integers(3, 7), st.integers(0, 10**6), st.integers(0, 3))
def test_matching_route_always_succeeds(r, t, seed, extra):
    H, ctx = plant_context(r, t, seed, extra=extra)
    wit = matching_witness(H, ctx, t)
    assert wit is not None and validate_witness(H, k3t_skeleton(t), wit)


@pytest.mark.parametrize("t, seed, extra, noise", [(5, 67, 1, 0), (6, 993, 1, 9)])
def test_greedy_stalls_on_line_cycle(t, seed, extra, noise):
    """u-lines and w-lines holding two W cells each form one long cycle; the greedy
    commits to the wrong perfect matching of it. The stall must surface, with a
    full dump, while the conclusion still holds."""
    H, ctx = plant_context(3, t, seed, extra=extra, noise=noise)
    with pytest.raises(StabilityViolation) as exc:
        extract_witness(H, ctx, t)
    err = exc.value
    assert err.hypergraph == H and err.context == ctx
    assert len(err.trace.chosen) < t
    assert err.trace.to_dict()["case"] == 2
    wit = matching_witness(H, ctx, t)
    assert validate_witness(H, k3t_skeleton(t), wit)


@pytest.mark.parametrize("seed, extra, rule", [(336, 0, "min_rule"), (2107, 1, "max_rule")])
def test_each_rule_is_needed(seed, extra, rule):
    H, ctx = plant_context(3, 4, seed, extra=extra)
    wit, _ = extract_witness(H, ctx, 4)
    assert validate_witness(H, k3t_skeleton(4), wit)
    with pytest.raises(StabilityViolation):
        extract_witness(H, ctx, 4, **{rule: False})


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_contrapositive_exhaustive(n):
    F = k3t_skeleton(3)
    for H in enumerate_linear(n, 3):
        if contains_berge(H, F) is None:
            assert scan_contexts(H, 3) == []


@settings(max_examples=60, deadline=None)
@given(linear_hypergraphs(r_values=(3, 4), max_n=12), st.integers(3, 4))
def test_contrapositive_random(H, t):
    if contains_berge(H, k3t_skeleton(t)) is None:
        assert scan_contexts(H, t) == []
    for ctx in scan_contexts(H, t)[:3]:
        try:
            wit, _ = extract_witness(H, ctx, t)
        except StabilityViolation:
            wit = matching_witness(H, ctx, t)
        assert validate_witness(H, k3t_skeleton(t), wit)


def test_lemma32_single_edge():
    rep = check_lemma32(build_linear(3, 3, [(0, 1, 2)]), 3, 0, 1)
    assert rep.ok
    assert [row[2] for row in rep.rows] == [0]
    with pytest.raises(NotAdjacent):
        check_lemma32(build_linear(4, 3, [(0, 1, 2)]), 3, 0, 3)


def test_lemma32_on_H_samples():
    for seed in range(5):
        Hc = sample_H(11, 3, 5, seed=seed)
        rep = check_lemma32(Hc.base, 5, Hc.u, Hc.w, certified_free=True)
        assert rep.ok and rep.rows
        assert all(row[4] >= 0 for row in rep.rows)


def test_lemma32_violation_on_dense_sunflower():
    # v=3 is a common neighbour of u=0, w=1 and carries 8 edges inside N_uw
    E = [(0, 1, 2), (0, 3, 20), (1, 3, 21)]
    E += [(0, 4 + 2 * i, 5 + 2 * i) for i in range(8)]
    E += [(1, 4 + i, 12 + i) for i in range(8)]
    E += [(3, 4 + i, 12 + (i + 1) % 8) for i in range(8)]
    H = build_linear(22, 3, E)
    rep = check_lemma32(H, 3, 0, 1)
    assert rep.violations == [("N1", 3, 8, 7, -1)]
    assert contains_berge(H, k3t_skeleton(3)) is not None


def test_lemma33_single_edge():
    rep = check_lemma33(build_linear(3, 3, [(0, 1, 2)]), 3, 0, 1)
    _, _, lhs, rhs, slack = rep.rows[0]
    assert (lhs, rhs, slack) == (1, 5, 4)
    assert rep.ok


def test_lemma33_on_H_samples():
    for seed in range(5):
        Hc = sample_H(11, 3, 5, seed=seed)
        rep = check_lemma33(Hc.base, 5, Hc.u, Hc.w)
        assert rep.ok and rep.rows[0][4] > 0


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_lemmas_exhaustive_free(n):
    F = k3t_skeleton(3)
    for H in enumerate_linear(n, 3, lambda G: contains_berge(G, F) is None):
        for (a, b) in H.pair_index:
            for u, w in ((a, b), (b, a)):
                assert check_lemma32(H, 3, u, w).ok
                assert check_lemma33(H, 3, u, w).ok
