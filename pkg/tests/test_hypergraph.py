import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from berge_k3t.errors import (
    DuplicateEdge,
    EmptySet,
    InvalidParams,
    LinearityViolation,
    NonUniformEdge,
    NotAdjacent,
    SameVertex,
    VertexOutOfRange,
)
from berge_k3t.hypergraph import (
    adjacent,
    build_linear,
    co_edge,
    common_neighborhood,
    degree,
    edge_profile,
    from_dict,
    is_connected,
    max_degree,
    partition_neighborhood,
)

from .conftest import linear_hypergraphs


def test_single_edge():
    H = build_linear(3, 3, [{0, 1, 2}])
    assert H.m == 1
    assert len(H.pair_index) == 3


def test_two_edges_pair_index(star_pair):
    assert star_pair.pair_index[(0, 1)] == 0
    assert star_pair.pair_index[(0, 3)] == 1


def test_linearity_violation_reports_pair():
    with pytest.raises(LinearityViolation) as exc:
        build_linear(5, 3, [{0, 1, 2}, {0, 1, 4}])
    assert exc.value.pair == (0, 1)


@pytest.mark.parametrize(
    "n, r, edges, err",
    [
        (5, 3, [(0, 1)], NonUniformEdge),
        (5, 3, [(0, 1, 1)], NonUniformEdge),
        (5, 3, [(0, 1, 5)], VertexOutOfRange),
        (5, 3, [(0, 1, 2), (2, 1, 0)], DuplicateEdge),
        (2, 3, [], InvalidParams),
        (3, 1, [], InvalidParams),
    ],
)
def test_build_errors(n, r, edges, err):
    with pytest.raises(err):
        build_linear(n, r, edges)


def test_edge_order_preserved_and_sorted():
    H = build_linear(6, 3, [(5, 4, 3), (2, 1, 0)])
    assert H.edges == ((3, 4, 5), (0, 1, 2))
    assert H.canonical_edges() == ((0, 1, 2), (3, 4, 5))


def test_n_equals_r_is_legal():
    assert build_linear(4, 4, [(0, 1, 2, 3)]).m == 1


def test_co_edge():
    H = build_linear(3, 3, [(0, 1, 2)])
    assert co_edge(H, 0, 1) == (0, 1, 2)
    with pytest.raises(VertexOutOfRange):
        co_edge(H, 0, 3)
    assert co_edge(build_linear(4, 3, [(0, 1, 2)]), 0, 3) is None
    with pytest.raises(SameVertex):
        co_edge(H, 1, 1)


def test_co_edge_non_adjacent(star_pair):
    assert co_edge(star_pair, 1, 3) is None


def test_common_neighborhood(three_edges):
    H1 = build_linear(3, 3, [(0, 1, 2)])
    assert common_neighborhood(H1, {0, 1}) == {2}
    assert three_edges.neighbors(0) == {1, 2, 3, 4}
    assert three_edges.neighbors(1) == {0, 2, 3, 5}
    assert common_neighborhood(three_edges, [0, 1]) == {2, 3}
    assert common_neighborhood(three_edges, [0]) == three_edges.neighbors(0)
    with pytest.raises(EmptySet):
        common_neighborhood(three_edges, [])


def test_partition_neighborhood(three_edges):
    H1 = build_linear(3, 3, [(0, 1, 2)])
    p = partition_neighborhood(H1, 0, 1)
    assert p.n1 == set() and p.n2 == set() and p.co_edge_rest == {1, 2}
    p = partition_neighborhood(three_edges, 0, 1)
    assert p.n1 == {3} and p.n2 == {4} and p.co_edge_rest == {1, 2}
    with pytest.raises(NotAdjacent):
        partition_neighborhood(build_linear(4, 3, [(0, 1, 2)]), 0, 3)


def test_edge_profile(star_pair):
    H1 = build_linear(3, 3, [(0, 1, 2)])
    prof = edge_profile(H1, {0, 1})
    assert prof.counts.tolist() == [0, 0, 1, 0]
    prof = edge_profile(star_pair, {1, 2, 3})
    assert prof.e(2) == 1 and prof.e(1) == 1 and prof.e(0) == 0
    assert prof.e(2, 1) == 1 and prof.e(1, 4) == 1
    assert edge_profile(star_pair, set()).e(0) == star_pair.m


def test_degree_and_connectivity(star_pair):
    H1 = build_linear(3, 3, [(0, 1, 2)])
    assert [degree(H1, v) for v in range(3)] == [1, 1, 1]
    assert degree(star_pair, 0) == 2
    assert is_connected(star_pair)
    assert not is_connected(build_linear(6, 3, [(0, 1, 2), (3, 4, 5)]))
    assert max_degree(star_pair) == 2
    with pytest.raises(VertexOutOfRange):
        degree(star_pair, 9)


def test_isolated_vertex_disconnects():
    assert not is_connected(build_linear(4, 3, [(0, 1, 2)]))


def test_json_round_trip(three_edges):
    again = from_dict(json.loads(three_edges.to_json()))
    assert again == three_edges
    assert again.pair_index == three_edges.pair_index


def test_json_loader_validates():
    with pytest.raises(LinearityViolation):
        from_dict({"n": 5, "r": 3, "edges": [[0, 1, 2], [0, 1, 3]]})


@settings(max_examples=150, deadline=None)
@given(linear_hypergraphs())
def test_structural_invariants(H):
    # handshake
    assert int(H.degrees.sum()) == H.r * H.m
    # pair index round trip and coverage
    covered = set()
    for i, e in enumerate(H.edges):
        for a in e:
            for b in e:
                if a < b:
                    assert co_edge(H, a, b) == e
                    covered.add((a, b))
    assert set(H.pair_index) == covered
    # a vertex's edges use disjoint sets of r-1 neighbours
    if H.n > 1:
        assert max_degree(H) <= (H.n - 1) / (H.r - 1)
    for v in range(H.n):
        assert v not in H.neighbors(v)


@settings(max_examples=150, deadline=None)
@given(linear_hypergraphs(r_values=(3, 4)), st.data())
def test_partition_and_neighbourhood_counts(H, data):
    pairs = sorted(H.pair_index)
    if not pairs:
        return
    a, b = data.draw(st.sampled_from(pairs))
    u, w = data.draw(st.permutations([a, b]))
    p = partition_neighborhood(H, u, w)
    assert not (p.n1 & p.n2) and not (p.n1 & p.co_edge_rest) and not (p.n2 & p.co_edge_rest)
    assert p.n1 | p.n2 | p.co_edge_rest == H.neighbors(u)
    assert p.n1 <= H.neighbors(w)
    assert not (p.n2 & (H.neighbors(w) | {w}))

    prof = edge_profile(H, common_neighborhood(H, (u, w)))
    r = H.r
    assert int(prof.counts.sum()) == H.m
    assert np.array_equal(prof.per_vertex.sum(axis=1), H.degrees)
    for v in p.n1 | (p.co_edge_rest - {w}):
        assert prof.e(0, v) == 0
    for v in p.n2:
        assert prof.e(r, v) == 0
    # four-term degree decomposition
    direct = sum(int(H.degrees[v]) for v in H.neighbors(u))
    split = (
        sum(prof.vertex_sum(v, range(1, r + 1)) for v in p.n1)
        + sum(prof.vertex_sum(v, range(0, r)) for v in p.n2)
        + sum(prof.vertex_sum(v, range(1, r + 1)) for v in p.co_edge_rest - {w})
        + int(H.degrees[w])
    )
    assert direct == split
    assert adjacent(H, u, w)
