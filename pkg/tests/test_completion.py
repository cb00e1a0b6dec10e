from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from chromcomp.coloring import Coloring, VertexPartition, chromatic_number, is_proper
from chromcomp.completion import (
    balanced_parts,
    completion_count,
    completion_edges,
    completion_graph,
    lucky_sum_product,
    lucky_sum_product_bruteforce,
    near_lucky_coloring,
    near_lucky_order,
    pseudo_completion_size,
    zeta,
    zeta_upper_bounds,
)
from chromcomp.errors import CapExceeded, ContractError
from chromcomp.generators import complete, complete_multipartite, cycle, paw, path, star, wheel
from chromcomp.graph import Graph, disjoint_union, join
from chromcomp.io import parse_graph6


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


def P(*classes):
    return VertexPartition.from_sets(classes)


@pytest.mark.parametrize("theta, size", [((2, 2), 4), ((1, 1, 1, 1), 6), ((3, 2, 2), 16), ((), 0), ((5,), 0)])
def test_pseudo_completion_size(theta, size):
    assert pseudo_completion_size(theta) == size


def test_pseudo_completion_size_rejects_empty_class():
    with pytest.raises(ContractError):
        pseudo_completion_size((2, 0, 1))


def test_completion_edges_examples():
    assert completion_edges(path(4), Coloring((0, 1, 0, 1))) == [(0, 3)]
    assert completion_edges(complete(3), Coloring((0, 1, 2))) == []
    assert completion_edges(cycle(4), Coloring((0, 1, 0, 1))) == []


def test_completion_rejects_improper():
    with pytest.raises(ContractError):
        completion_edges(path(3), Coloring((0, 0, 1)))


# exact values; the expected numbers come from the brute-force oracle


@pytest.mark.parametrize("n", range(2, 9))
def test_zeta_of_complete_graph_is_zero(n):
    assert zeta(complete(n)).zeta == 0


FIXTURES = [
    # graph, chi, zeta, Lucky partitions
    (cycle(5), 3, 3, 5),
    (path(4), 2, 1, 1),
    (paw(), 3, 1, 2),
    (cycle(6), 2, 3, 1),
    (complete_multipartite(2, 2, 2), 3, 0, 1),
    (star(4), 2, 0, 1),
    (cycle(8), 2, 8, 1),
    (wheel(4), 3, 0, 1),
    (disjoint_union(path(4), path(4)), 2, 10, 2),
    (disjoint_union(complete(2), complete(2)), 2, 2, 2),
    (disjoint_union(complete(3), complete(1)), 3, 2, 3),
    (join(path(4), path(4)), 4, 2, 1),
    (disjoint_union(cycle(5), cycle(5)), 3, 23, 100),
]


@pytest.mark.parametrize("g, chi, z, lucky", FIXTURES)
def test_zeta_fixtures(g, chi, z, lucky):
    r = zeta(g)
    assert (r.chi, r.zeta, len(r.lucky_partitions)) == (chi, z, lucky)


@pytest.mark.parametrize("g, chi, z, lucky", FIXTURES[:9])
def test_zeta_fixtures_agree_with_oracle(g, chi, z, lucky):
    oz, parts, _ = oracle.zeta(g.n, oracle.edge_set(g))
    assert (oz, len(parts)) == (z, lucky)
    assert {p.classes for p in zeta(g).lucky_partitions} == parts


def test_path_and_paw_lucky_partitions():
    assert zeta(path(4)).lucky_partitions == [P({0, 2}, {1, 3})]
    assert zeta(path(4)).witness_edge_sets == [[(0, 3)]]
    # paw: triangle 0,1,2 and pendant 3 on vertex 0
    assert sorted(zeta(paw()).lucky_partitions) == sorted([P({0}, {1}, {2, 3}), P({0}, {1, 3}, {2})])


def test_lucky_colourings_are_proper_and_attain_zeta():
    g = cycle(7)
    r = zeta(g)
    for c, es in zip(r.lucky_colorings, r.witness_edge_sets):
        assert is_proper(g, c)
        assert completion_count(g, c) == r.zeta == len(es)
        assert completion_edges(g, c) == es


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_zeta_matches_oracle(g):
    r = zeta(g)
    oz, parts, edge_sets = oracle.zeta(g.n, oracle.edge_set(g))
    assert r.zeta == oz
    assert {p.classes for p in r.lucky_partitions} == parts
    assert sorted(r.witness_edge_sets) == sorted(sorted(tuple(sorted(e)) for e in es) for es in edge_sets)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_completion_is_never_complete_unless_g_is(g):
    r = zeta(g)
    for es in r.witness_edge_sets:
        assert completion_graph(g, es).is_complete() == g.is_complete()
        # adding edges never raises chi
        assert chromatic_number(completion_graph(g, es)) == r.chi


def test_zeta_cap():
    with pytest.raises(CapExceeded, match="bounds"):
        zeta(cycle(13))
    # balanced classes 5, 4, 4: (169 - 57) / 2 - 13
    assert zeta(cycle(13), cap=13).zeta == 43


def test_zeta_empty_graph():
    r = zeta(Graph.empty(0))
    assert (r.zeta, r.chi) == (0, 0)


# balanced sum-product


@pytest.mark.parametrize("n, p, value", [(5, 2, 6), (7, 3, 16), (4, 4, 6), (6, 1, 0), (6, 3, 12)])
def test_lucky_sum_product_values(n, p, value):
    assert lucky_sum_product(n, p) == value


def test_balanced_parts():
    assert balanced_parts(7, 3) == [3, 2, 2]
    assert balanced_parts(6, 3) == [2, 2, 2]


@pytest.mark.parametrize("n, p", [(3, 4), (3, 0), (0, 1)])
def test_lucky_sum_product_rejects_bad_arguments(n, p):
    with pytest.raises(ContractError):
        lucky_sum_product(n, p)


@pytest.mark.parametrize("n, p", [(n, p) for n in range(1, 11) for p in range(1, min(n, 5) + 1)])
def test_lucky_sum_product_matches_compositions_oracle(n, p):
    best, args = oracle.max_sum_product(n, p)
    assert lucky_sum_product(n, p) == best
    assert args == {tuple(balanced_parts(n, p))}


# bounds and the near-Lucky greedy


@pytest.mark.parametrize(
    "g, complement_bound, lucky_bound",
    [(cycle(5), 5, 3), (complete(4), 0, 0), (path(4), 3, 1), (cycle(6), 9, 3)],
)
def test_upper_bounds(g, complement_bound, lucky_bound):
    b = zeta_upper_bounds(g)
    assert (b.complement_bound, b.lucky_bound) == (complement_bound, lucky_bound)
    assert b.zeta_exact is None
    b = zeta_upper_bounds(g, zeta_exact=zeta(g).zeta)
    b.check()


def test_near_lucky_c5():
    c, count = near_lucky_coloring(cycle(5))
    assert is_proper(cycle(5), c)
    assert sorted(c.theta, reverse=True) == [2, 2, 1]
    assert count == 3


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
def test_near_lucky_even_cycles(n):
    c, count = near_lucky_coloring(cycle(n))
    assert c.k == 2
    assert count == n * n // 4 - n


def test_near_lucky_complete_graph():
    c, count = near_lucky_coloring(complete(4))
    assert c.k == 4 and count == 0


def test_near_lucky_order_is_degree_then_label():
    assert near_lucky_order(paw()) == [0, 1, 2, 3]
    assert near_lucky_order(star(3)) == [0, 1, 2, 3]
    assert near_lucky_order(path(4)) == [1, 2, 0, 3]


def test_near_lucky_can_undershoot_zeta():
    # triangle with two pendants on one vertex: greedy ends with classes 1,3,1
    g = parse_graph6("D{_")
    c, count = near_lucky_coloring(g)
    assert is_proper(g, c)
    assert (count, zeta(g).zeta) == (2, 3)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_near_lucky_is_always_proper(g):
    c, count = near_lucky_coloring(g)
    assert is_proper(g, c)
    assert c.k >= chromatic_number(g)
    assert count == completion_count(g, c)


def test_bruteforce_sum_product_reports_maximisers():
    assert lucky_sum_product_bruteforce(7, 3) == (16, [(3, 2, 2)])
    assert lucky_sum_product_bruteforce(4, 4) == (6, [(1, 1, 1, 1)])
