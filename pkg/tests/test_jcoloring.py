from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from chromcomp.coloring import Coloring, chromatic_number
from chromcomp.completion import zeta
from chromcomp.generators import complete, complete_multipartite, cycle, paw, path, petersen, star
from chromcomp.graph import Graph, disjoint_union
from chromcomp.io import parse_graph6
from chromcomp.jcoloring import completion_chain, is_j_coloring, j_number, scc_implies_j_colorable, zeta_j


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


def test_is_j_coloring_examples():
    assert is_j_coloring(cycle(6), Coloring((0, 1, 2, 0, 1, 2)))
    assert not is_j_coloring(cycle(6), Coloring((0, 1, 0, 1, 0, 2)))
    assert not is_j_coloring(path(3), Coloring((0, 0, 1)))
    assert not is_j_coloring(path(3), Coloring((0, 1)))


@pytest.mark.parametrize(
    "g, j, zj",
    [
        (path(4), 2, 1),
        (cycle(6), 3, 6),
        (complete_multipartite(2, 2, 2), 3, 0),
        (star(4), 2, 0),
        (cycle(8), 2, 8),
        (complete(4), 4, 0),
    ],
)
def test_j_fixtures(g, j, zj):
    r = zeta_j(g)
    assert r.exists and (r.j_number, r.zeta_j) == (j, zj)
    assert is_j_coloring(g, r.witness)
    assert len(r.e_j) == zj


@pytest.mark.parametrize("g", [cycle(5), paw(), petersen(), disjoint_union(complete(3), complete(1))])
def test_not_j_colourable(g):
    assert j_number(g) is None
    r = zeta_j(g)
    assert not r.exists and r.zeta_j is None
    assert r.to_json()["e_j"] is None


@pytest.mark.parametrize("n", range(3, 16))
def test_cycles(n):
    expected = 3 if n % 3 == 0 else (2 if n % 2 == 0 else None)
    assert j_number(cycle(n), cap=15) == expected


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_j_number_matches_oracle_and_degree_bound(g):
    j = j_number(g)
    assert j == oracle.j_number(g.n, oracle.edge_set(g))
    if j is not None:
        assert chromatic_number(g) <= j <= g.min_degree() + 1
        assert zeta_j(g).zeta_j == oracle.zeta_j(g.n, oracle.edge_set(g))


def test_completion_chain_c6():
    ch = completion_chain(cycle(6))
    assert (ch.zeta, ch.zeta_phi, ch.zeta_j) == (3, [3], 6)
    assert ch.left_holds and ch.right_holds
    assert ch.left_equal and not ch.right_equal
    assert not ch.all_equal


def test_completion_chain_p4_is_congruent():
    ch = completion_chain(path(4))
    assert ch.all_equal and ch.congruent


def test_completion_chain_without_j_colouring():
    ch = completion_chain(cycle(5))
    assert ch.zeta_j is None and ch.right_holds is None
    assert ch.left_holds and sorted(ch.zeta_phi) == [3] * 5


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_chain_inequalities(g):
    ch = completion_chain(g)
    assert ch.left_holds
    assert ch.right_holds is not False
    assert max(ch.zeta_phi) == zeta(g).zeta


def test_scc_does_not_imply_j_colourable():
    chk = scc_implies_j_colorable(parse_graph6("D}_"))
    assert chk.scc and not chk.j_colorable and not chk.holds


def test_scc_implication_holds_on_even_cycle():
    chk = scc_implies_j_colorable(cycle(6))
    assert chk.scc and chk.j_colorable and chk.holds
