import csv
import io

import pytest

from chromcomp.coloring import Coloring
from chromcomp.completion import zeta
from chromcomp.errors import ContractError
from chromcomp.generators import complete, cycle, paw, path, star
from chromcomp.graph import disjoint_union
from chromcomp.io import parse_graph6
from chromcomp.operations import (
    CSV_FIELDS,
    best_union_lower_bound,
    check_join_identity,
    check_union_bound,
    conjecture_row,
    cross_term,
    exhaustive_pairs,
    pair_from_seed,
    random_pairs,
    union_conjecture_experiment,
    union_lower_bound,
)


def test_cross_term():
    assert cross_term((2, 2), (2, 2)) == 8
    assert cross_term((1, 1, 1), (1, 0, 0)) == 2
    assert cross_term((3,), (2,)) == 0


@pytest.mark.parametrize(
    "g, h, rhs",
    [
        (path(4), path(4), 10),
        (complete(2), complete(2), 2),
        (complete(3), complete(1), 2),
        (cycle(5), cycle(5), 23),
    ],
)
def test_union_bound_examples(g, h, rhs):
    rep = check_union_bound(g, h)
    assert rep.bound_rhs == rhs
    assert rep.zeta_combined >= rep.bound_rhs
    assert rep.zeta_combined == zeta(disjoint_union(g, h)).zeta


def test_union_lower_bound_with_explicit_colourings():
    c = Coloring((0, 1, 0, 1))
    assert union_lower_bound(path(4), path(4), c, c) == 10


def test_union_lower_bound_rejects_non_lucky():
    # a proper 3-colouring of P4 is not chromatic, so not Lucky
    with pytest.raises(ContractError):
        union_lower_bound(path(4), path(4), Coloring((0, 1, 2, 0)), Coloring((0, 1, 0, 1)))


def test_best_alignment_may_skip_palette_entries():
    best = best_union_lower_bound(parse_graph6("A?"), parse_graph6("C}"))
    assert best.rhs == 6
    assert len(best.palette_h) == 4


@pytest.mark.parametrize(
    "g, h, z, scc",
    [
        (cycle(6), cycle(6), 6, True),
        (complete(1), cycle(4), 0, True),
        (path(4), path(4), 2, True),
        (paw(), path(4), 2, False),
        (cycle(5), complete(2), 3, False),
    ],
)
def test_join_identity_fixtures(g, h, z, scc):
    rep = check_join_identity(g, h)
    assert rep.equality and rep.zeta_combined == z
    assert rep.scc_combined == scc
    assert rep.scc_equivalence_holds


def test_conjecture_row_gap_carries_witnesses():
    row = conjecture_row(parse_graph6("A?"), parse_graph6("C}"))
    assert (row.zeta_g, row.zeta_h, row.zeta_union, row.rhs, row.gap) == (0, 0, 7, 6, 1)
    assert row.precondition_met and row.flagged
    assert len(row.witness_g) == 2 and len(row.witness_h) == 4 and len(row.witness_union) == 6


def test_exhaustive_pairs_are_unordered():
    pairs = list(exhaustive_pairs(2))
    # graphs of order 1..2: '@', 'A?', 'A_' -> 3 + 2 + 1 unordered pairs
    assert len(pairs) == 6


def test_exhaustive_union_bound_never_exceeds_exact():
    rows = [conjecture_row(g, h) for g, h in exhaustive_pairs(3)]
    assert len(rows) == 66
    assert all(r.gap >= 0 for r in rows)


def test_pairs_failing_precondition_are_skipped_and_counted():
    # P3 has the single Lucky partition {0,2},{1}: balanced. K1,3 needs {1,2,3},{0}: not balanced.
    rep = union_conjecture_experiment([(path(3), path(3)), (star(3), path(3))])
    assert rep.skipped == 1 and len(rep.rows) == 1
    assert rep.summary()["pairs"] == 2


def test_random_rows_rebuild_from_their_seed():
    rep = union_conjecture_experiment(random_pairs(10, seed=1))
    assert len(rep.rows) == 10
    for row in rep.rows:
        g, h = pair_from_seed(row.seed)
        again = conjecture_row(g, h, row.seed)
        assert again == row


def test_random_pairs_are_deterministic():
    a = [(g.adj, h.adj, s) for g, h, s in random_pairs(5, seed=9)]
    b = [(g.adj, h.adj, s) for g, h, s in random_pairs(5, seed=9)]
    assert a == b


def test_report_csv_and_json():
    rep = union_conjecture_experiment([(parse_graph6("A?"), parse_graph6("C}"), 4), (path(4), path(4))])
    rows = list(csv.DictReader(io.StringIO(rep.to_csv())))
    assert list(rows[0]) == CSV_FIELDS
    assert rows[0]["flagged"] == "1" and rows[0]["seed"] == "4" and rows[0]["gap"] == "1"
    assert rows[1]["flagged"] == "0" and rows[1]["seed"] == ""
    js = rep.to_json()
    assert js["summary"]["counterexamples"] == 1
    assert js["rows"][0]["flagged"] is True
