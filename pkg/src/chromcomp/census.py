"""Per-graph theorem checks and exhaustive census sweeps.

Each checked statement yields ``"pass"``, ``"fail"`` or ``"n/a"`` (hypothesis
not met). Statements are only evaluated on connected graphs with at least
one edge; everything else is ``"n/a"``.
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator

from .completion import CompletionResult, near_lucky_coloring, zeta
from .generators import CENSUS_MAX_ORDER, enumerate_masked_graphs
from .graph import Graph
from .io import to_graph6
from .jcoloring import JColoringResult, completion_chain, zeta_j
from .stability import StabilityVerdict, is_scc

PASS, FAIL, NA = "pass", "fail", "n/a"

# statement key -> what it asserts
STATEMENTS = {
    "completion_not_complete": "G plus any Lucky completion edge set is complete iff G is complete",
    "complement_bound": "zeta(G) <= edges of the complement, with equality iff G is complete",
    "scc_iff_unique_completion": "zeta > 0: SCC iff the chromatic completion edge set is unique",
    "scc_iff_rainbow_adjacency": "zeta > 0: SCC iff in every Lucky colouring each vertex sees every other class",
    "scc_iff_rainbow_count": "zeta > 0: SCC iff r_L(G) = nu(G) for the Lucky colourings",
    "bipartite_scc": "zeta > 0 and chi = 2: G is SCC",
    "pendant_not_scc": "chi >= 3 and a pendant vertex: G is not SCC",
    "completion_chain": "zeta_phi <= zeta <= zeta_J wherever defined",
    "uniqueness_chain": "unique E_phi => unique E_L => unique E_J",
    "scc_implies_j_colorable": "an SCC graph admits a J-colouring",
    "near_lucky_upper_bound": "the near-Lucky greedy completion count is >= zeta",
}


def _flag(cond: bool) -> str:
    return PASS if cond else FAIL


@dataclass
class GraphAnalysis:
    graph: Graph
    completion: CompletionResult
    stability: StabilityVerdict
    jcol: JColoringResult
    near_lucky: int
    chromatic_partition_count: int
    flags: dict[str, str]


def check_statements(
    g: Graph,
    result: CompletionResult | None = None,
    verdict: StabilityVerdict | None = None,
    jres: JColoringResult | None = None,
) -> GraphAnalysis:
    result = zeta(g) if result is None else result
    verdict = is_scc(g, result) if verdict is None else verdict
    jres = zeta_j(g, chi=result.chi) if jres is None else jres
    chain = completion_chain(g, result, jres)
    _, near = near_lucky_coloring(g, chi=result.chi)
    n, eps = g.n, g.edge_count
    complete = g.is_complete()
    z = result.zeta
    flags = dict.fromkeys(STATEMENTS, NA)
    if g.n > 0 and eps > 0 and g.is_connected():
        full = (1 << n) - 1
        completed_complete = []
        for es in result.witness_edge_sets:
            adj = list(g.adj)
            for u, v in es:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            completed_complete.append(all(row | 1 << v == full for v, row in enumerate(adj)))
        flags["completion_not_complete"] = _flag(all(c == complete for c in completed_complete))

        comp_edges = n * (n - 1) // 2 - eps
        flags["complement_bound"] = _flag(z <= comp_edges and ((z == comp_edges) == complete))

        scc = verdict.is_scc
        if z > 0:
            m = verdict.methods
            flags["scc_iff_unique_completion"] = _flag(m["definitional"] == m["e_chi_unique"])
            flags["scc_iff_rainbow_adjacency"] = _flag(m["definitional"] == m["rainbow_condition"])
            flags["scc_iff_rainbow_count"] = _flag(m["definitional"] == m["rainbow_count"])
            if result.chi == 2:
                flags["bipartite_scc"] = _flag(scc)
        if result.chi >= 3 and 1 in g.degrees():
            flags["pendant_not_scc"] = _flag(not scc)

        flags["completion_chain"] = _flag(chain.left_holds and chain.right_holds is not False)

        # "unique" = every colouring the convention maximises over shares one completion set
        phi_unique = len(chain.zeta_phi) == 1
        lucky_unique = len(result.lucky_partitions) == 1
        if jres.exists:
            j_unique = len(jres.maximizing_partitions) == 1
            flags["uniqueness_chain"] = _flag((not phi_unique or lucky_unique) and (not lucky_unique or j_unique))
        else:
            flags["uniqueness_chain"] = _flag(not phi_unique or lucky_unique)

        flags["scc_implies_j_colorable"] = _flag(not scc or jres.exists)
        flags["near_lucky_upper_bound"] = _flag(near >= z)
    return GraphAnalysis(g, result, verdict, jres, near, len(chain.zeta_phi), flags)


@dataclass
class CensusRecord:
    graph6: str
    order: int
    size: int
    chi: int
    zeta: int
    scc: bool
    lucky_partitions: int
    j_exists: bool
    j_number: int | None
    zeta_j: int | None
    near_lucky: int
    theorem_flags: dict[str, str] = field(default_factory=dict)

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.theorem_flags.items() if v == FAIL]

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> CensusRecord:
        return cls(**data)


CSV_FIELDS = [
    "graph6", "order", "size", "chi", "zeta", "scc", "lucky_partitions",
    "j_exists", "j_number", "zeta_j", "near_lucky",
] + list(STATEMENTS)


def record_csv_row(r: CensusRecord) -> list:
    base = [
        r.graph6, r.order, r.size, r.chi, r.zeta, int(r.scc), r.lucky_partitions,
        int(r.j_exists), "" if r.j_number is None else r.j_number,
        "" if r.zeta_j is None else r.zeta_j, r.near_lucky,
    ]
    return base + [r.theorem_flags[k] for k in STATEMENTS]


def census_record(g: Graph) -> CensusRecord:
    a = check_statements(g)
    return CensusRecord(
        graph6=to_graph6(g),
        order=g.n,
        size=g.edge_count,
        chi=a.completion.chi,
        zeta=a.completion.zeta,
        scc=a.stability.is_scc,
        lucky_partitions=len(a.completion.lucky_partitions),
        j_exists=a.jcol.exists,
        j_number=a.jcol.j_number,
        zeta_j=a.jcol.zeta_j,
        near_lucky=a.near_lucky,
        theorem_flags=a.flags,
    )


def census_graphs(
    n: int,
    connected_only: bool = False,
    sample: float | None = None,
    seed: int = 0,
    max_order: int = CENSUS_MAX_ORDER,
) -> Iterator[Graph]:
    """Labelled graphs on ``n`` vertices, optionally a seeded Bernoulli sample.

    The sampling draw is made for every edge mask (connected or not), so the
    slice depends only on ``(n, sample, seed)``.
    """
    rng = random.Random(seed) if sample is not None else None
    for _, g in enumerate_masked_graphs(n, False, max_order):
        if rng is not None and rng.random() >= sample:
            continue
        if connected_only and not g.is_connected():
            continue
        yield g


@dataclass
class CensusSummary:
    graphs: int = 0
    scc: int = 0
    j_colorable: int = 0
    failures: Counter = field(default_factory=Counter)
    evaluated: Counter = field(default_factory=Counter)
    first_failure: dict[str, str] = field(default_factory=dict)
    seconds: float = 0.0

    def add(self, r: CensusRecord) -> None:
        self.graphs += 1
        self.scc += r.scc
        self.j_colorable += r.j_exists
        for k, v in r.theorem_flags.items():
            if v != NA:
                self.evaluated[k] += 1
            if v == FAIL:
                self.failures[k] += 1
                self.first_failure.setdefault(k, r.graph6)

    @property
    def total_failures(self) -> int:
        return sum(self.failures.values())

    def to_json(self) -> dict:
        return {
            "graphs": self.graphs,
            "scc": self.scc,
            "j_colorable": self.j_colorable,
            "theorem_failures": self.total_failures,
            "failures": {k: self.failures[k] for k in STATEMENTS},
            "evaluated": {k: self.evaluated[k] for k in STATEMENTS},
            "first_failure": dict(sorted(self.first_failure.items())),
        }


def run_census(graphs: Iterable[Graph], keep: bool = True) -> tuple[list[CensusRecord], CensusSummary]:
    start = time.perf_counter()
    records, summary = [], CensusSummary()
    for g in graphs:
        r = census_record(g)
        summary.add(r)
        if keep:
            records.append(r)
    summary.seconds = time.perf_counter() - start
    return records, summary


def records_to_jsonl(records: Iterable[CensusRecord]) -> str:
    return "".join(json.dumps(r.to_json(), sort_keys=True) + "\n" for r in records)


def labelled_connected_count(n: int) -> int:
    """Connected labelled graphs on n vertices by the exponential-formula recurrence."""
    from math import comb

    c = [0] * (n + 1)
    for m in range(1, n + 1):
        total = 2 ** comb(m, 2)
        for k in range(1, m):
            total -= comb(m - 1, k - 1) * c[k] * 2 ** comb(m - k, 2)
        c[m] = total
    return c[n] if n >= 1 else 1

