"""Chromatic completion under disjoint union and join.

The union lower bound adds to zeta(G) + zeta(H) the number of cross pairs
(u in G, v in H) whose colours differ once both Lucky colourings are written
in one shared palette. The join identity zeta(G + H) = zeta(G) + zeta(H) and
the matching SCC equivalence are checked by independent exact computations.
"""

from __future__ import annotations

import csv
import io
import random
from dataclasses import asdict, dataclass, field
from itertools import permutations
from typing import Iterable, Iterator

from .coloring import Coloring, chromatic_number
from .completion import CompletionResult, completion_count, zeta
from .errors import ContractError
from .generators import enumerate_all_graphs, gnp
from .graph import Graph, disjoint_union, join
from .io import to_graph6
from .stability import is_scc


@dataclass
class OperationReport:
    op: str
    zeta_g: int
    zeta_h: int
    zeta_combined: int
    bound_rhs: int | None
    equality: bool
    scc_g: bool
    scc_h: bool
    scc_combined: bool

    @property
    def scc_equivalence_holds(self) -> bool:
        return (self.scc_g and self.scc_h) == self.scc_combined

    def to_json(self) -> dict:
        return asdict(self)


def cross_term(theta_g: list[int] | tuple[int, ...], theta_h: list[int] | tuple[int, ...]) -> int:
    """Pairs (u, v), u in G, v in H, whose shared-palette colours differ.

    Colour ``i`` of G and colour ``i`` of H are the same palette entry.
    """
    total = sum(theta_g) * sum(theta_h)
    same = sum(a * b for a, b in zip(theta_g, theta_h))
    return total - same


def union_lower_bound(
    g: Graph,
    h: Graph,
    lucky_g: Coloring,
    lucky_h: Coloring,
    zeta_g: int | None = None,
    zeta_h: int | None = None,
) -> int:
    """zeta(G) + zeta(H) + cross term for the given (aligned) Lucky colourings."""
    zg = zeta(g).zeta if zeta_g is None else zeta_g
    zh = zeta(h).zeta if zeta_h is None else zeta_h
    for name, graph, c, z in (("G", g, lucky_g, zg), ("H", h, lucky_h, zh)):
        if c.k != chromatic_number(graph) or completion_count(graph, c) != z:
            raise ContractError(f"colouring of {name} is not a Lucky colouring")
    return zg + zh + cross_term(lucky_g.theta, lucky_h.theta)


@dataclass
class AlignedBound:
    rhs: int
    lucky_g: Coloring
    # H's Lucky colouring written in the shared palette; may skip palette entries
    palette_h: tuple[int, ...]


def best_union_lower_bound(g: Graph, h: Graph, rg: CompletionResult | None = None,
                           rh: CompletionResult | None = None) -> AlignedBound:
    """Maximise the union bound over Lucky pairs and palette alignments.

    H's colours are injected into a palette of size max(chi(G), chi(H)).
    """
    rg = zeta(g) if rg is None else rg
    rh = zeta(h) if rh is None else rh
    size = max(rg.chi, rh.chi)
    best = None
    for cg in rg.lucky_colorings:
        for ch in rh.lucky_colorings:
            tg = list(cg.theta) + [0] * (size - cg.k)
            for perm in permutations(range(size), ch.k):
                th = [0] * size
                for j, slot in enumerate(perm):
                    th[slot] = ch.theta[j]
                val = rg.zeta + rh.zeta + cross_term(tg, th)
                if best is None or val > best.rhs:
                    best = AlignedBound(val, cg, tuple(perm[c] for c in ch.assignment))
    return best


def check_union_bound(g: Graph, h: Graph) -> OperationReport:
    rg, rh = zeta(g), zeta(h)
    u = disjoint_union(g, h)
    ru = zeta(u)
    rhs = best_union_lower_bound(g, h, rg, rh).rhs
    return OperationReport(
        op="union",
        zeta_g=rg.zeta,
        zeta_h=rh.zeta,
        zeta_combined=ru.zeta,
        bound_rhs=rhs,
        equality=ru.zeta == rhs,
        scc_g=is_scc(g, rg).is_scc,
        scc_h=is_scc(h, rh).is_scc,
        scc_combined=is_scc(u, ru).is_scc,
    )


def check_join_identity(g: Graph, h: Graph, cap: int | None = None) -> OperationReport:
    """Exact zeta of G, H and G + H computed separately, plus the SCC equivalence."""
    rg, rh = zeta(g, cap), zeta(h, cap)
    jg = join(g, h)
    rj = zeta(jg, cap)
    return OperationReport(
        op="join",
        zeta_g=rg.zeta,
        zeta_h=rh.zeta,
        zeta_combined=rj.zeta,
        bound_rhs=None,
        equality=rj.zeta == rg.zeta + rh.zeta,
        scc_g=is_scc(g, rg).is_scc,
        scc_h=is_scc(h, rh).is_scc,
        scc_combined=is_scc(jg, rj).is_scc,
    )


# conjecture experiment


def admits_balanced_lucky(result: CompletionResult, n: int) -> bool:
    """Some Lucky partition has every class size in {floor(n/chi), ceil(n/chi)}."""
    if result.chi == 0:
        return False
    lo, hi = n // result.chi, -(-n // result.chi)
    return any(all(lo <= len(c) <= hi for c in p.classes) for p in result.lucky_partitions)


@dataclass
class ConjectureRow:
    graph6_g: str
    graph6_h: str
    zeta_g: int
    zeta_h: int
    zeta_union: int
    rhs: int
    gap: int
    precondition_met: bool
    seed: int | None = None
    witness_g: list[int] = field(default_factory=list)
    witness_h: list[int] = field(default_factory=list)
    witness_union: list[int] = field(default_factory=list)

    @property
    def flagged(self) -> bool:
        return self.precondition_met and self.gap != 0


CSV_FIELDS = [
    "graph6_g",
    "graph6_h",
    "zeta_g",
    "zeta_h",
    "zeta_union",
    "rhs",
    "gap",
    "precondition_met",
    "flagged",
    "seed",
    "witness_g",
    "witness_h",
    "witness_union",
]


@dataclass
class ConjectureReport:
    """Evaluated rows only; pairs failing the precondition are just counted."""

    rows: list[ConjectureRow]
    skipped: int = 0

    @property
    def preconditioned(self) -> int:
        return len(self.rows)

    @property
    def counterexamples(self) -> list[ConjectureRow]:
        return [r for r in self.rows if r.flagged]

    @property
    def bound_violations(self) -> list[ConjectureRow]:
        return [r for r in self.rows if r.gap < 0]

    def summary(self) -> dict:
        return {
            "pairs": len(self.rows) + self.skipped,
            "preconditioned": self.preconditioned,
            "skipped": self.skipped,
            "equal": sum(r.gap == 0 for r in self.rows),
            "counterexamples": len(self.counterexamples),
            "bound_violations": len(self.bound_violations),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in self.rows:
            w.writerow([
                r.graph6_g,
                r.graph6_h,
                r.zeta_g,
                r.zeta_h,
                r.zeta_union,
                r.rhs,
                r.gap,
                int(r.precondition_met),
                int(r.flagged),
                "" if r.seed is None else r.seed,
                " ".join(map(str, r.witness_g)),
                " ".join(map(str, r.witness_h)),
                " ".join(map(str, r.witness_union)),
            ])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "summary": self.summary(),
            "rows": [dict(asdict(r), flagged=r.flagged) for r in self.rows],
        }


def conjecture_row(g: Graph, h: Graph, seed: int | None = None) -> ConjectureRow:
    rg, rh = zeta(g), zeta(h)
    ru = zeta(disjoint_union(g, h))
    best = best_union_lower_bound(g, h, rg, rh)
    met = admits_balanced_lucky(rg, g.n) and admits_balanced_lucky(rh, h.n)
    return ConjectureRow(
        graph6_g=to_graph6(g),
        graph6_h=to_graph6(h),
        zeta_g=rg.zeta,
        zeta_h=rh.zeta,
        zeta_union=ru.zeta,
        rhs=best.rhs,
        gap=ru.zeta - best.rhs,
        precondition_met=met,
        seed=seed,
        witness_g=list(best.lucky_g.assignment),
        witness_h=list(best.palette_h),
        witness_union=list(ru.lucky_colorings[0].assignment),
    )


def union_conjecture_experiment(pairs: Iterable[tuple[Graph, Graph] | tuple[Graph, Graph, int]]) -> ConjectureReport:
    """Compare exact zeta(G u H) with the best union bound for each pair.

    Produces data only: strict rows are flagged as potential counterexamples,
    nothing is asserted. Pairs without a balanced Lucky partition on both
    sides are skipped and counted.
    """
    rows, skipped = [], 0
    for item in pairs:
        g, h, *rest = item
        if not (admits_balanced_lucky(zeta(g), g.n) and admits_balanced_lucky(zeta(h), h.n)):
            skipped += 1
            continue
        rows.append(conjecture_row(g, h, rest[0] if rest else None))
    return ConjectureReport(rows, skipped)


def exhaustive_pairs(n_max: int, connected_only: bool = False) -> Iterator[tuple[Graph, Graph]]:
    """Unordered pairs (G, H) of labelled graphs with 1 <= order <= n_max."""
    graphs = [g for n in range(1, n_max + 1) for g in enumerate_all_graphs(n, connected_only)]
    for i, g in enumerate(graphs):
        for h in graphs[i:]:
            yield g, h


def random_pairs(count: int, seed: int, n_max: int = 5, p: float = 0.5) -> Iterator[tuple[Graph, Graph, int]]:
    """``count`` seeded pairs; row ``i`` carries its own derived seed so it can be rebuilt alone."""
    master = random.Random(seed)
    for _ in range(count):
        pair_seed = master.getrandbits(63)
        yield (*pair_from_seed(pair_seed, n_max, p), pair_seed)


def pair_from_seed(pair_seed: int, n_max: int = 5, p: float = 0.5) -> tuple[Graph, Graph]:
    rng = random.Random(pair_seed)
    ng, nh = rng.randint(1, n_max), rng.randint(1, n_max)
    sg, sh = rng.getrandbits(63), rng.getrandbits(63)
    return gnp(ng, p, sg), gnp(nh, p, sh)
