"""Stability in respect of chromatic completion (SCC).

A graph is SCC when all of its Lucky colourings induce one vertex partition.
Alongside the definition we evaluate three characterisations so they can be
compared on concrete graphs:

* uniqueness of the chromatic completion edge set,
* the rainbow-adjacency condition (every vertex sees every other class),
* the rainbow neighbourhood count ``r_L(G) == nu(G)``.

The adjacency and count characterisations do *not* agree with the definition
on all graphs (the smallest disagreement has five vertices), so a verdict
records every method separately and reports whether they agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import Coloring, require_proper
from .completion import CompletionResult, class_masks_of, zeta
from .errors import TheoremViolation
from .graph import Graph, iter_bits


def _rainbow_vertices(g: Graph, masks: list[int]) -> int:
    count = 0
    for v in range(g.n):
        closed = g.adj[v] | 1 << v
        if all(closed & m for m in masks):
            count += 1
    return count


def _adjacent_to_every_other_class(g: Graph, masks: list[int]) -> bool:
    for m in masks:
        for v in iter_bits(m):
            nbrs = g.adj[v]
            if any(not nbrs & other for other in masks if other != m):
                return False
    return True


def rainbow_condition_holds(g: Graph, c: Coloring) -> bool:
    """Every vertex has a neighbour in each colour class other than its own."""
    require_proper(g, c)
    return _adjacent_to_every_other_class(g, c.class_masks())


def rainbow_neighbourhood_number(g: Graph, c: Coloring) -> int:
    """Number of vertices whose closed neighbourhood carries all ``c.k`` colours."""
    require_proper(g, c)
    return _rainbow_vertices(g, c.class_masks())


def is_scc_definitional(g: Graph, result: CompletionResult | None = None, cap: int | None = None) -> bool:
    result = zeta(g, cap) if result is None else result
    return len(result.lucky_partitions) == 1


@dataclass
class StabilityVerdict:
    is_scc: bool
    methods: dict[str, bool | None]
    lucky_partition_count: int
    r_lucky: int
    zeta: int
    vacuous: bool = False
    # r_L == nu for *some* Lucky colouring (existential reading of the count test)
    rainbow_count_some: bool | None = None
    r_lucky_all: list[int] = field(default_factory=list)

    @property
    def methods_agree(self) -> bool:
        vals = [v for v in self.methods.values() if v is not None]
        return len(set(vals)) <= 1

    @property
    def disagreeing_methods(self) -> list[str]:
        return [k for k, v in self.methods.items() if v is not None and v != self.is_scc]

    def to_json(self) -> dict:
        return {
            "is_scc": self.is_scc,
            "methods": dict(self.methods),
            "methods_agree": self.methods_agree,
            "vacuous": self.vacuous,
            "lucky_partition_count": self.lucky_partition_count,
            "r_lucky": self.r_lucky,
            "rainbow_count_some": self.rainbow_count_some,
        }


def is_scc(
    g: Graph, result: CompletionResult | None = None, cap: int | None = None, strict: bool = False
) -> StabilityVerdict:
    """SCC verdict with all four characterisations.

    ``is_scc`` is the definitional answer (unique Lucky partition), or True
    for zeta = 0 graphs. The rainbow methods are reported as "holds for every
    Lucky colouring". With ``strict`` a disagreement raises
    :class:`TheoremViolation` instead of being recorded.
    """
    result = zeta(g, cap) if result is None else result
    parts = result.lucky_partitions
    definitional = len(parts) == 1
    r_all = []
    adjacency_all = True
    for p in parts:
        masks = class_masks_of(p)
        r_all.append(_rainbow_vertices(g, masks))
        adjacency_all = adjacency_all and _adjacent_to_every_other_class(g, masks)
    count_all = all(r == g.n for r in r_all)
    rainbow_some = any(r == g.n for r in r_all)
    e_unique = len({tuple(es) for es in result.witness_edge_sets}) == 1
    vacuous = result.zeta == 0
    methods: dict[str, bool | None] = {
        "definitional": definitional,
        "e_chi_unique": e_unique,
        "rainbow_condition": adjacency_all,
        "rainbow_count": count_all,
    }
    if vacuous:
        methods = {k: None for k in methods}
    verdict = StabilityVerdict(
        is_scc=True if vacuous else definitional,
        methods=methods,
        lucky_partition_count=len(parts),
        r_lucky=r_all[0] if r_all else 0,
        zeta=result.zeta,
        vacuous=vacuous,
        rainbow_count_some=None if vacuous else rainbow_some,
        r_lucky_all=r_all,
    )
    if strict and not verdict.methods_agree:
        raise TheoremViolation(
            f"SCC characterisations disagree on {g!r}: {verdict.methods}"
        )
    return verdict
