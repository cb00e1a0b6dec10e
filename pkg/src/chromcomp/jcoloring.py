"""Johan (J-) colourings: proper colourings in which every vertex is rainbow."""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import Coloring, VertexPartition, chromatic_number, iter_canonical_colorings, partition_of
from .completion import CompletionResult, pseudo_completion_size, zeta
from .errors import check_cap
from .graph import Graph
from .stability import StabilityVerdict, is_scc


def _all_rainbow(adj: tuple[int, ...], a: tuple[int, ...], k: int) -> bool:
    masks = [0] * k
    for v, c in enumerate(a):
        masks[c] |= 1 << v
    full = (1 << k) - 1
    for v, row in enumerate(adj):
        seen = 1 << a[v]
        for c in range(k):
            if row & masks[c]:
                seen |= 1 << c
        if seen != full:
            return False
    return True


def is_j_coloring(g: Graph, c: Coloring) -> bool:
    """Proper, and every closed neighbourhood carries all ``c.k`` colours."""
    if len(c.assignment) != g.n:
        return False
    a = c.assignment
    if any(a[u] == a[v] for u, v in g.edges()):
        return False
    return _all_rainbow(g.adj, a, c.k)


def _j_colorings(g: Graph, k: int):
    for a in iter_canonical_colorings(g.adj, g.n, k):
        if _all_rainbow(g.adj, a, k):
            yield a


def j_number(g: Graph, cap: int | None = None, chi: int | None = None) -> int | None:
    """Largest k with a J-colouring on k colours, or None if none exists.

    Only k in ``chi..min(delta+1, n)`` can work: a minimum-degree vertex's
    closed neighbourhood has to hold every colour.
    """
    check_cap(g.n, cap, "J-chromatic number")
    if g.n == 0:
        return None
    chi = chromatic_number(g) if chi is None else chi
    for k in range(min(g.min_degree() + 1, g.n), chi - 1, -1):
        for _ in _j_colorings(g, k):
            return k
    return None


@dataclass
class JColoringResult:
    exists: bool
    j_number: int | None = None
    witness: Coloring | None = None
    zeta_j: int | None = None
    e_j: list[tuple[int, int]] | None = None
    maximizing_partitions: list[VertexPartition] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "exists": self.exists,
            "j_number": self.j_number,
            "witness": self.witness.to_json() if self.witness else None,
            "zeta_j": self.zeta_j,
            "e_j": [list(e) for e in self.e_j] if self.e_j is not None else None,
        }


def zeta_j(g: Graph, cap: int | None = None, chi: int | None = None) -> JColoringResult:
    """Maximum completion count over J-colourings with J(G) colours."""
    check_cap(g.n, cap, "zeta_J")
    k = j_number(g, cap, chi)
    if k is None:
        return JColoringResult(exists=False)
    eps = g.edge_count
    best, arg = -1, []
    for a in _j_colorings(g, k):
        theta = [0] * k
        for c in a:
            theta[c] += 1
        val = pseudo_completion_size(theta) - eps
        if val > best:
            best, arg = val, [a]
        elif val == best:
            arg.append(a)
    parts = sorted((partition_of(Coloring(a)), a) for a in arg)
    wit = parts[0][1]
    e_j = [(u, v) for u, v in _pairs(g.n) if wit[u] != wit[v] and not g.adj[u] >> v & 1]
    return JColoringResult(
        exists=True,
        j_number=k,
        witness=Coloring(wit),
        zeta_j=best,
        e_j=e_j,
        maximizing_partitions=[p for p, _ in parts],
    )


def _pairs(n: int):
    return ((u, v) for u in range(n) for v in range(u + 1, n))


@dataclass
class ChainReport:
    """zeta_phi for every chromatic colouring against zeta and zeta_J."""

    zeta: int
    zeta_phi: list[int]
    zeta_j: int | None
    left_holds: bool  # every zeta_phi <= zeta
    right_holds: bool | None  # zeta <= zeta_J, None when no J-colouring
    left_equal: bool  # every chromatic colouring is Lucky
    right_equal: bool | None
    congruent: bool  # one chromatic partition, and it is the unique J-maximiser

    @property
    def all_equal(self) -> bool:
        return self.left_equal and bool(self.right_equal)

    def to_json(self) -> dict:
        return {
            "zeta": self.zeta,
            "zeta_phi": self.zeta_phi,
            "zeta_j": self.zeta_j,
            "left_holds": self.left_holds,
            "right_holds": self.right_holds,
            "left_equal": self.left_equal,
            "right_equal": self.right_equal,
            "congruent": self.congruent,
        }


def completion_chain(
    g: Graph,
    result: CompletionResult | None = None,
    jres: JColoringResult | None = None,
    cap: int | None = None,
) -> ChainReport:
    result = zeta(g, cap) if result is None else result
    jres = zeta_j(g, cap, chi=result.chi) if jres is None else jres
    eps = g.edge_count
    phis = []
    chrom_parts = 0
    for a in iter_canonical_colorings(g.adj, g.n, result.chi):
        theta = [0] * result.chi
        for c in a:
            theta[c] += 1
        phis.append(pseudo_completion_size(theta) - eps)
        chrom_parts += 1
    z = result.zeta
    zj = jres.zeta_j if jres.exists else None
    congruent = (
        chrom_parts == 1
        and jres.exists
        and len(jres.maximizing_partitions) == 1
        and jres.maximizing_partitions[0] == result.lucky_partitions[0]
    )
    return ChainReport(
        zeta=z,
        zeta_phi=phis,
        zeta_j=zj,
        left_holds=all(p <= z for p in phis),
        right_holds=None if zj is None else z <= zj,
        left_equal=all(p == z for p in phis),
        right_equal=None if zj is None else z == zj,
        congruent=congruent,
    )


@dataclass
class ImplicationCheck:
    scc: bool
    j_colorable: bool
    holds: bool
    verdict: StabilityVerdict | None = None


def scc_implies_j_colorable(g: Graph, cap: int | None = None) -> ImplicationCheck:
    """Evaluate "SCC => J-colourable" on ``g``.

    A failure is returned with ``holds=False`` so callers can report it; it is
    never swallowed.
    """
    result = zeta(g, cap)
    verdict = is_scc(g, result)
    colorable = j_number(g, cap, chi=result.chi) is not None
    return ImplicationCheck(
        scc=verdict.is_scc,
        j_colorable=colorable,
        holds=(not verdict.is_scc) or colorable,
        verdict=verdict,
    )
