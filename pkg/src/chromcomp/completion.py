"""Chromatic completion: zeta(G), Lucky colourings, completion edges and upper bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .coloring import (
    Coloring,
    VertexPartition,
    chromatic_number,
    iter_canonical_colorings,
    partition_of,
    require_proper,
)
from .errors import ContractError, check_cap
from .graph import Graph


def pseudo_completion_size(theta: Sequence[int]) -> int:
    """Edge count of the complete multipartite graph with part sizes ``theta``."""
    if any(t < 1 for t in theta):
        raise ContractError(f"class sizes must be positive, got {tuple(theta)}")
    n = sum(theta)
    return (n * n - sum(t * t for t in theta)) // 2


def completion_edges(g: Graph, c: Coloring) -> list[tuple[int, int]]:
    """Non-edges of ``g`` whose endpoints get different colours under ``c``."""
    require_proper(g, c)
    a = c.assignment
    return [
        (u, v)
        for u, v in combinations(range(g.n), 2)
        if a[u] != a[v] and not g.adj[u] >> v & 1
    ]


def completion_count(g: Graph, c: Coloring) -> int:
    """|completion_edges(g, c)| without materialising the set."""
    require_proper(g, c)
    return pseudo_completion_size(c.theta) - g.edge_count


def _theta_of(a: tuple[int, ...], k: int) -> list[int]:
    theta = [0] * k
    for c in a:
        theta[c] += 1
    return theta


@dataclass
class CompletionResult:
    zeta: int
    chi: int
    epsilon: int
    lucky_partitions: list[VertexPartition]
    witness_edge_sets: list[list[tuple[int, int]]]
    colorings_examined: int = 0

    @property
    def lucky_colorings(self) -> list[Coloring]:
        n = sum(len(c) for c in self.lucky_partitions[0].classes)
        return [p.to_coloring(n) for p in self.lucky_partitions]

    def to_json(self) -> dict:
        return {
            "zeta": self.zeta,
            "chi": self.chi,
            "epsilon": self.epsilon,
            "lucky_partitions": [p.to_json() for p in self.lucky_partitions],
            "witness_edge_sets": [[list(e) for e in es] for es in self.witness_edge_sets],
        }


def _witness(g: Graph, a: tuple[int, ...]) -> list[tuple[int, int]]:
    return [
        (u, v)
        for u, v in combinations(range(g.n), 2)
        if a[u] != a[v] and not g.adj[u] >> v & 1
    ]


def zeta(g: Graph, cap: int | None = None) -> CompletionResult:
    """Exact zeta(G): maximise completion count over all chromatic colourings.

    Every maximising partition is reported (sorted), with its completion edge set.
    """
    check_cap(g.n, cap, "zeta", "use zeta_upper_bounds / near_lucky_coloring instead")
    chi = chromatic_number(g)
    eps = g.edge_count
    n = g.n
    best = -1
    lucky: list[tuple[int, ...]] = []
    examined = 0
    for a in iter_canonical_colorings(g.adj, n, chi):
        examined += 1
        theta = _theta_of(a, chi)
        val = (n * n - sum(t * t for t in theta)) // 2 - eps
        if val > best:
            best, lucky = val, [a]
        elif val == best:
            lucky.append(a)
    if n == 0:
        return CompletionResult(0, 0, 0, [VertexPartition(frozenset())], [[]], 1)
    parts = sorted((partition_of(Coloring(a)), a) for a in lucky)
    return CompletionResult(
        zeta=best,
        chi=chi,
        epsilon=eps,
        lucky_partitions=[p for p, _ in parts],
        witness_edge_sets=[_witness(g, a) for _, a in parts],
        colorings_examined=examined,
    )


# sum-product


def balanced_parts(n: int, p: int) -> list[int]:
    """Parts of sizes ceil(n/p) then floor(n/p), non-increasing."""
    _check_np(n, p)
    q, r = divmod(n, p)
    return [q + 1] * r + [q] * (p - r)


def lucky_sum_product(n: int, p: int) -> int:
    """Max of sum_{i<j} a_i a_j over compositions of n into p positive parts (balanced closed form)."""
    return pseudo_completion_size(balanced_parts(n, p))


def integer_partitions(n: int, p: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` into exactly ``p`` positive non-increasing parts."""
    if largest is None:
        largest = n
    if p == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(largest, n - (p - 1)), 0, -1):
        if first * p < n:
            break
        for rest in integer_partitions(n - first, p - 1, first):
            yield (first,) + rest


def lucky_sum_product_bruteforce(n: int, p: int) -> tuple[int, list[tuple[int, ...]]]:
    """Oracle: scan every partition of n into p parts. Returns (max, maximisers)."""
    _check_np(n, p)
    best, arg = -1, []
    for parts in integer_partitions(n, p):
        val = sum(a * b for a, b in combinations(parts, 2))
        if val > best:
            best, arg = val, [parts]
        elif val == best:
            arg.append(parts)
    return best, arg


def _check_np(n: int, p: int) -> None:
    if p < 1 or p > n:
        raise ContractError(f"need 1 <= p <= n, got n={n}, p={p}")


# bounds


@dataclass
class BoundReport:
    complement_bound: int
    lucky_bound: int
    near_lucky_bound: int
    near_lucky_coloring: Coloring | None = field(default=None, repr=False)
    zeta_exact: int | None = None

    def check(self) -> None:
        z = self.zeta_exact
        if z is None:
            return
        for name in ("complement_bound", "lucky_bound", "near_lucky_bound"):
            if z > getattr(self, name):
                raise ContractError(f"zeta={z} exceeds {name}={getattr(self, name)}")

    def to_json(self) -> dict:
        return {
            "complement": self.complement_bound,
            "lucky": self.lucky_bound,
            "near_lucky": self.near_lucky_bound,
            "zeta_exact": self.zeta_exact,
        }


def zeta_upper_bounds(g: Graph, zeta_exact: int | None = None, chi: int | None = None) -> BoundReport:
    """Complement, balanced-partition and near-Lucky bounds; no exhaustive search.

    ``zeta_exact`` is only recorded, never computed here.
    """
    n, eps = g.n, g.edge_count
    if n == 0:
        return BoundReport(0, 0, 0, Coloring(()), zeta_exact)
    chi = chromatic_number(g) if chi is None else chi
    c, count = near_lucky_coloring(g, chi=chi)
    return BoundReport(
        complement_bound=n * (n - 1) // 2 - eps,
        lucky_bound=lucky_sum_product(n, chi) - eps,
        near_lucky_bound=count,
        near_lucky_coloring=c,
        zeta_exact=zeta_exact,
    )


def near_lucky_order(g: Graph) -> list[int]:
    """Vertices by non-increasing degree; equal degrees keep label order."""
    degs = g.degrees()
    return sorted(range(g.n), key=lambda v: -degs[v])


def near_lucky_coloring(
    g: Graph, chi: int | None = None, order: Sequence[int] | None = None
) -> tuple[Coloring, int]:
    """Greedy near-Lucky proper colouring and its completion count.

    Processing position ``i`` prefers colour ``i mod chi``. Otherwise the
    least-used permissible palette colour (lowest index on ties); otherwise a
    fresh colour extends the palette.
    """
    n = g.n
    if n == 0:
        return Coloring(()), 0
    chi = chromatic_number(g) if chi is None else chi
    order = near_lucky_order(g) if order is None else list(order)
    palette = chi
    colour = [-1] * n
    theta = [0] * chi
    masks = [0] * chi
    for i, v in enumerate(order):
        nbrs = g.adj[v]
        pref = i % chi
        if not masks[pref] & nbrs:
            c = pref
        else:
            allowed = [x for x in range(palette) if not masks[x] & nbrs]
            if allowed:
                c = min(allowed, key=lambda x: (theta[x], x))
            else:
                c = palette
                palette += 1
                theta.append(0)
                masks.append(0)
        colour[v] = c
        theta[c] += 1
        masks[c] |= 1 << v
    # drop palette colours that ended up unused
    used = sorted(set(colour))
    rename = {c: i for i, c in enumerate(used)}
    result = Coloring(tuple(rename[c] for c in colour))
    return result, pseudo_completion_size(result.theta) - g.edge_count


def completion_graph(g: Graph, edges: Sequence[tuple[int, int]]) -> Graph:
    """``g`` with ``edges`` added."""
    adj = list(g.adj)
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def class_masks_of(p: VertexPartition) -> list[int]:
    return [sum(1 << v for v in c) for c in p.sorted_classes()]

