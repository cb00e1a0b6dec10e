"""Simple undirected graphs on vertices ``0..n-1`` with bitset adjacency."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised for malformed graph input or nonsensical construction parameters."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            if row & ~full:
                raise GraphError(f"vertex {v} adjacent to a vertex outside 0..{self.n - 1}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric on {v}{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee a symmetric loop-free adjacency
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def order(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    size = edge_count

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        full = (1 << self.n) - 1
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == full

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by lowest vertex."""
        left = (1 << self.n) - 1
        comps = []
        while left:
            seen = frontier = left & -left
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~seen
                seen |= frontier
            comps.append(seen)
            left &= ~seen
        return comps

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.adj + tuple(row << shift for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    adj = tuple(row | hmask for row in g.adj) + tuple(row << g.n | gmask for row in h.adj)
    return Graph(g.n + h.n, adj)


def corona(g: Graph, h: Graph) -> Graph:
    """One copy of ``g`` plus ``g.n`` copies of ``h``; vertex ``i`` of ``g``
    is joined to every vertex of copy ``i``. Copy ``i`` occupies labels
    ``g.n + i*h.n .. g.n + (i+1)*h.n - 1``."""
    edges = g.edges()
    for i in range(g.n):
        base = g.n + i * h.n
        edges += [(base + u, base + v) for u, v in h.edges()]
        edges += [(i, base + u) for u in range(h.n)]
    return Graph.from_edges(g.n + g.n * h.n, edges)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def induced_subgraph(g: Graph, vertices: list[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    return Graph.from_edges(
        len(vertices), [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    )


def is_complete_multipartite(g: Graph) -> tuple[bool, list[int] | None]:
    """Return ``(True, part sizes)`` when the complement is a disjoint union of
    cliques, else ``(False, None)``. Part sizes are sorted descending."""
    comp = complement(g)
    parts = []
    for cmask in comp.components():
        for v in iter_bits(cmask):
            if comp.closed_neighborhood(v) != cmask:
                return False, None
        parts.append(cmask.bit_count())
    return True, sorted(parts, reverse=True)


def isomorphic_bruteforce(g: Graph, h: Graph) -> bool:
    """Permutation search; only meant for tiny graphs in checks."""
    from itertools import permutations

    if g.n != h.n or g.edge_count != h.edge_count or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    target = set(h.edges())
    for perm in permutations(range(g.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in g.edges()):
            return True
    return False


def all_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))
