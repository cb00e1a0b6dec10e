"""Proper colourings, bad edges, exact chromatic number and colouring enumeration.

Colourings are enumerated in canonical form: colour ``i`` first appears at a
lower vertex than colour ``i + 1``. This picks one representative from each
orbit under permutation of colour names, so canonical colourings and vertex
partitions into independent sets are in bijection.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import ContractError, check_cap
from .graph import Graph, iter_bits


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> colour index with every index in ``0..k-1`` used."""

    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        a = tuple(self.assignment)
        object.__setattr__(self, "assignment", a)
        if a and set(a) != set(range(max(a) + 1)):
            raise ContractError(f"colour indices {sorted(set(a))} do not cover 0..{max(a)}")
        if any(c < 0 for c in a):
            raise ContractError("negative colour index")

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> Coloring:
        colour = [-1] * n
        for i, cls_ in enumerate(classes):
            for v in cls_:
                colour[v] = i
        if -1 in colour:
            raise ContractError(f"vertex {colour.index(-1)} is uncoloured")
        return cls(tuple(colour))

    @property
    def n(self) -> int:
        return len(self.assignment)

    @cached_property
    def k(self) -> int:
        return max(self.assignment) + 1 if self.assignment else 0

    @cached_property
    def theta(self) -> tuple[int, ...]:
        counts = Counter(self.assignment)
        return tuple(counts[i] for i in range(self.k))

    def class_masks(self) -> list[int]:
        masks = [0] * self.k
        for v, c in enumerate(self.assignment):
            masks[c] |= 1 << v
        return masks

    def canonical(self) -> Coloring:
        return Coloring(canonical_form(self.assignment))

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def __len__(self) -> int:
        return len(self.assignment)

    def to_json(self) -> list[int]:
        return list(self.assignment)


@dataclass(frozen=True)
class VertexPartition:
    """A colouring modulo interchange of colour classes."""

    classes: frozenset[frozenset[int]]

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]]) -> VertexPartition:
        return cls(frozenset(frozenset(s) for s in sets))

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> VertexPartition:
        return cls(frozenset(frozenset(iter_bits(m)) for m in masks))

    def sorted_classes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(tuple(sorted(c)) for c in self.classes))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.classes), reverse=True))

    def to_coloring(self, n: int) -> Coloring:
        return Coloring.from_classes(n, self.sorted_classes())

    def __lt__(self, other: VertexPartition) -> bool:
        return self.sorted_classes() < other.sorted_classes()

    def __len__(self) -> int:
        return len(self.classes)

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.sorted_classes()]


def canonical_form(assignment: Sequence[int]) -> tuple[int, ...]:
    rename: dict[int, int] = {}
    return tuple(rename.setdefault(c, len(rename)) for c in assignment)


def partition_of(c: Coloring) -> VertexPartition:
    return VertexPartition.from_masks(c.class_masks())


def _check_domain(g: Graph, c: Coloring) -> None:
    if len(c.assignment) != g.n:
        raise ContractError(f"colouring covers {len(c.assignment)} vertices, graph has {g.n}")


def bad_edges(g: Graph, c: Coloring) -> list[tuple[int, int]]:
    _check_domain(g, c)
    a = c.assignment
    return [(u, v) for u, v in g.edges() if a[u] == a[v]]


def is_proper(g: Graph, c: Coloring) -> bool:
    _check_domain(g, c)
    a = c.assignment
    return all(a[u] != a[v] for u, v in g.edges())


def require_proper(g: Graph, c: Coloring) -> None:
    bad = bad_edges(g, c)
    if bad:
        u, v = bad[0]
        raise ContractError(f"colouring is improper: bad edge {u}{v}")


# chromatic number


def greedy_clique(g: Graph) -> int:
    """Size of a clique grown greedily from each vertex; a lower bound on chi."""
    best = 0
    degs = g.degrees()
    for start in range(g.n):
        clique = 1
        cand = g.adj[start]
        while cand:
            v = max(iter_bits(cand), key=lambda u: (degs[u], -u))
            clique += 1
            cand &= g.adj[v]
        best = max(best, clique)
    return best


def dsatur(g: Graph) -> tuple[int, ...]:
    """DSATUR greedy colouring; ties go to higher degree, then lower index."""
    n = g.n
    colour = [-1] * n
    sat = [0] * n  # bitmask of neighbour colours
    degs = g.degrees()
    for _ in range(n):
        v = max(
            (u for u in range(n) if colour[u] < 0),
            key=lambda u: (sat[u].bit_count(), degs[u], -u),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colour[v] = c
        for u in iter_bits(g.adj[v]):
            sat[u] |= 1 << c
    return tuple(colour)


def chromatic_number(g: Graph) -> int:
    """Exact chi(G) by DSATUR branch and bound between clique and greedy bounds."""
    if g.n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    lower = greedy_clique(g)
    upper = max(dsatur(g)) + 1
    if lower == upper:
        return upper
    best = upper
    n = g.n
    adj = g.adj
    degs = g.degrees()
    colour = [-1] * n
    sat = [0] * n

    def search(coloured: int, used: int) -> bool:
        # returns True once a colouring with `lower` colours is found
        nonlocal best
        if coloured == n:
            best = used
            return best == lower
        v = -1
        key = None
        for u in range(n):
            if colour[u] < 0:
                kk = (sat[u].bit_count(), degs[u], -u)
                if key is None or kk > key:
                    v, key = u, kk
        limit = min(used + 1, best - 1)
        for c in range(limit):
            if sat[v] >> c & 1:
                continue
            colour[v] = c
            changed = []
            for u in iter_bits(adj[v]):
                if colour[u] < 0 and not sat[u] >> c & 1:
                    sat[u] |= 1 << c
                    changed.append(u)
            if search(coloured + 1, max(used, c + 1)):
                return True
            for u in changed:
                sat[u] &= ~(1 << c)
            colour[v] = -1
            if best <= lower:
                return True
        return False

    search(0, 0)
    return best


# enumeration


def iter_canonical_colorings(adj: Sequence[int], n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Canonical proper colourings of the graph ``adj`` using exactly ``k`` colours.

    Raw tuples; hot path for the census.
    """
    if n == 0:
        if k == 0:
            yield ()
        return
    if k <= 0 or k > n:
        return
    colour = [0] * n
    masks = [0] * k

    def rec(v: int, used: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            if used == k:
                yield tuple(colour)
            return
        remaining = n - v
        nbrs = adj[v]
        bit = 1 << v
        # every still-unused colour needs a vertex
        if remaining == k - used:
            choices = range(used, used + 1)
        else:
            choices = range(min(used + 1, k))
        for c in choices:
            if masks[c] & nbrs:
                continue
            colour[v] = c
            masks[c] |= bit
            yield from rec(v + 1, used + 1 if c == used else used)
            masks[c] ^= bit

    yield from rec(0, 0)


def enumerate_colorings(g: Graph, k: int, cap: int | None = None) -> Iterator[Coloring]:
    """Canonical proper colourings of ``g`` with exactly ``k`` colours."""
    check_cap(g.n, cap, "colouring enumeration", "use near_lucky_coloring for an upper bound")
    for a in iter_canonical_colorings(g.adj, g.n, k):
        yield Coloring(a)


def enumerate_chromatic_colorings(g: Graph, cap: int | None = None) -> Iterator[Coloring]:
    """One canonical representative per colour-permutation orbit of chi-colourings."""
    check_cap(g.n, cap, "chromatic colouring enumeration", "use near_lucky_coloring for an upper bound")
    return enumerate_colorings(g, chromatic_number(g), cap)


# chromatic polynomial


def count_proper_colorings(g: Graph, k: int, cap: int | None = None) -> int:
    """P(G, k) by deletion-contraction (sparse) / addition-contraction (dense), memoised."""
    check_cap(g.n, cap, "chromatic polynomial")
    if k < 0:
        raise ContractError(f"colour count must be non-negative, got {k}")
    memo: dict[tuple[int, ...], int] = {}
    return _chrom_poly(g.adj, k, memo)


def _falling(k: int, n: int) -> int:
    out = 1
    for i in range(n):
        out *= k - i
    return out


def _chrom_poly(adj: tuple[int, ...], k: int, memo: dict) -> int:
    n = len(adj)
    m = sum(r.bit_count() for r in adj) // 2
    if m == 0:
        return k**n
    if m == n * (n - 1) // 2:
        return _falling(k, n)
    hit = memo.get(adj)
    if hit is not None:
        return hit
    comps = _components(adj)
    if len(comps) > 1:
        out = 1
        for comp in comps:
            out *= _chrom_poly(_induce(adj, comp), k, memo)
    else:
        # pivot on the first vertex with missing/present pair
        if 2 * m <= n * (n - 1) // 2:
            u = next(v for v in range(n) if adj[v])
            w = (adj[u] & -adj[u]).bit_length() - 1
            deleted = list(adj)
            deleted[u] &= ~(1 << w)
            deleted[w] &= ~(1 << u)
            out = _chrom_poly(tuple(deleted), k, memo) - _chrom_poly(_contract(adj, u, w), k, memo)
        else:
            full = (1 << n) - 1
            u = next(v for v in range(n) if adj[v] | 1 << v != full)
            missing = full & ~adj[u] & ~(1 << u)
            w = (missing & -missing).bit_length() - 1
            added = list(adj)
            added[u] |= 1 << w
            added[w] |= 1 << u
            out = _chrom_poly(tuple(added), k, memo) + _chrom_poly(_contract(adj, u, w), k, memo)
    memo[adj] = out
    return out


def _components(adj: tuple[int, ...]) -> list[int]:
    left = (1 << len(adj)) - 1
    comps = []
    while left:
        seen = frontier = left & -left
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        left &= ~seen
    return comps


def _induce(adj: tuple[int, ...], mask: int) -> tuple[int, ...]:
    verts = list(iter_bits(mask))
    index = {v: i for i, v in enumerate(verts)}
    out = []
    for v in verts:
        row = 0
        for u in iter_bits(adj[v] & mask):
            row |= 1 << index[u]
        out.append(row)
    return tuple(out)


def _contract(adj: tuple[int, ...], u: int, w: int) -> tuple[int, ...]:
    """Merge ``w`` into ``u`` and drop ``w`` (labels above ``w`` shift down)."""
    n = len(adj)
    merged = list(adj)
    merged[u] = (adj[u] | adj[w]) & ~(1 << u) & ~(1 << w)
    for x in iter_bits(adj[w]):
        if x != u:
            merged[x] |= 1 << u
    keep = [v for v in range(n) if v != w]
    return _induce(tuple(merged), sum(1 << v for v in keep))
