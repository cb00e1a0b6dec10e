"""Named graph families and exhaustive labelled enumeration."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .errors import CapExceeded
from .graph import Graph, GraphError, join

CENSUS_MAX_ORDER = 7


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    _need(n >= 1, f"edgeless graph needs n >= 1, got {n}")
    return Graph.empty(n)


def star(m: int) -> Graph:
    """K_{1,m}; the centre is vertex 0."""
    _need(m >= 1, f"star needs m >= 1, got {m}")
    return Graph.from_edges(m + 1, [(0, i) for i in range(1, m + 1)])


def wheel(n: int) -> Graph:
    """W_n = K_1 + C_n: hub 0, rim 1..n."""
    return join(complete(1), cycle(n))


def complete_multipartite(*parts: int) -> Graph:
    _need(len(parts) >= 1 and all(p >= 1 for p in parts), f"parts must be positive, got {parts}")
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]])


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p); pairs are visited in lexicographic order, one draw each."""
    _need(n >= 1, f"random graph needs n >= 1, got {n}")
    _need(0.0 <= p <= 1.0, f"p must lie in [0, 1], got {p}")
    if seed is None:
        raise GraphError("random graphs require an explicit seed")
    rng = random.Random(seed)
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def paw() -> Graph:
    """Triangle 0,1,2 with pendant 3 attached to 0."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "empty": empty,
    "star": star,
    "wheel": wheel,
    "complete_multipartite": complete_multipartite,
    "random": gnp,
    "petersen": petersen,
    "paw": paw,
}


def generate(family: str, *args, **kwargs) -> Graph:
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    return builder(*args, **kwargs)


def graph_from_mask(n: int, mask: int, pairs: list[tuple[int, int]] | None = None) -> Graph:
    """Graph whose edge set is selected by ``mask`` over lexicographic pairs."""
    pairs = pairs if pairs is not None else list(combinations(range(n), 2))
    adj = [0] * n
    i = 0
    while mask:
        if mask & 1:
            u, v = pairs[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        mask >>= 1
        i += 1
    return Graph._trusted(n, tuple(adj))


def enumerate_all_graphs(
    n: int, connected_only: bool = False, max_order: int = CENSUS_MAX_ORDER
) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, in edge-mask order.

    Mask bit ``i`` selects the ``i``-th pair of ``combinations(range(n), 2)``.
    """
    for _, g in enumerate_masked_graphs(n, connected_only, max_order):
        yield g


def enumerate_masked_graphs(
    n: int, connected_only: bool = False, max_order: int = CENSUS_MAX_ORDER
) -> Iterator[tuple[int, Graph]]:
    if n < 0:
        raise GraphError(f"order must be non-negative, got {n}")
    if n > max_order:
        raise CapExceeded(f"refusing to enumerate n={n} > cap {max_order} (2^{n * (n - 1) // 2} edge subsets)")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = graph_from_mask(n, mask, pairs)
        if connected_only and not g.is_connected():
            continue
        yield mask, g


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)
