"""graph6, DIMACS .col and plain edge-list readers/writers."""

from __future__ import annotations

from .graph import Graph, GraphError

GRAPH6_MAX_ORDER = 62
_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_ORDER:
        raise GraphError(f"graph6 short form supports n <= {GRAPH6_MAX_ORDER}, got {g.n}")
    bits = [g.adj[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (short form, n <= 62).

    Raises :class:`GraphError` naming the offending byte offset.
    """
    s = text.strip()
    offset = 0
    if s.startswith(_HEADER):
        offset = len(_HEADER)
        s = s[offset:]
    if not s:
        raise GraphError(f"graph6: empty input at byte {offset}")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"graph6: byte {offset + i} ({ch!r}) outside 63..126")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_ORDER:
        raise GraphError(f"graph6: byte {offset} encodes long-form order, unsupported")
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(s) - 1 != nbytes:
        raise GraphError(
            f"graph6: expected {nbytes} data bytes for n={n}, got {len(s) - 1} "
            f"(byte {offset + 1 + min(nbytes, len(s) - 1)})"
        )
    bits = []
    for ch in s[1:]:
        val = ord(ch) - 63
        bits.extend(val >> (5 - k) & 1 for k in range(6))
    for k in range(nbits, len(bits)):
        if bits[k]:
            raise GraphError(f"graph6: nonzero padding bit at byte {offset + 1 + k // 6}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def parse_dimacs(text: str) -> Graph:
    """Read DIMACS .col text ("p edge n m" then 1-based "e u v" lines).

    Duplicate edge lines collapse; reversed duplicates too.
    """
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphError(f"dimacs line {lineno}: second problem line")
            if len(parts) < 3:
                raise GraphError(f"dimacs line {lineno}: malformed problem line")
            try:
                n = int(parts[2])
            except ValueError:
                raise GraphError(f"dimacs line {lineno}: non-integer vertex count") from None
            if n < 0:
                raise GraphError(f"dimacs line {lineno}: negative vertex count")
        elif tag == "e":
            if n is None:
                raise GraphError(f"dimacs line {lineno}: edge before problem line")
            if len(parts) < 3:
                raise GraphError(f"dimacs line {lineno}: malformed edge line")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphError(f"dimacs line {lineno}: non-integer endpoint") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"dimacs line {lineno}: endpoint out of range 1..{n}")
            if u == v:
                raise GraphError(f"dimacs line {lineno}: self-loop on {u}")
            edges.add((min(u, v) - 1, max(u, v) - 1))
        # other line types (n, x, ...) carry no adjacency and are ignored
    if n is None:
        raise GraphError("dimacs: missing problem line")
    return Graph.from_edges(n, sorted(edges))


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str, n: int | None = None) -> Graph:
    """Read ``u v`` lines (0-based). Order is ``n`` if given, else max label + 1."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"edge list line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"edge list line {lineno}: non-integer endpoint") from None
        if u < 0 or v < 0:
            raise GraphError(f"edge list line {lineno}: negative label")
        if n is not None and (u >= n or v >= n):
            raise GraphError(f"edge list line {lineno}: endpoint out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge list line {lineno}: self-loop on {u}")
        edges.append((u, v))
    order = n if n is not None else max((max(e) for e in edges), default=-1) + 1
    return Graph.from_edges(order, edges)


def to_edgelist(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def load_graph(text: str, fmt: str = "auto") -> Graph:
    """Dispatch on ``fmt`` ("graph6", "dimacs", "edgelist" or "auto")."""
    if fmt == "auto":
        stripped = text.strip()
        if any(line.split()[:1] == ["p"] for line in stripped.splitlines()):
            fmt = "dimacs"
        elif "\n" not in stripped and " " not in stripped:
            fmt = "graph6"
        else:
            fmt = "edgelist"
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise GraphError(f"unknown graph format {fmt!r}")
