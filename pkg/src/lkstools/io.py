"""File formats: graph6, plain edge lists, tree/weight/partition files."""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError
from .graphs import Graph, build_graph
from .trees import RootedTree


def graph6_encode(G: Graph) -> str:
    n = G.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    else:
        raise InputError("graph6 encoder supports n <= 258047")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if G.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for t in range(0, len(bits), 6):
        val = 0
        for b in bits[t:t + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return "".join(chr(c) for c in head + body)


def graph6_decode(text: str) -> Graph:
    data = text.strip()
    if not data:
        raise InputError("empty graph6 input at byte 0")
    codes = []
    for off, ch in enumerate(data):
        c = ord(ch)
        if not (63 <= c <= 126):
            raise InputError(f"invalid graph6 byte at offset {off}")
        codes.append(c - 63)
    if codes[0] < 63:
        n = codes[0]
        body = codes[1:]
    else:
        if len(codes) < 4:
            raise InputError(f"truncated graph6 header at offset {len(codes)}")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        body = codes[4:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise InputError(f"graph6 body length mismatch at offset {len(data)}")
    bits = []
    for val in body:
        for k in range(5, -1, -1):
            bits.append((val >> k) & 1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return build_graph(n, edges)


def parse_edgelist(text: str) -> Graph:
    """`n m` header followed by m `u v` lines (0-indexed)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise InputError("edge list header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise InputError("edge list header must be two integers")
    if len(lines) - 1 != m:
        raise InputError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InputError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(n, edges)


def parse_graph(data: bytes | str, fmt: str = "auto") -> Graph:
    """Decode a graph file: graph6 line(s) or `n m` edge-list text."""
    text = data.decode() if isinstance(data, bytes) else data
    if fmt == "auto":
        first = text.strip().splitlines()[0] if text.strip() else ""
        parts = first.split()
        fmt = "edgelist" if len(parts) == 2 and all(p.isdigit() for p in parts) else "graph6"
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise InputError("expected a single graph6 line")
        return graph6_decode(lines[0])
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise InputError(f"unknown graph format {fmt!r}")


def format_tree(T: RootedTree) -> str:
    """`n root` header then one parent entry per line (-1 for the root)."""
    lines = [f"{T.n} {T.root}"]
    lines.extend(str(p) for p in T.parent)
    return "\n".join(lines) + "\n"


def parse_tree(text: str, root: int | None = None) -> RootedTree:
    """Read the parent-array format, or an edge list when `root` is given."""
    if root is not None:
        G = parse_edgelist(text)
        return RootedTree.from_edges(G.n, G.edges(), root)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty tree input")
    head = lines[0].split()
    if len(head) != 2:
        raise InputError("tree header must be 'n root'")
    n, r = int(head[0]), int(head[1])
    if len(lines) - 1 != n:
        raise InputError(f"expected {n} parent lines, got {len(lines) - 1}")
    parents = [int(ln.strip()) for ln in lines[1:]]
    return RootedTree(parents, r)


def parse_tree_line(line: str) -> RootedTree:
    """Single-line stream form: space-separated parent entries, -1 marks the root."""
    parents = [int(x) for x in line.split()]
    roots = [i for i, p in enumerate(parents) if p == -1]
    if len(roots) != 1:
        raise InputError("tree line must contain exactly one -1 entry")
    return RootedTree(parents, roots[0])


def format_tree_line(T: RootedTree) -> str:
    return " ".join(str(p) for p in T.parent)


def parse_weights(text: str) -> dict[tuple[int, int], Fraction]:
    """`u v w` lines, w decimal."""
    out: dict[tuple[int, int], Fraction] = {}
    for ln in text.splitlines():
        if not ln.strip():
            continue
        parts = ln.split()
        if len(parts) != 3:
            raise InputError(f"bad weight line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        out[(min(u, v), max(u, v))] = Fraction(parts[2])
    return out


def parse_vertex_set(text: str) -> set[int]:
    return {int(x) for x in text.split()}


def parse_partition(text: str) -> tuple[list[set[int]], set[int]]:
    """One line per cluster; an optional final line prefixed `~` is the residue."""
    clusters: list[set[int]] = []
    residue: set[int] = set()
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        if ln.startswith("~"):
            residue = {int(x) for x in ln[1:].split()}
        else:
            clusters.append({int(x) for x in ln.split()})
    return clusters, residue
