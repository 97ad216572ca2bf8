"""Text format for graph instances.

Layout: a header line ``n m``, then exactly m edge lines ``u v`` with 0-based
ids, then optional color lines ``c u R|W|B`` (black is the default and never
written) and an optional budget line ``k K``.  Lines starting with ``#`` and
blank lines are ignored anywhere.  Serialization writes edges in ascending
order so identical graphs serialize to identical bytes.
"""

from __future__ import annotations

from .graph import Color, ColoredGraph, GraphError


class ParseError(ValueError):
    def __init__(self, message: str, line_no: int) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_graph(text: str) -> tuple[ColoredGraph, int | None]:
    """Parse a graph file; returns the graph and the embedded budget, if any."""
    g: ColoredGraph | None = None
    n = m = 0
    edges_read = 0
    seen_edges: set[tuple[int, int]] = set()
    colored: set[int] = set()
    budget: int | None = None
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if g is None:
            if len(parts) != 2:
                raise ParseError(f"expected header 'n m', got {line!r}", line_no)
            n, m = _int(parts[0], line_no), _int(parts[1], line_no)
            if n < 0 or m < 0:
                raise ParseError("vertex and edge counts must be non-negative", line_no)
            g = ColoredGraph.from_edges(n)
        elif edges_read < m:
            if len(parts) != 2:
                raise ParseError(f"expected edge 'u v', got {line!r}", line_no)
            u, v = _int(parts[0], line_no), _int(parts[1], line_no)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"edge ({u},{v}) out of range for n={n}", line_no)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", line_no)
            key = (min(u, v), max(u, v))
            if key in seen_edges:
                raise ParseError(f"duplicate edge ({u},{v})", line_no)
            seen_edges.add(key)
            g.add_edge(u, v)
            edges_read += 1
        elif parts[0] == "c":
            if len(parts) != 3:
                raise ParseError(f"expected color line 'c u R|W|B', got {line!r}", line_no)
            v = _int(parts[1], line_no)
            if not 0 <= v < n:
                raise ParseError(f"color for out-of-range vertex {v}", line_no)
            if v in colored:
                raise ParseError(f"duplicate color line for vertex {v}", line_no)
            if parts[2] not in ("R", "W", "B"):
                raise ParseError(f"unknown color {parts[2]!r}", line_no)
            colored.add(v)
            g.set_color(v, Color.from_letter(parts[2]))
        elif parts[0] == "k":
            if len(parts) != 2:
                raise ParseError(f"expected budget line 'k K', got {line!r}", line_no)
            if budget is not None:
                raise ParseError("duplicate budget line", line_no)
            budget = _int(parts[1], line_no)
            if budget < 0:
                raise ParseError("budget must be non-negative", line_no)
        else:
            raise ParseError(f"expected color or budget line, got {line!r}", line_no)
    if g is None:
        raise ParseError("empty input, expected header 'n m'", 1)
    if edges_read < m:
        raise ParseError(f"expected {m} edge lines, found {edges_read}", line_no)
    return g, budget


def _int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", line_no) from None


def serialize_graph(g: ColoredGraph, k: int | None = None) -> str:
    """Serialize a graph whose ids are contiguous 0..n-1.

    Graphs with deletion gaps must go through ``relabel_contiguous`` first;
    requiring that here keeps parse(serialize(g)) an exact identity.
    """
    verts = g.vertices()
    n = len(verts)
    if verts != list(range(n)):
        raise GraphError("vertex ids are not contiguous 0..n-1; relabel before writing")
    edges = g.edges()
    lines = [f"{n} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    lines += [
        f"c {v} {g.color(v).value}" for v in verts if g.color(v) is not Color.BLACK
    ]
    if k is not None:
        lines.append(f"k {k}")
    return "\n".join(lines) + "\n"


def relabel_contiguous(g: ColoredGraph) -> tuple[ColoredGraph, dict[int, int]]:
    """Rename vertices to 0..n-1 preserving id order; returns (graph, old->new)."""
    mapping = {old: new for new, old in enumerate(g.vertices())}
    out = ColoredGraph()
    for old in g.vertices():
        out.add_vertex(g.color(old))
    for u, v in g.edges():
        out.add_edge(mapping[u], mapping[v])
    return out, mapping
