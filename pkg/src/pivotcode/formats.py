"""Graph and matrix serialization: graph6, edge lists, DOT, 0/1 matrix text.

The graph6 codec covers the standard single-byte size range (n <= 62),
which is ample here since classification work stays far below that.
"""

from __future__ import annotations

from .graph import Graph

_G6_MAX = 62
_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 string (printable ASCII, no trailing newline)."""
    n = g.n
    if n > _G6_MAX:
        raise ValueError(f"graph6 size byte covers n <= {_G6_MAX}, got {n}")
    out = [chr(n + 63)]
    # upper triangle, column major: (0,1), (0,2), (1,2), (0,3), ...
    buf = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            buf = buf << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(buf + 63))
                buf = 0
                nbits = 0
    if nbits:
        out.append(chr((buf << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(s: str) -> Graph:
    """Decode a graph6 string, tolerating the optional format header."""
    s = s.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise ValueError("empty graph6 string")
    n = ord(s[0]) - 63
    if not 0 <= n <= _G6_MAX:
        raise ValueError(f"unsupported graph6 size byte {s[0]!r}")
    if n == 0:
        raise ValueError("graph6 string encodes an empty vertex set")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits_ = 0
    for ch in body:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise ValueError(f"invalid graph6 byte {ch!r}")
        bits_ = bits_ << 6 | v
    total = 6 * need
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits_ >> (total - 1 - pos) & 1:
                edges.append((i, j))
            pos += 1
    return Graph(n, edges)


def write_graph6_lines(graphs, fh) -> None:
    """Write one graph6 string per line."""
    for g in graphs:
        fh.write(to_graph6(g))
        fh.write("\n")


def read_graph6_lines(fh):
    """Yield graphs from a line-per-graph graph6 stream.

    Blank lines and # comments are skipped, so orbit dumps with header
    lines read back directly.
    """
    for line in fh:
        line = line.strip()
        if line and not line.startswith("#"):
            yield from_graph6(line)


def to_edge_list(g: Graph) -> str:
    """Plain text: first line 'n m', then one 'u v' line per edge."""
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln for ln in (l.strip() for l in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)


def to_dot(g: Graph, coloring=None) -> str:
    """GraphViz source; an optional 2-coloring is rendered as two node shapes."""
    lines = ["graph g {"]
    if coloring is not None:
        for v in range(g.n):
            shape = "circle" if coloring[v] == 0 else "box"
            lines.append(f"  {v} [shape={shape}];")
    else:
        for v in range(g.n):
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_adjacency_text(g: Graph) -> str:
    """One row of '0'/'1' characters per vertex."""
    return "\n".join("".join("1" if g.adj[i] >> j & 1 else "0" for j in range(g.n)) for i in range(g.n)) + "\n"


def from_adjacency_text(text: str) -> Graph:
    rows_s = [ln for ln in (l.strip() for l in text.splitlines()) if ln]
    n = len(rows_s)
    rows = []
    for i, ln in enumerate(rows_s):
        if len(ln) != n or any(c not in "01" for c in ln):
            raise ValueError(f"row {i} is not {n} characters of 0/1")
        rows.append(sum(1 << j for j, c in enumerate(ln) if c == "1"))
    return Graph.from_rows(rows)


def to_matrix_text(rows: tuple[int, ...], ncols: int) -> str:
    """Render generator-matrix rows (bit j = column j) as 0/1 lines."""
    return "\n".join("".join("1" if r >> j & 1 else "0" for j in range(ncols)) for r in rows) + "\n"


def from_matrix_text(text: str) -> tuple[tuple[int, ...], int]:
    """Parse 0/1 lines into (rows, ncols); all lines must have equal width."""
    lines = [ln for ln in (l.strip() for l in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix")
    ncols = len(lines[0])
    rows = []
    for i, ln in enumerate(lines):
        if len(ln) != ncols or any(c not in "01" for c in ln):
            raise ValueError(f"row {i} is not {ncols} characters of 0/1")
        rows.append(sum(1 << j for j, c in enumerate(ln) if c == "1"))
    return tuple(rows), ncols
