"""Bit-packed simple undirected graphs and the local complementation family.

A graph on n <= 64 vertices is stored as one integer bitmask per vertex, so
that toggling a set of edges incident to a vertex is a single XOR.  All
operations are pure: they take a graph and return a new graph.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

MAX_VERTICES = 64

LEFT = 0
RIGHT = 1

# A coloring assigns LEFT or RIGHT to every vertex (tuple of length n).
Coloring = tuple


class Graph:
    """Immutable simple undirected graph.

    ``adj[i]`` has bit ``j`` set iff ``{i, j}`` is an edge.  The matrix is
    symmetric with zero diagonal; bits at positions >= n are zero.
    """

    __slots__ = ("n", "adj", "_canon_cache")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} rejected")
            if rows[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v}) rejected")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(rows))
        object.__setattr__(self, "_canon_cache", None)

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Graph":
        """Build a graph from adjacency bitmask rows, validating the invariants."""
        rows = tuple(rows)
        n = len(rows)
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        full = (1 << n) - 1
        for i, r in enumerate(rows):
            if r & ~full:
                raise ValueError(f"row {i} has bits set at positions >= n")
            if r >> i & 1:
                raise ValueError(f"nonzero diagonal at vertex {i}")
        for i in range(n):
            for j in range(i + 1, n):
                if (rows[i] >> j & 1) != (rows[j] >> i & 1):
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")
        return cls._from_adj(n, rows)

    @classmethod
    def _from_adj(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # trusted internal constructor, skips validation
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "_canon_cache", None)
        return g

    # -- convenience builders -------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, n: int) -> "Graph":
        """Star with center 0 and n - 1 leaves."""
        return cls(n, [(0, i) for i in range(1, n)])

    # -- queries --------------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return bits(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                b = m & -m
                m ^= b
                yield u, b.bit_length() - 1

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    # -- value semantics --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("Graph is immutable")

    def __repr__(self) -> str:
        return f"Graph({self.n}, {sorted(self.edges())})"

    def __reduce__(self):
        return (Graph._from_adj, (self.n, self.adj))


def bits(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# -- core operations on raw adjacency tuples (hot paths) ----------------------


def _lc_adj(adj: tuple[int, ...], v: int) -> tuple[int, ...]:
    """Local complementation at v: complement the subgraph induced on N(v)."""
    nb = adj[v]
    rows = list(adj)
    m = nb
    while m:
        b = m & -m
        m ^= b
        x = b.bit_length() - 1
        rows[x] = adj[x] ^ nb ^ b
    return tuple(rows)


def _elc_toggle_adj(adj: tuple[int, ...], u: int, v: int) -> list[int]:
    """Toggle all cross pairs among the neighbor classes of edge {u, v}.

    Classes: A adjacent to u only, B to v only, C to both (u, v excluded).
    Returns a mutable row list without the final label swap.
    """
    bu = 1 << u
    bv = 1 << v
    nu = adj[u] & ~bv
    nv = adj[v] & ~bu
    a = nu & ~nv
    b = nv & ~nu
    c = nu & nv
    rows = list(adj)
    tog = b | c
    m = a
    while m:
        lo = m & -m
        m ^= lo
        x = lo.bit_length() - 1
        rows[x] ^= tog
    tog = a | c
    m = b
    while m:
        lo = m & -m
        m ^= lo
        x = lo.bit_length() - 1
        rows[x] ^= tog
    tog = a | b
    m = c
    while m:
        lo = m & -m
        m ^= lo
        x = lo.bit_length() - 1
        rows[x] ^= tog
    return rows


def _swap_rows(rows: list[int], u: int, v: int) -> None:
    """Exchange labels u and v in place (row and column swap)."""
    rows[u], rows[v] = rows[v], rows[u]
    buv = (1 << u) | (1 << v)
    for i, r in enumerate(rows):
        if (r >> u ^ r >> v) & 1:
            rows[i] = r ^ buv

def _elc_adj(adj: tuple[int, ...], u: int, v: int) -> tuple[int, ...]:
    """Edge local complementation on {u, v}: class toggles plus label swap."""
    rows = _elc_toggle_adj(adj, u, v)
    _swap_rows(rows, u, v)
    return tuple(rows)


def _connected(adj: tuple[int, ...], n: int) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= adj[b.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def _bipartition(adj: tuple[int, ...], n: int) -> tuple[int, ...] | None:
    """Two-color by BFS, or None if an odd cycle exists.

    Component roots (lowest unvisited vertex, ascending) are colored LEFT.
    """
    color = [-1] * n
    for root in range(n):
        if color[root] >= 0:
            continue
        color[root] = LEFT
        frontier = [root]
        while frontier:
            nxt = []
            for x in frontier:
                cx = color[x] ^ 1
                m = adj[x]
                while m:
                    b = m & -m
                    m ^= b
                    y = b.bit_length() - 1
                    if color[y] < 0:
                        color[y] = cx
                        nxt.append(y)
                    elif color[y] != cx:
                        return None
            frontier = nxt
    return tuple(color)


# -- public operations ---------------------------------------------------------


def local_complement(g: Graph, v: int) -> Graph:
    """Complement the induced subgraph on the neighborhood of v."""
    g._check_vertex(v)
    return Graph._from_adj(g.n, _lc_adj(g.adj, v))


def _check_edge(g: Graph, u: int, v: int) -> None:
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v or not g.adj[u] >> v & 1:
        raise ValueError(f"{{{u}, {v}}} is not an edge")


def elc_via_lc(g: Graph, u: int, v: int) -> Graph:
    """Edge local complementation on {u, v} as the composition g*u*v*u."""
    _check_edge(g, u, v)
    return Graph._from_adj(g.n, _lc_adj(_lc_adj(_lc_adj(g.adj, u), v), u))


def elc_classes(g: Graph, u: int, v: int) -> Graph:
    """Edge local complementation on {u, v} by the neighbor-class rule.

    Partitions the other vertices into classes adjacent to u only, to v
    only, or to both; toggles every pair spanning two distinct classes;
    finally swaps the labels u and v.  Agrees exactly with elc_via_lc.
    """
    _check_edge(g, u, v)
    return Graph._from_adj(g.n, _elc_adj(g.adj, u, v))


def elc_toggle(g: Graph, u: int, v: int) -> Graph:
    """The pure toggle part of ELC on {u, v}, without the label swap."""
    _check_edge(g, u, v)
    return Graph._from_adj(g.n, tuple(_elc_toggle_adj(g.adj, u, v)))


def pivot_bipartite(g: Graph, u: int, v: int) -> Graph:
    """Fast ELC for bipartite graphs: toggle N(u)\\{v} x N(v)\\{u}, swap u, v.

    Implemented as row XORs.  Requires g bipartite; agrees bit for bit with
    elc_classes on such inputs.
    """
    _check_edge(g, u, v)
    if _bipartition(g.adj, g.n) is None:
        raise ValueError("pivot_bipartite requires a bipartite graph")
    adj = g.adj
    a = adj[u] & ~(1 << v)
    b = adj[v] & ~(1 << u)
    rows = list(adj)
    m = a
    while m:
        lo = m & -m
        m ^= lo
        rows[lo.bit_length() - 1] ^= b
    m = b
    while m:
        lo = m & -m
        m ^= lo
        rows[lo.bit_length() - 1] ^= a
    _swap_rows(rows, u, v)
    return Graph._from_adj(g.n, tuple(rows))


def swap_labels(g: Graph, u: int, v: int) -> Graph:
    """Exchange the labels of two vertices."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        return g
    rows = list(g.adj)
    _swap_rows(rows, u, v)
    return Graph._from_adj(g.n, tuple(rows))


def relabel(g: Graph, perm: tuple[int, ...]) -> Graph:
    """Apply a vertex permutation: vertex i becomes perm[i]."""
    n = g.n
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    rows = [0] * n
    for i in range(n):
        r = g.adj[i]
        ri = 0
        while r:
            b = r & -r
            r ^= b
            ri |= 1 << perm[b.bit_length() - 1]
        rows[perm[i]] = ri
    return Graph._from_adj(n, tuple(rows))


def is_connected(g: Graph) -> bool:
    """True iff the graph has a single connected component."""
    return _connected(g.adj, g.n)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by lowest vertex."""
    out = []
    left = (1 << g.n) - 1
    while left:
        root = (left & -left).bit_length() - 1
        seen = 1 << root
        frontier = seen
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= g.adj[b.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(bits(seen))
        left &= ~seen
    return out


def bipartition(g: Graph) -> Coloring | None:
    """A proper 2-coloring (LEFT/RIGHT per vertex), or None if none exists."""
    return _bipartition(g.adj, g.n)


def is_bipartite(g: Graph) -> bool:
    return _bipartition(g.adj, g.n) is not None


def side_counts(coloring: Coloring) -> tuple[int, int]:
    """Number of LEFT and RIGHT vertices."""
    left = sum(1 for c in coloring if c == LEFT)
    return left, len(coloring) - left


def check_coloring(g: Graph, coloring: Coloring) -> None:
    """Raise unless coloring is a proper 2-coloring of g."""
    if len(coloring) != g.n:
        raise ValueError(f"coloring length {len(coloring)} != n={g.n}")
    if any(c not in (LEFT, RIGHT) for c in coloring):
        raise ValueError("coloring values must be LEFT or RIGHT")
    for u, v in g.edges():
        if coloring[u] == coloring[v]:
            raise ValueError(f"edge ({u}, {v}) joins two {coloring[u]}-side vertices")
