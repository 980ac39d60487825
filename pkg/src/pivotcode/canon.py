"""Canonical labeling and isomorphism testing for optionally 2-colored graphs.

The canonical form is computed by iterated partition refinement with
individualization backtracking: starting from the color classes, cells are
refined to an equitable partition; while a non-singleton cell remains, each
of its vertices is individualized in turn and the subtree explored.  The
canonical labeling is the permutation minimizing the adjacency bit string
over all terminal nodes, where bits are ordered column-major over the upper
triangle (all pairs within the first t vertices precede any pair involving
vertex t+1, which makes prefix pruning possible).

Two sound prunings keep the search small:
  * prefix pruning: a subtree whose fixed leading bits already exceed the
    best key cannot contain the minimum;
  * automorphism pruning: discovered automorphisms that fix the current
    individualization path identify equivalent sibling branches (can be
    disabled; correctness does not depend on it).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, Coloring, relabel

_MAX_GENS = 128


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Total-order key; equal for two colored graphs iff they are isomorphic
    by a color-preserving vertex permutation."""

    key: bytes

    def __repr__(self) -> str:
        return f"CanonicalForm({self.key.hex()})"


def _refine(adj: tuple[int, ...], cells: list[list[int]], queue: list[int]) -> None:
    """Equitable refinement in place.

    Cells are split by neighbor counts into the splitter masks from `queue`;
    new parts are ordered by ascending count and appended as new splitters.
    Vertex order inside cells is preserved (kept ascending by callers).
    """
    qi = 0
    while qi < len(queue):
        smask = queue[qi]
        qi += 1
        ci = 0
        ncells = len(cells)
        while ci < ncells:
            cell = cells[ci]
            if len(cell) > 1:
                c0 = (adj[cell[0]] & smask).bit_count()
                for v in cell:
                    if (adj[v] & smask).bit_count() != c0:
                        break
                else:
                    ci += 1
                    continue
                buckets: dict[int, list[int]] = {}
                for v in cell:
                    k = (adj[v] & smask).bit_count()
                    b = buckets.get(k)
                    if b is None:
                        buckets[k] = [v]
                    else:
                        b.append(v)
                parts = [buckets[k] for k in sorted(buckets)]
                cells[ci : ci + 1] = parts
                ncells += len(parts) - 1
                for p in parts:
                    pm = 0
                    for v in p:
                        pm |= 1 << v
                    queue.append(pm)
                ci += len(parts)
            else:
                ci += 1


def _search(
    adj: tuple[int, ...], n: int, cells: list[list[int]], prune_autos: bool = True
) -> tuple[int, list[int]]:
    """Return (key bits, lab) minimizing the adjacency bit string.

    `lab[p]` is the vertex placed at canonical position p.  Key bits are a
    C(n,2)-bit integer, pair (i, j), i < j, of canonical positions appearing
    at bit (B - 1 - index) where index is the column-major rank of (i, j).
    """
    total_bits = n * (n - 1) // 2
    queue = [sum(1 << v for v in c) for c in cells]
    _refine(adj, cells, queue)

    best_bits = -1
    best_lab: list[int] = []
    gens: list[tuple[int, ...]] = []

    # stack frames: (cells, prefix, nlead, fixed path)
    def walk(cells: list[list[int]], prefix: int, nlead: int, fixed: tuple[int, ...]) -> None:
        nonlocal best_bits, best_lab
        # extend the fixed prefix over the new leading singleton cells
        lead = nlead
        for cell in cells[lead:] if lead else cells:
            if len(cell) != 1:
                break
            lead += 1
        if lead > nlead:
            heads = [c[0] for c in cells[:lead]]
            for j in range(nlead, lead):
                vj = heads[j]
                row = 0
                for i in range(j):
                    row = row << 1 | (adj[heads[i]] >> vj & 1)
                prefix = (prefix << j) | row
            if best_bits >= 0:
                plen = lead * (lead - 1) // 2
                if prefix > best_bits >> (total_bits - plen):
                    return
        if lead == len(cells) and all(len(c) == 1 for c in cells):
            # leaf: prefix covers all bits only when every cell is singleton
            if lead == n:
                lab = [c[0] for c in cells]
                if best_bits < 0 or prefix < best_bits:
                    best_bits = prefix
                    best_lab = lab
                elif prefix == best_bits and prune_autos:
                    g = [0] * n
                    for p in range(n):
                        g[best_lab[p]] = lab[p]
                    if len(gens) < _MAX_GENS:
                        gens.append(tuple(g))
                return
        # target: first smallest non-singleton cell
        ti = -1
        tsize = n + 1
        for idx, c in enumerate(cells):
            lc = len(c)
            if 1 < lc < tsize:
                tsize = lc
                ti = idx
        target = cells[ti]
        tried: list[int] = []
        for v in target:
            if prune_autos and tried and gens:
                # orbit pruning under generators fixing the current path
                uf = list(range(n))

                def find(x: int) -> int:
                    while uf[x] != x:
                        uf[x] = uf[uf[x]]
                        x = uf[x]
                    return x

                for gperm in gens:
                    ok = True
                    for f in fixed:
                        if gperm[f] != f:
                            ok = False
                            break
                    if ok:
                        for a_, b_ in enumerate(gperm):
                            ra, rb = find(a_), find(b_)
                            if ra != rb:
                                uf[ra] = rb
                rv = find(v)
                if any(find(w) == rv for w in tried):
                    continue
            tried.append(v)
            child = [list(c) for c in cells]
            rest = [x for x in target if x != v]
            child[ti : ti + 1] = [[v], rest]
            cqueue = [1 << v]
            _refine(adj, child, cqueue)
            walk(child, prefix, lead, fixed + (v,))

    walk(cells, 0, 0, ())
    return best_bits, best_lab


def _canon(
    adj: tuple[int, ...], n: int, colors: tuple[int, ...] | None
) -> tuple[int, tuple[int, ...]]:
    """Packed integer key and relabeling perm (perm[vertex] = position).

    The packed key embeds n and the size of color class 0 (or a no-color
    marker), then the canonical adjacency bits, so keys of different sizes
    or different color splits never compare equal.
    """
    if colors is None:
        cells = [list(range(n))]
        meta = n << 8
    else:
        zero = [v for v in range(n) if colors[v] == 0]
        one = [v for v in range(n) if colors[v] != 0]
        cells = [c for c in (zero, one) if c]
        meta = n << 8 | (len(zero) + 1)
    bits_, lab = _search(adj, n, cells)
    if bits_ < 0:
        bits_ = 0
    perm = [0] * n
    for pos, v in enumerate(lab):
        perm[v] = pos
    return (meta << (n * (n - 1) // 2)) | bits_, tuple(perm)


def _key_int(adj: tuple[int, ...], n: int, colors: tuple[int, ...] | None = None) -> int:
    """Packed integer canonical key (hot-path form of canonical_form)."""
    return _canon(adj, n, colors)[0]


def _key_bytes(key_int: int, n: int) -> bytes:
    nbytes = 2 + (n * (n - 1) // 2 + 7) // 8
    return key_int.to_bytes(nbytes, "big")


def canonical_form(
    g: Graph, coloring: Coloring | None = None
) -> tuple[CanonicalForm, tuple[int, ...]]:
    """Canonical form and the relabeling that produces it.

    Returns (form, perm) where perm[v] is the canonical position of vertex v;
    relabeling g by perm yields the graph encoded in the key.  The form is
    deterministic and invariant under any color-preserving relabeling of the
    input.
    """
    if coloring is not None:
        if len(coloring) != g.n:
            raise ValueError(f"coloring length {len(coloring)} != n={g.n}")
        colors = tuple(coloring)
        key, perm = _canon(g.adj, g.n, colors)
    else:
        key = g._canon_cache
        if key is not None:
            key, perm = key, _canon(g.adj, g.n, None)[1]
        else:
            key, perm = _canon(g.adj, g.n, None)
            object.__setattr__(g, "_canon_cache", key)
    return CanonicalForm(_key_bytes(key, g.n)), perm


def canonical_key(g: Graph, coloring: Coloring | None = None) -> CanonicalForm:
    """Canonical form only (see canonical_form)."""
    return canonical_form(g, coloring)[0]


def _cached_key_int(g: Graph) -> int:
    """Uncolored packed key, cached on the graph instance."""
    key = g._canon_cache
    if key is None:
        key = _canon(g.adj, g.n, None)[0]
        object.__setattr__(g, "_canon_cache", key)
    return key


def is_isomorphic(
    g: Graph,
    h: Graph,
    cg: Coloring | None = None,
    ch: Coloring | None = None,
) -> bool:
    """True iff there is a (color-preserving) isomorphism g -> h."""
    if g.n != h.n:
        return False
    if (cg is None) != (ch is None):
        raise ValueError("give colorings for both graphs or neither")
    if cg is None:
        return _cached_key_int(g) == _cached_key_int(h)
    return _key_int(g.adj, g.n, tuple(cg)) == _key_int(h.adj, h.n, tuple(ch))


def canonical_graph(g: Graph, coloring: Coloring | None = None) -> Graph:
    """The canonically relabeled copy of g."""
    _, perm = canonical_form(g, coloring)
    return relabel(g, perm)
