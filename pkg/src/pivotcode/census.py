"""Classification drivers: orbit censuses, the extension technique, the
Euler transform, and code counting.

The bipartite classifier builds level n from level n-1 by vertex extension:
every orbit representative is extended by a new vertex joined to every
nonempty subset of one side, and extensions are deduplicated against the
set of canonical forms of all orbit members seen so far.  Expanding a new
orbit inserts every member's canonical form, so later extensions landing
anywhere in that orbit are recognized immediately.

The same pattern classifies an exhaustive stream of connected graphs
(general or bipartite) under ELC or LC moves.  Streams are normally
produced externally; `connected_graph_classes` and
`connected_bipartite_classes` generate them here by the same extension
idea, one graph per isomorphism class, for setups without a generator
tool.

Concurrency: the map phase (candidate -> canonical key) may run on worker
processes; the reduce phase (dedup + orbit expansion) is sequential and
consumes candidates in a deterministic order, so results are identical for
every worker count.
"""

from __future__ import annotations

import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .graph import Graph, Coloring, LEFT, RIGHT, MAX_VERTICES
from .graph import _bipartition, _connected
from .canon import _key_int, _cached_key_int, canonical_graph
from .orbit import _elc_classes, _lc_classes, _side_degree_mins
from .formats import to_graph6, from_graph6

BIPARTITE_GUARD = 12
GENERAL_GUARD = 9


@dataclass(frozen=True)
class OrbitRow:
    """One classified orbit: representative plus per-orbit statistics.

    `a`, `b` and the degree minima are set for bipartite ELC runs only;
    `isodual` only when a == b (it is a property of the orbit's code);
    `elc_suborbits` only for LC runs that requested the ELC refinement.
    """

    rep: Graph
    size: int
    a: int | None = None
    b: int | None = None
    delta_left: int | None = None
    delta_right: int | None = None
    isodual: bool | None = None
    elc_suborbits: int | None = None


@dataclass(frozen=True)
class RepSet:
    n: int
    rows: tuple[OrbitRow, ...]

    @property
    def orbit_count(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class CodeCounts:
    n: int
    indecomposable: int
    isodual: int
    by_k: dict[int, int]


def extend_bipartite(g: Graph, coloring: Coloring) -> list[tuple[Graph, Coloring]]:
    """All one-vertex extensions: a new vertex joined to every nonempty
    subset of one side, placed on the opposite side.

    Yields 2^a + 2^b - 2 graphs; connected inputs give connected outputs.
    """
    n = g.n
    if n >= MAX_VERTICES:
        raise ValueError(f"cannot extend past {MAX_VERTICES} vertices")
    if len(coloring) != n:
        raise ValueError(f"coloring length {len(coloring)} != n={n}")
    out = []
    for side in (LEFT, RIGHT):
        verts = [v for v in range(n) if coloring[v] == side]
        new_color = coloring + (side ^ 1,)
        for sub in range(1, 1 << len(verts)):
            rows = list(g.adj)
            nb = 0
            m = sub
            while m:
                lo = m & -m
                m ^= lo
                v = verts[lo.bit_length() - 1]
                rows[v] |= 1 << n
                nb |= 1 << v
            rows.append(nb)
            out.append((Graph._from_adj(n + 1, tuple(rows)), new_color))
    return out


# -- parallel map phase ---------------------------------------------------------


def _adj_key(item: tuple[tuple[int, ...], int]) -> int:
    return _key_int(item[0], item[1], None)


def _candidate_keys(cands: list[tuple[tuple[int, ...], int]], workers: int) -> list[int]:
    """Canonical key per candidate, order-preserving; workers > 1 uses
    processes but never changes the result."""
    if workers <= 1 or len(cands) < 64:
        return [_adj_key(c) for c in cands]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        chunk = max(16, len(cands) // (workers * 8))
        return list(ex.map(_adj_key, cands, chunksize=chunk))


# -- per-orbit statistics -------------------------------------------------------


def _min_key_index(keys: list[int]) -> int:
    return min(range(len(keys)), key=keys.__getitem__)


def _side_mins_by_size(adj: tuple[int, ...], n: int, a: int) -> tuple[int, int]:
    """(min degree on the size-a side, min degree on the other side)."""
    col = _bipartition(adj, n)
    mins = [n, n]
    cnt0 = 0
    for v in range(n):
        c = col[v]
        cnt0 += c == 0
        d = adj[v].bit_count()
        if d < mins[c]:
            mins[c] = d
    return (mins[0], mins[1]) if cnt0 == a else (mins[1], mins[0])


def _rep_adj(adjs: list[tuple[int, ...]], keys: list[int], n: int) -> tuple[int, ...]:
    """Deterministic orbit representative: the min-key class, canonically
    relabeled so the choice is independent of traversal order."""
    return canonical_graph(Graph._from_adj(n, adjs[_min_key_index(keys)])).adj


def _bipartite_orbit_row(adjs: list[tuple[int, ...]], keys: list[int], n: int) -> OrbitRow:
    """Statistics for one bipartite ELC orbit given all its member classes."""
    rep_adj = _rep_adj(adjs, keys, n)
    col = _bipartition(rep_adj, n)
    a = sum(1 for c in col if c == LEFT)
    b = n - a
    if n == 1:
        return OrbitRow(rep=Graph._from_adj(1, rep_adj), size=1, a=1, b=0,
                        delta_left=0, delta_right=0)
    if a != b:
        dl = dr = n
        for adj in adjs:
            ml, mr = _side_mins_by_size(adj, n, a)
            dl = min(dl, ml)
            dr = min(dr, mr)
        iso = None
    else:
        classes, ckeys = _elc_classes(rep_adj, n, col)
        dl, dr = _side_degree_mins(classes)
        flip = tuple(c ^ 1 for c in col)
        iso = _key_int(rep_adj, n, flip) in set(ckeys)
    return OrbitRow(rep=Graph._from_adj(n, rep_adj), size=len(adjs), a=a, b=b,
                    delta_left=dl, delta_right=dr, isodual=iso)


# -- classifiers ----------------------------------------------------------------


def classify_bipartite(
    n_max: int,
    *,
    allow_large: bool = False,
    workers: int = 1,
    log=None,
) -> list[RepSet]:
    """ELC orbits of connected bipartite graphs for every n <= n_max.

    Level n candidates are the extensions of level n-1's representatives;
    dedup is by uncolored canonical form against all members of all orbits
    found so far at level n.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if n_max > BIPARTITE_GUARD and not allow_large:
        raise ValueError(
            f"n_max={n_max} above the default guard {BIPARTITE_GUARD}; "
            "pass allow_large=True to run anyway"
        )
    k1 = Graph.empty(1)
    out = [RepSet(1, (OrbitRow(rep=k1, size=1, a=1, b=0, delta_left=0, delta_right=0),))]
    for n in range(2, n_max + 1):
        cands: list[tuple[tuple[int, ...], int]] = []
        for row in out[-1].rows:
            col = _bipartition(row.rep.adj, row.rep.n)
            for h, _ in extend_bipartite(row.rep, col):
                cands.append((h.adj, n))
        keys = _candidate_keys(cands, workers)
        seen: set[int] = set()
        rows: list[OrbitRow] = []
        for (adj, _), key in zip(cands, keys):
            if key in seen:
                continue
            classes, okeys = _elc_classes(adj, n)
            seen.update(okeys)
            rows.append(_bipartite_orbit_row([a for a, _ in classes], okeys, n))
        out.append(RepSet(n, tuple(rows)))
        if log is not None:
            log(f"n={n}: {len(rows)} orbits over {len(cands)} candidates")
    return out


def _elc_refinement_count(adjs: list[tuple[int, ...]], keys: list[int], n: int) -> int:
    """Number of ELC orbits inside one LC orbit given its member classes."""
    claimed: set[int] = set()
    count = 0
    for adj, key in zip(adjs, keys):
        if key in claimed:
            continue
        _, ekeys = _elc_classes(adj, n)
        claimed.update(ekeys)
        count += 1
    return count


def classify_stream(
    graphs,
    mode: str = "elc",
    *,
    refine_elc: bool = False,
    allow_large: bool = False,
    workers: int = 1,
) -> RepSet:
    """Orbit census of an exhaustive stream of connected graphs of one size.

    The stream must contain at least one graph from every isomorphism class
    of connected graphs on its vertex count (duplicates are fine).  Bipartite
    side statistics are attached when the mode is ELC and the stream is
    bipartite.
    """
    if mode not in ("elc", "lc"):
        raise ValueError(f"mode must be 'elc' or 'lc', got {mode!r}")
    if refine_elc and mode != "lc":
        raise ValueError("refine_elc applies to LC mode only")
    glist = list(graphs)
    if not glist:
        raise ValueError("empty graph stream")
    n = glist[0].n
    if n > GENERAL_GUARD and not allow_large:
        raise ValueError(
            f"stream has n={n}, above the default guard {GENERAL_GUARD}; "
            "pass allow_large=True to run anyway"
        )
    for g in glist:
        if g.n != n:
            raise ValueError(f"mixed sizes in stream: {g.n} after {n}")
        if not _connected(g.adj, g.n):
            raise ValueError(f"disconnected graph in stream: {g!r}")
    if workers <= 1:
        keys = [_cached_key_int(g) for g in glist]
    else:
        keys = _candidate_keys([(g.adj, n) for g in glist], workers)
    seen: set[int] = set()
    rows: list[OrbitRow] = []
    for g, key in zip(glist, keys):
        if key in seen:
            continue
        if mode == "elc":
            classes, okeys = _elc_classes(g.adj, n)
            adjs = [a for a, _ in classes]
            seen.update(okeys)
            if _bipartition(g.adj, n) is not None:
                rows.append(_bipartite_orbit_row(adjs, okeys, n))
            else:
                rep = _rep_adj(adjs, okeys, n)
                rows.append(OrbitRow(rep=Graph._from_adj(n, rep), size=len(adjs)))
        else:
            adjs, okeys = _lc_classes(g.adj, n)
            seen.update(okeys)
            rep = _rep_adj(adjs, okeys, n)
            sub = _elc_refinement_count(adjs, okeys, n) if refine_elc else None
            rows.append(OrbitRow(rep=Graph._from_adj(n, rep), size=len(adjs),
                                 elc_suborbits=sub))
    return RepSet(n, tuple(rows))


# -- exhaustive connected-graph streams -----------------------------------------


def _dedup_levels(n: int, extend) -> list[Graph]:
    """One graph per isomorphism class at size n, grown by vertex addition.

    `extend(g)` yields the candidate row-tuples for g plus one vertex.
    Every connected graph has a vertex whose removal keeps it connected, so
    extending every class at size m reaches every class at size m + 1.
    """
    level = [Graph.empty(1)]
    for m in range(2, n + 1):
        seen: set[int] = set()
        nxt: list[Graph] = []
        for g in level:
            for rows in extend(g):
                adj = tuple(rows)
                key = _key_int(adj, m, None)
                if key not in seen:
                    seen.add(key)
                    h = Graph._from_adj(m, adj)
                    object.__setattr__(h, "_canon_cache", key)
                    nxt.append(h)
        level = nxt
    return level


def connected_graph_classes(n: int) -> list[Graph]:
    """All isomorphism classes of connected graphs on n vertices."""

    def extend(g: Graph):
        m = g.n
        for sub in range(1, 1 << m):
            rows = list(g.adj)
            s = sub
            while s:
                lo = s & -s
                s ^= lo
                rows[lo.bit_length() - 1] |= 1 << m
            rows.append(sub)
            yield rows

    return _dedup_levels(n, extend)


def connected_bipartite_classes(n: int) -> list[Graph]:
    """All isomorphism classes of connected bipartite graphs on n vertices."""

    def extend(g: Graph):
        m = g.n
        col = _bipartition(g.adj, m)
        for side in (LEFT, RIGHT):
            verts = [v for v in range(m) if col[v] == side]
            for sub in range(1, 1 << len(verts)):
                rows = list(g.adj)
                nb = 0
                s = sub
                while s:
                    lo = s & -s
                    s ^= lo
                    v = verts[lo.bit_length() - 1]
                    rows[v] |= 1 << m
                    nb |= 1 << v
                rows.append(nb)
                yield rows

    return _dedup_levels(n, extend)


# -- Euler transform and code counting ------------------------------------------


def euler_transform(i_seq) -> tuple[int, ...]:
    """Counts of connected objects -> counts of all objects.

    c_n = sum over divisors d of n of d*i_d; then
    t_n = (c_n + sum_{k=1}^{n-1} c_k t_{n-k}) / n, exactly.
    """
    i_seq = tuple(i_seq)
    top = len(i_seq)
    c = [0] * (top + 1)
    for nn in range(1, top + 1):
        c[nn] = sum(d * i_seq[d - 1] for d in range(1, nn + 1) if nn % d == 0)
    t = [0] * (top + 1)
    for nn in range(1, top + 1):
        num = c[nn] + sum(c[k] * t[nn - k] for k in range(1, nn))
        if num % nn:
            raise ValueError(f"non-integral term at n={nn}: {num}/{nn}")
        t[nn] = num // nn
    return tuple(t[1:])


def count_codes(reps: RepSet) -> CodeCounts:
    """Code counts from one level of the bipartite classification.

    An orbit with side sizes a != b yields two inequivalent codes (one per
    side); a == b yields two unless the code is isodual, then one.  An
    empty side (the single-vertex orbit) yields one code.
    """
    from .codes import graph_to_code, is_isodual

    by_k: dict[int, int] = {}
    iso_count = 0
    for row in reps.rows:
        if row.a is None:
            raise ValueError("row lacks side sizes; not a bipartite RepSet")
        a, b = row.a, row.b
        if min(a, b) == 0:
            by_k[max(a, b)] = by_k.get(max(a, b), 0) + 1
            continue
        if a != b:
            by_k[a] = by_k.get(a, 0) + 1
            by_k[b] = by_k.get(b, 0) + 1
            continue
        iso = row.isodual
        if iso is None:
            col = _bipartition(row.rep.adj, row.rep.n)
            iso = is_isodual(graph_to_code(row.rep, LEFT, col))
        iso_count += iso
        by_k[a] = by_k.get(a, 0) + (1 if iso else 2)
    return CodeCounts(
        n=reps.n,
        indecomposable=sum(by_k.values()),
        isodual=iso_count,
        by_k=by_k,
    )


# -- serialization --------------------------------------------------------------


def write_repset(reps: RepSet, fh) -> None:
    """Header '# n=<n> orbits=<count>', then per orbit: graph6, size, a, b,
    delta per side ('-' where a statistic does not apply)."""

    def cell(x):
        return "-" if x is None else str(x)

    fh.write(f"# n={reps.n} orbits={reps.orbit_count}\n")
    for row in reps.rows:
        fh.write(
            f"{to_graph6(row.rep)} {row.size} {cell(row.a)} {cell(row.b)} "
            f"{cell(row.delta_left)} {cell(row.delta_right)}\n"
        )


def read_repset(fh) -> RepSet:
    head = fh.readline().split()
    if len(head) < 3 or head[0] != "#" or not head[1].startswith("n="):
        raise ValueError("bad RepSet header")
    n = int(head[1][2:])
    rows = []
    for line in fh:
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 6:
            raise ValueError(f"bad RepSet row: {line!r}")
        g = from_graph6(parts[0])

        def cell(s):
            return None if s == "-" else int(s)

        rows.append(OrbitRow(rep=g, size=int(parts[1]), a=cell(parts[2]),
                             b=cell(parts[3]), delta_left=cell(parts[4]),
                             delta_right=cell(parts[5])))
    return RepSet(n, tuple(rows))


def repset_text(reps: RepSet) -> str:
    buf = io.StringIO()
    write_repset(reps, buf)
    return buf.getvalue()


def census_table(levels: list[RepSet], with_codes: bool = False) -> str:
    """TSV: n, i (connected orbits), t (all-graph orbits via Euler transform),
    plus code columns when requested.

    The t column is filled only when the levels cover n = 1..max contiguously.
    """
    by_n = {r.n: r for r in levels}
    ns = sorted(by_n)
    contiguous = ns == list(range(1, ns[-1] + 1))
    t = euler_transform([by_n[nn].orbit_count for nn in ns]) if contiguous else None
    cols = ["n", "i", "t"] + (["codes", "isodual"] if with_codes else [])
    lines = ["\t".join(cols)]
    for idx, nn in enumerate(ns):
        row = [str(nn), str(by_n[nn].orbit_count), str(t[idx]) if t else "-"]
        if with_codes:
            cc = count_codes(by_n[nn])
            row += [str(cc.indecomposable), str(cc.isodual)]
        lines.append("\t".join(row))
    return "\n".join(lines) + "\n"
