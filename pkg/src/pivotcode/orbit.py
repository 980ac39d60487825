"""LC and ELC orbit enumeration, labeled and unlabeled, with orbit statistics.

An unlabeled orbit is enumerated by breadth-first search over the move set
(ELC on every edge, or LC at every vertex), deduplicating states by
canonical form, so each isomorphism class is visited once.  A labeled
orbit deduplicates on exact adjacency bits instead.

When a coloring is supplied to an ELC enumeration, it is transported along:
ELC's label swap exchanges the colors of the two endpoints, so side sizes
are preserved and the dedup key becomes the colored canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, Coloring, LEFT, RIGHT, components, check_coloring
from .graph import _connected, _elc_adj, _lc_adj
from .canon import CanonicalForm, _key_int, _key_bytes


class OrbitOverflowError(RuntimeError):
    """Raised when an orbit enumeration exceeds the caller's size cap."""


@dataclass(frozen=True)
class OrbitReport:
    representative: Graph
    coloring: Coloring | None
    size_unlabeled: int
    size_labeled: int | None = None
    min_degree_left: int | None = None
    min_degree_right: int | None = None


def _require_connected(g: Graph) -> None:
    if not _connected(g.adj, g.n):
        raise ValueError(f"graph is disconnected: components {components(g)}")


def _check_cap(count: int, max_size: int | None) -> None:
    if max_size is not None and count > max_size:
        raise OrbitOverflowError(f"orbit exceeds size cap {max_size}")


def _elc_classes(
    adj: tuple[int, ...],
    n: int,
    colors: tuple[int, ...] | None = None,
    max_size: int | None = None,
) -> tuple[list[tuple[tuple[int, ...], tuple[int, ...] | None]], list[int]]:
    """Isomorphism classes of the ELC orbit, raw form.

    Returns (classes, keys): one (adj, colors) per class in first-discovery
    order, and the aligned list of packed canonical keys (colored keys when
    colors are given).
    """
    k0 = _key_int(adj, n, colors)
    seen = {k0}
    out = [(adj, colors)]
    keys = [k0]
    i = 0
    while i < len(out):
        cadj, ccol = out[i]
        i += 1
        for u in range(n):
            m = cadj[u] >> (u + 1) << (u + 1)
            while m:
                b = m & -m
                m ^= b
                v = b.bit_length() - 1
                nadj = _elc_adj(cadj, u, v)
                ncol = ccol
                if ncol is not None and ncol[u] != ncol[v]:
                    cl = list(ncol)
                    cl[u], cl[v] = cl[v], cl[u]
                    ncol = tuple(cl)
                k = _key_int(nadj, n, ncol)
                if k not in seen:
                    seen.add(k)
                    _check_cap(len(out) + 1, max_size)
                    out.append((nadj, ncol))
                    keys.append(k)
    return out, keys


def _lc_classes(
    adj: tuple[int, ...], n: int, max_size: int | None = None
) -> tuple[list[tuple[int, ...]], list[int]]:
    """Isomorphism classes of the LC orbit: (class adjacencies, their keys)."""
    k0 = _key_int(adj, n, None)
    seen = {k0}
    out = [adj]
    keys = [k0]
    i = 0
    while i < len(out):
        cadj = out[i]
        i += 1
        for v in range(n):
            if cadj[v].bit_count() < 2:
                continue  # LC at degree <= 1 is the identity
            nadj = _lc_adj(cadj, v)
            k = _key_int(nadj, n, None)
            if k not in seen:
                seen.add(k)
                _check_cap(len(out) + 1, max_size)
                out.append(nadj)
                keys.append(k)
    return out, keys


def _side_degree_mins(
    classes: list[tuple[tuple[int, ...], tuple[int, ...] | None]],
) -> tuple[int | None, int | None]:
    """Minimum degree over all classes among LEFT / RIGHT colored vertices."""
    min_l: int | None = None
    min_r: int | None = None
    for adj, colors in classes:
        for v, row in enumerate(adj):
            d = row.bit_count()
            if colors[v] == LEFT:
                if min_l is None or d < min_l:
                    min_l = d
            else:
                if min_r is None or d < min_r:
                    min_r = d
    return min_l, min_r


def elc_orbit_unlabeled(
    g: Graph, coloring: Coloring | None = None, max_size: int | None = None
) -> tuple[OrbitReport, list[Graph]]:
    """One representative per isomorphism class of the ELC orbit of g.

    With a coloring, classes are counted up to color-preserving isomorphism
    and the report carries the per-side minimum degree over the orbit.
    """
    _require_connected(g)
    colors = None
    if coloring is not None:
        if len(coloring) != g.n:
            raise ValueError(f"coloring length {len(coloring)} != n={g.n}")
        if any(c not in (LEFT, RIGHT) for c in coloring):
            raise ValueError("coloring values must be LEFT or RIGHT")
        colors = tuple(coloring)
    classes, _ = _elc_classes(g.adj, g.n, colors, max_size)
    min_l = min_r = None
    if colors is not None:
        min_l, min_r = _side_degree_mins(classes)
    report = OrbitReport(
        representative=g,
        coloring=colors,
        size_unlabeled=len(classes),
        min_degree_left=min_l,
        min_degree_right=min_r,
    )
    return report, [Graph._from_adj(g.n, a) for a, _ in classes]


def elc_orbit_labeled(g: Graph, max_size: int | None = None) -> set[Graph]:
    """All distinct labeled graphs reachable from g by ELC moves.

    Dedup is on exact adjacency bits; each move includes its label swap of
    the pivot edge's endpoints.
    """
    _require_connected(g)
    n = g.n
    seen = {g.adj}
    out = [g.adj]
    i = 0
    while i < len(out):
        cadj = out[i]
        i += 1
        for u in range(n):
            m = cadj[u] >> (u + 1) << (u + 1)
            while m:
                b = m & -m
                m ^= b
                v = b.bit_length() - 1
                nadj = _elc_adj(cadj, u, v)
                if nadj not in seen:
                    seen.add(nadj)
                    _check_cap(len(out) + 1, max_size)
                    out.append(nadj)
    return {Graph._from_adj(n, a) for a in out}


def lc_orbit_unlabeled(
    g: Graph, max_size: int | None = None
) -> tuple[OrbitReport, list[Graph]]:
    """One representative per isomorphism class of the LC orbit of g."""
    _require_connected(g)
    classes, _ = _lc_classes(g.adj, g.n, max_size)
    report = OrbitReport(representative=g, coloring=None, size_unlabeled=len(classes))
    return report, [Graph._from_adj(g.n, a) for a in classes]


def partition_lc_orbit(g: Graph, max_size: int | None = None) -> list[list[Graph]]:
    """Split the LC orbit of g into the ELC orbits it contains.

    Returns one list of class representatives per ELC orbit; the lists'
    sizes sum to the LC orbit's unlabeled size.
    """
    _require_connected(g)
    n = g.n
    lc_adjs, lc_keys = _lc_classes(g.adj, n, max_size)
    claimed: set[int] = set()
    groups: list[list[Graph]] = []
    for adj0, key0 in zip(lc_adjs, lc_keys):
        if key0 in claimed:
            continue
        classes, keys = _elc_classes(adj0, n)
        claimed.update(keys)
        groups.append([Graph._from_adj(n, a) for a, _ in classes])
    return groups


def orbit_canonical_rep(
    g: Graph, coloring: Coloring | None = None, max_size: int | None = None
) -> CanonicalForm:
    """Least canonical form over the ELC orbit: an orbit identity.

    Two connected graphs get equal values iff they lie in the same
    (colored) ELC orbit; usable as a dedup key across candidates.
    """
    _require_connected(g)
    colors = tuple(coloring) if coloring is not None else None
    _, keys = _elc_classes(g.adj, g.n, colors, max_size)
    return CanonicalForm(_key_bytes(min(keys), g.n))


def orbit_min_degree(g: Graph, coloring: Coloring, side: int, max_size: int | None = None) -> int:
    """Minimum degree among `side`-colored vertices over the whole ELC orbit.

    The coloring must be a proper 2-coloring (colors transport through the
    orbit); this is the quantity that drives minimum-distance computation.
    """
    if side not in (LEFT, RIGHT):
        raise ValueError("side must be LEFT or RIGHT")
    _require_connected(g)
    check_coloring(g, coloring)
    classes, _ = _elc_classes(g.adj, g.n, tuple(coloring), max_size)
    min_l, min_r = _side_degree_mins(classes)
    d = min_l if side == LEFT else min_r
    if d is None:
        raise ValueError(f"no vertices colored {side}")
    return d


def dump_orbit(graphs: list[Graph], counts: dict[str, int]) -> str:
    """Orbit dump: '# n=<n> k=v ...' header, then one graph6 line per graph."""
    from .formats import to_graph6

    head = f"# n={graphs[0].n}" + "".join(f" {k}={v}" for k, v in counts.items())
    return "\n".join([head] + [to_graph6(h) for h in graphs]) + "\n"
