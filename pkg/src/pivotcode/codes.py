"""Binary linear codes: standard form, duality, and the code-graph bridge.

A [n,k] code is held as a full-rank k x n generator matrix over GF(2),
one integer per row with bit j = column j.  The bridge maps a standard
form (I|P) to the (k, n-k)-bipartite graph with biadjacency P; through it,
code equivalence becomes colored ELC-orbit membership, minimum distance
becomes an orbit degree statistic, and information-set counting becomes
labeled orbit size.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graph import Graph, Coloring, LEFT, RIGHT, bits, check_coloring, components, is_connected
from .canon import _key_int
from .orbit import (
    _elc_classes,
    elc_orbit_labeled,
    orbit_min_degree,
    _require_connected,
)

_BRUTE_K_MAX = 24
_INFOSET_GUARD = 10**7


def gf2_rank(rows) -> int:
    """Row rank over GF(2)."""
    r = 0
    basis = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            r += 1
    return r


def _rref(rows, n: int) -> tuple[int, ...]:
    """Reduced row echelon form, rows ordered by pivot column.

    Equal row spaces yield identical results, so this is a canonical form
    for the span.
    """
    work = [r for r in rows if r]
    out = []
    for col in range(n):
        piv = None
        for i, r in enumerate(work):
            if r >> col & 1:
                piv = i
                break
        if piv is None:
            continue
        p = work.pop(piv)
        work = [r ^ p if r >> col & 1 else r for r in work]
        out = [r ^ p if r >> col & 1 else r for r in out]
        out.append(p)
    return tuple(out)


class GenMatrix:
    """Full-rank generator matrix of a binary [n,k] code."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows):
        rows = tuple(rows)
        k = len(rows)
        if not 1 <= k <= n:
            raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
        full = (1 << n) - 1
        for i, r in enumerate(rows):
            if r & ~full:
                raise ValueError(f"row {i} has bits beyond column {n - 1}")
        if gf2_rank(rows) != k:
            raise ValueError(f"rows are not independent: rank < k={k}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    @property
    def k(self) -> int:
        return len(self.rows)

    @classmethod
    def from_text(cls, text: str) -> "GenMatrix":
        from .formats import from_matrix_text

        rows, ncols = from_matrix_text(text)
        return cls(ncols, rows)

    def to_text(self) -> str:
        from .formats import to_matrix_text

        return to_matrix_text(self.rows, self.n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GenMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __setattr__(self, name, value) -> None:
        raise AttributeError("GenMatrix is immutable")

    def __repr__(self) -> str:
        return f"GenMatrix(n={self.n}, k={self.k})"


@dataclass(frozen=True)
class StandardForm:
    """(I|P) presentation of a code and the column permutation reaching it.

    perm[i] is the original column sitting at standard position i; applying
    perm to the source matrix and row-reducing gives (I|P) exactly.
    """

    k: int
    n: int
    p_rows: tuple[int, ...]  # width n-k; bit j refers to standard column k+j
    perm: tuple[int, ...]

    def generator(self) -> GenMatrix:
        k = self.k
        return GenMatrix(self.n, tuple((1 << i) | (self.p_rows[i] << k) for i in range(k)))


@dataclass(frozen=True)
class CodeSummary:
    n: int
    k: int
    d: int
    indecomposable: bool
    self_dual: bool
    isodual: bool
    info_set_count: int


def standard_form(m: GenMatrix) -> StandardForm:
    """Row-reduce with greedy column pivoting into (I|P) shape."""
    n, k = m.n, m.k
    work = list(m.rows)
    pivots = []
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, k):
            if work[i] >> col & 1:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(k):
            if i != r and work[i] >> col & 1:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
        if r == k:
            break
    assert r == k  # full rank is a GenMatrix invariant
    rest = [c for c in range(n) if c not in pivots]
    perm = tuple(pivots + rest)
    p_rows = tuple(
        sum((work[i] >> c & 1) << j for j, c in enumerate(rest)) for i in range(k)
    )
    return StandardForm(k=k, n=n, p_rows=p_rows, perm=perm)


def code_to_graph(m: GenMatrix) -> tuple[Graph, Coloring]:
    """Bipartite graph of the standard form: biadjacency P, left side 0..k-1.

    The left (information) side carries the identity columns; edge {i, k+j}
    exists iff P[i][j] = 1.
    """
    n, k = m.n, m.k
    if k == n:
        raise ValueError("k = n leaves no check side; no graph exists")
    sf = standard_form(m)
    rows = [sf.p_rows[i] << k for i in range(k)]
    rows += [sum((sf.p_rows[i] >> j & 1) << i for i in range(k)) for j in range(n - k)]
    g = Graph.from_rows(rows)
    return g, tuple([LEFT] * k + [RIGHT] * (n - k))


def graph_to_code(g: Graph, side: int, coloring: Coloring) -> GenMatrix:
    """Generator matrix (I|P) reading `side` as the information set."""
    if side not in (LEFT, RIGHT):
        raise ValueError("side must be LEFT or RIGHT")
    check_coloring(g, coloring)
    info = [v for v in range(g.n) if coloring[v] == side]
    chk = [v for v in range(g.n) if coloring[v] != side]
    k = len(info)
    if k == 0:
        raise ValueError("chosen side has no vertices; k = 0 is not a code")
    rows = []
    for i, v in enumerate(info):
        p = sum((g.adj[v] >> w & 1) << j for j, w in enumerate(chk))
        rows.append((1 << i) | (p << k))
    return GenMatrix(g.n, rows)


def dual(m: GenMatrix) -> GenMatrix:
    """Generator of the dual code: (P^T|I) pushed back through the column
    permutation of m's standard form."""
    n, k = m.n, m.k
    if k == n:
        raise ValueError("dual of the full space is the zero code; not representable")
    sf = standard_form(m)
    out = []
    for j in range(n - k):
        row_std = sum((sf.p_rows[i] >> j & 1) << i for i in range(k)) | (1 << (k + j))
        row = 0
        for pos in range(n):
            if row_std >> pos & 1:
                row |= 1 << sf.perm[pos]
        out.append(row)
    return GenMatrix(n, out)


def min_distance_bruteforce(m: GenMatrix) -> int:
    """Minimum weight over all nonzero codewords, Gray-code enumeration."""
    k = m.k
    if k > _BRUTE_K_MAX:
        raise ValueError(f"k={k} exceeds the 2^k enumeration guard ({_BRUTE_K_MAX})")
    rows = m.rows
    cw = 0
    best = m.n + 1
    for i in range(1, 1 << k):
        cw ^= rows[(i & -i).bit_length() - 1]
        w = cw.bit_count()
        if w < best:
            best = w
    return best


def min_distance_via_orbit(m: GenMatrix) -> int:
    """d = 1 + minimum information-side degree over the code graph's orbit."""
    if not is_indecomposable(m):
        raise ValueError("decomposable code: decompose and take the min over summands")
    g, coloring = code_to_graph(m)
    return orbit_min_degree(g, coloring, LEFT) + 1


def information_sets_oracle(m: GenMatrix, return_sets: bool = False):
    """Count k-subsets of columns with full rank, by direct enumeration."""
    from itertools import combinations

    n, k = m.n, m.k
    if comb(n, k) > _INFOSET_GUARD:
        raise ValueError(f"C({n},{k}) exceeds the enumeration guard {_INFOSET_GUARD}")
    cols = [sum((m.rows[i] >> j & 1) << i for i in range(k)) for j in range(n)]
    count = 0
    found = []
    for sub in combinations(range(n), k):
        if gf2_rank([cols[j] for j in sub]) == k:
            count += 1
            if return_sets:
                found.append(sub)
    return (count, found) if return_sets else count


def information_sets_via_orbit(m: GenMatrix) -> int:
    """Information sets = labeled ELC orbit size, doubled for self-dual codes."""
    if not is_indecomposable(m):
        raise ValueError("decomposable code: information sets multiply over summands")
    g, _ = code_to_graph(m)
    count = len(elc_orbit_labeled(g))
    return count * 2 if is_self_dual(m) else count


def are_equivalent(m1: GenMatrix, m2: GenMatrix) -> bool:
    """Code equivalence: equality of colored ELC-orbit canonical forms.

    Left color marks the information side, so a code is never conflated
    with its dual when k = n/2.  Decomposable codes are compared summand
    by summand.
    """
    if (m1.n, m1.k) != (m2.n, m2.k):
        return False
    if m1.k == m1.n:
        return True  # both generate the full space
    if not is_indecomposable(m1):
        if is_indecomposable(m2):
            return False
        parts1, z1 = decompose(m1)
        parts2, z2 = decompose(m2)
        if z1 != z2:
            return False
        return sorted(map(_orbit_key, parts1)) == sorted(map(_orbit_key, parts2))
    if not is_indecomposable(m2):
        return False
    g1, c1 = code_to_graph(m1)
    g2, c2 = code_to_graph(m2)
    _, keys = _elc_classes(g1.adj, g1.n, c1)
    return _key_int(g2.adj, g2.n, c2) in keys


def _orbit_key(m: GenMatrix) -> tuple:
    """Equivalence-class key of an indecomposable code."""
    if m.k == m.n:  # the [1,1] code
        return (1, 1, 0)
    g, c = code_to_graph(m)
    _, keys = _elc_classes(g.adj, g.n, c)
    return (m.n, m.k, min(keys))


def is_self_dual(m: GenMatrix) -> bool:
    """C = C-perp as row spaces."""
    if m.n != 2 * m.k:
        return False
    return _rref(m.rows, m.n) == _rref(dual(m).rows, m.n)


def is_isodual(m: GenMatrix) -> bool:
    """C equivalent to C-perp (column permutation allowed)."""
    if m.n != 2 * m.k:
        return False
    return are_equivalent(m, dual(m))


def is_indecomposable(m: GenMatrix) -> bool:
    """True iff the code is not a direct sum of shorter codes."""
    if m.k == m.n:
        return m.n == 1
    g, _ = code_to_graph(m)
    return is_connected(g)


def decompose(m: GenMatrix) -> tuple[list[GenMatrix], int]:
    """Split into indecomposable summands.

    Returns (summands, zero_columns): one GenMatrix per summand with k >= 1,
    plus the count of identically-zero columns (each a dimension-0 length-1
    summand not representable as a GenMatrix).
    """
    n, k = m.n, m.k
    if k == n:
        return [GenMatrix(1, (1,))] * n, 0
    g, coloring = code_to_graph(m)
    sf = standard_form(m)
    out = []
    zero_cols = 0
    for comp in components(g):
        left = [v for v in comp if coloring[v] == LEFT]
        right = [v for v in comp if coloring[v] == RIGHT]
        if not left:
            zero_cols += len(right)  # isolated check vertices = zero columns
            continue
        kk = len(left)
        rows = []
        for i, v in enumerate(left):
            p = sum((g.adj[v] >> w & 1) << j for j, w in enumerate(right))
            rows.append((1 << i) | (p << kk))
        out.append(GenMatrix(kk + len(right), rows))
    return out, zero_cols


def min_distance(m: GenMatrix) -> int:
    """d of an arbitrary code: min over indecomposable summands, via orbits."""
    parts, _ = decompose(m)
    best = m.n + 1
    for part in parts:
        d = 1 if part.k == part.n else min_distance_via_orbit(part)
        if d < best:
            best = d
    return best


def information_sets(m: GenMatrix) -> int:
    """Information sets of an arbitrary code: product over summands."""
    parts, _ = decompose(m)
    total = 1
    for part in parts:
        total *= 1 if part.k == part.n else information_sets_via_orbit(part)
    return total


def summary(m: GenMatrix) -> CodeSummary:
    return CodeSummary(
        n=m.n,
        k=m.k,
        d=min_distance(m),
        indecomposable=is_indecomposable(m),
        self_dual=is_self_dual(m),
        isodual=is_isodual(m),
        info_set_count=information_sets(m),
    )


def hamming_7_4() -> GenMatrix:
    """The [7,4,3] code used throughout the worked examples."""
    p = (0b110, 0b101, 0b011, 0b111)
    return GenMatrix(7, tuple((1 << i) | (p[i] << 4) for i in range(4)))
