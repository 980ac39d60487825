"""Acceptance gate: the nine headline checks, one printed line each.

Each test prints `criterion N: PASS/FAIL - detail` to the live terminal
(bypassing capture) so a full run shows the scoreboard inline.  Expected
values are frozen here on purpose; they must not drift with the library.
"""

import itertools
import random
import time

from pivotcode.canon import canonical_key
from pivotcode.census import (
    census_table,
    classify_bipartite,
    classify_stream,
    count_codes,
    euler_transform,
    repset_text,
)
from pivotcode.codes import (
    GenMatrix,
    are_equivalent,
    code_to_graph,
    gf2_rank,
    graph_to_code,
    hamming_7_4,
    information_sets_oracle,
    information_sets_via_orbit,
    is_self_dual,
    min_distance_bruteforce,
    min_distance_via_orbit,
)
from pivotcode.graph import (
    LEFT,
    RIGHT,
    Graph,
    bipartition,
    elc_classes,
    elc_toggle,
    elc_via_lc,
    is_bipartite,
    is_connected,
    local_complement,
    pivot_bipartite,
    relabel,
    side_counts,
)
from pivotcode.orbit import elc_orbit_labeled

# connected-graph orbit counts, n = 1..9, and their all-graph totals
LC_I = (1, 1, 1, 2, 4, 11, 26, 101, 440)
LC_T = (1, 2, 3, 6, 11, 26, 59, 182, 675)
ELC_I = (1, 1, 2, 4, 10, 35, 134, 777, 6702)
ELC_T = (1, 2, 4, 9, 21, 64, 218, 1068, 8038)

# connected bipartite orbit counts, n = 1..12, totals, and code counts
BIP_I = (1, 1, 1, 2, 3, 8, 15, 43, 110, 370, 1260, 5366)
BIP_T = (1, 2, 3, 6, 10, 22, 43, 104, 250, 720, 2229, 8361)
CODES_I = (1, 1, 2, 3, 6, 13, 30, 76, 220, 700, 2520, 10503)
CODES_ISODUAL = {2: 1, 4: 1, 6: 3, 8: 10, 10: 40, 12: 229}


def report(capsys, num, ok, detail):
    with capsys.disabled():
        print(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for picks in itertools.product((0, 1), repeat=len(pairs)):
        yield Graph(n, [e for e, take in zip(pairs, picks) if take])


def rand_graph(rng, n, p=0.5):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(n, edges)


def rand_graph_with_edge(rng, lo=2, hi=10):
    while True:
        g = rand_graph(rng, rng.randrange(lo, hi))
        edges = list(g.edges())
        if edges:
            return g, edges[rng.randrange(len(edges))]


def rand_bipartite_with_edge(rng, hi=5):
    while True:
        a = rng.randrange(1, hi)
        b = rng.randrange(1, hi)
        edges = [(i, a + j) for i in range(a) for j in range(b) if rng.random() < 0.6]
        if edges:
            g = Graph(a + b, edges)
            col = tuple([LEFT] * a + [RIGHT] * b)
            return g, col, edges[rng.randrange(len(edges))]


def census_codes(levels, n_lo, n_hi):
    """Generator codes of every orbit representative, both sides."""
    for reps in levels[n_lo - 1 : n_hi]:
        for row in reps.rows:
            col = bipartition(row.rep)
            a, b = side_counts(col)
            if min(a, b) == 0:
                continue
            yield graph_to_code(row.rep, LEFT, col)
            yield graph_to_code(row.rep, RIGHT, col)


def test_hamming_pivot_matrix(capsys):
    # pivot on the worked [7,4] example: edge {2,7} in 1-based labels,
    # using the toggle-only convention, must reproduce the published matrix
    t0 = time.perf_counter()
    m = hamming_7_4()
    g, col = code_to_graph(m)
    h = elc_toggle(g, 1, 6)
    back = graph_to_code(h, LEFT, col)
    p_prime = (0b111, 0b101, 0b011, 0b110)
    expect = tuple((1 << i) | (p_prime[i] << 4) for i in range(4))
    secs = time.perf_counter() - t0
    ok = back.rows == expect and secs < 1.0
    report(capsys, 1, ok, f"[7,4] pivot reproduces the target matrix, {secs:.3f}s (limit 1s)")


def test_lc_orbit_census(capsys, connected_stream):
    secs = sum(connected_stream.seconds(n) for n in range(1, 10))
    t0 = time.perf_counter()
    i = tuple(
        classify_stream(connected_stream.get(n), mode="lc", allow_large=True).orbit_count
        for n in range(1, 10)
    )
    secs += time.perf_counter() - t0
    t = euler_transform(i)
    ok = i == LC_I and t == LC_T and secs <= 3600
    report(capsys, 2, ok, f"LC orbits n=1..9 i={i[-1]} t={t[-1]}, {secs:.1f}s (limit 1h)")


def test_elc_orbit_census(capsys, connected_stream):
    secs = sum(connected_stream.seconds(n) for n in range(1, 10))
    t0 = time.perf_counter()
    i = tuple(
        classify_stream(connected_stream.get(n), mode="elc", allow_large=True).orbit_count
        for n in range(1, 10)
    )
    secs += time.perf_counter() - t0
    t = euler_transform(i)
    ok = i == ELC_I and t == ELC_T and secs <= 7200
    report(capsys, 3, ok, f"ELC orbits n=1..9 i={i[-1]} t={t[-1]}, {secs:.1f}s (limit 2h)")


def test_bipartite_census(capsys, bipartite_levels):
    i = tuple(r.orbit_count for r in bipartite_levels.levels)
    t = euler_transform(i)
    secs = bipartite_levels.seconds
    ok = i == BIP_I and t == BIP_T and secs <= 4 * 3600
    report(capsys, 4, ok, f"bipartite ELC orbits n=1..12 i={i[-1]} t={t[-1]}, {secs:.1f}s (limit 4h)")


def test_code_counts(capsys, bipartite_levels):
    counts = [count_codes(r) for r in bipartite_levels.levels]
    i_c = tuple(c.indecomposable for c in counts)
    iso = {c.n: c.isodual for c in counts}
    ok = i_c == CODES_I
    for n in range(1, 13):
        expect = CODES_ISODUAL.get(n, 0)
        ok = ok and iso[n] == expect
    report(capsys, 5, ok, f"code counts n=1..12 i_C={i_c[-1]} isodual(12)={iso[12]}")


def test_min_distance_routes(capsys, bipartite_levels):
    checked = 0
    mismatches = 0
    for m in census_codes(bipartite_levels.levels, 2, 10):
        checked += 1
        if min_distance_via_orbit(m) != min_distance_bruteforce(m):
            mismatches += 1
    ok = mismatches == 0 and checked > 0
    report(capsys, 6, ok, f"min distance via orbit = brute force on {checked} codes, {mismatches} mismatches")


def test_information_set_routes(capsys, bipartite_levels):
    checked = 0
    mismatches = 0
    for m in census_codes(bipartite_levels.levels, 2, 9):
        checked += 1
        if information_sets_via_orbit(m) != information_sets_oracle(m):
            mismatches += 1

    ham = hamming_7_4()
    ham_ok = information_sets_via_orbit(ham) == information_sets_oracle(ham) == 28

    # the self-dual doubling, checked against the labeled orbit directly
    rep2 = GenMatrix(2, (0b11,))
    e8_p = (0b0111, 0b1011, 0b1101, 0b1110)
    e8 = GenMatrix(8, tuple((1 << i) | (e8_p[i] << 4) for i in range(4)))
    doubling_ok = True
    for m in (rep2, e8):
        g, _ = code_to_graph(m)
        doubling_ok = doubling_ok and is_self_dual(m)
        doubling_ok = doubling_ok and (
            2 * len(elc_orbit_labeled(g))
            == information_sets_via_orbit(m)
            == information_sets_oracle(m)
        )

    ok = mismatches == 0 and checked > 0 and ham_ok and doubling_ok
    report(capsys, 7, ok,
           f"information sets via orbit = oracle on {checked} codes + [7,4] (28) + self-dual doubling")


def test_property_suites(capsys):
    failures = []
    cases = {}

    def run(name, exhaustive, random_case, trials=10_000):
        count = exhaustive()
        rng = random.Random(sum(map(ord, name)))
        for _ in range(trials):
            if not random_case(rng):
                failures.append(name)
                break
            count += 1
        cases[name] = count

    def exhaustive_vertices(check):
        count = 0
        for n in range(1, 7):
            for g in all_graphs(n):
                for v in range(n):
                    if not check(g, v):
                        failures.append("exhaustive")
                        return count
                    count += 1
        return count

    def exhaustive_edges(check):
        count = 0
        for n in range(2, 7):
            for g in all_graphs(n):
                for u, v in g.edges():
                    if not check(g, u, v):
                        failures.append("exhaustive")
                        return count
                    count += 1
        return count

    # 1: LC involution
    lc_inv = lambda g, v: local_complement(local_complement(g, v), v) == g
    run("lc involution",
        lambda: exhaustive_vertices(lc_inv),
        lambda rng: lc_inv(*_pick_vertex(rng)))

    # 2: the two triple products agree on every edge
    def triple(g, u, v):
        lhs = local_complement(local_complement(local_complement(g, u), v), u)
        rhs = local_complement(local_complement(local_complement(g, v), u), v)
        return lhs == rhs

    run("triple product",
        lambda: exhaustive_edges(triple),
        lambda rng: triple(*_pick_edge(rng)))

    # 3: ELC involution
    elc_inv = lambda g, u, v: elc_classes(elc_classes(g, u, v), u, v) == g
    run("elc involution",
        lambda: exhaustive_edges(elc_inv),
        lambda rng: elc_inv(*_pick_edge(rng)))

    # 4: composition rule = class rule = bipartite fast path
    def defs_agree(g, u, v):
        a = elc_via_lc(g, u, v)
        if a != elc_classes(g, u, v):
            return False
        if is_bipartite(g) and a != pivot_bipartite(g, u, v):
            return False
        return True

    run("elc definitions",
        lambda: exhaustive_edges(defs_agree),
        lambda rng: defs_agree(*_pick_edge(rng)))

    # 5: connectivity is preserved
    def keeps_conn(g, u, v):
        return is_connected(g) == is_connected(elc_classes(g, u, v))

    run("connectivity",
        lambda: exhaustive_edges(keeps_conn),
        lambda rng: keeps_conn(*_pick_edge(rng)))

    # 6: an (a,b)-bipartite graph stays (a,b)-bipartite
    def keeps_sides(g, col, u, v):
        h = elc_classes(g, u, v)
        hcol = list(col)
        hcol[u], hcol[v] = hcol[v], hcol[u]
        for x, y in h.edges():
            if hcol[x] == hcol[y]:
                return False
        return side_counts(col) == side_counts(tuple(hcol))

    def exhaustive_bipartite():
        count = 0
        for n in range(2, 7):
            for g in all_graphs(n):
                col = bipartition(g)
                if col is None:
                    continue
                for u, v in g.edges():
                    if not keeps_sides(g, col, u, v):
                        failures.append("exhaustive")
                        return count
                    count += 1
        return count

    run("bipartite sides",
        exhaustive_bipartite,
        lambda rng: keeps_sides(*_pick_bip_edge(rng)))

    # 7: canonical form is relabeling-invariant; distinct keys count classes
    def canon_case(rng):
        g = rand_graph(rng, rng.randrange(1, 11))
        perm = list(range(g.n))
        rng.shuffle(perm)
        return canonical_key(relabel(g, tuple(perm))) == canonical_key(g)

    def canon_exhaustive():
        count = 0
        for n, classes in enumerate((1, 2, 4, 11, 34, 156), start=1):
            if len({canonical_key(g) for g in all_graphs(n)}) != classes:
                failures.append("exhaustive")
                return count
            count += 2 ** (n * (n - 1) // 2)
        return count

    run("canonical form", canon_exhaustive, canon_case)

    # 8: are_equivalent holds under column permutations and row operations
    def equiv_case(rng):
        n = rng.randrange(2, 8)
        k = rng.randrange(1, n)
        while True:
            rows = [rng.randrange(1, 1 << n) for _ in range(k)]
            if gf2_rank(rows) == k:
                break
        m = GenMatrix(n, rows)
        if rng.random() < 0.5:
            perm = list(range(n))
            rng.shuffle(perm)
            moved = []
            for r in rows:
                out = 0
                for j in range(n):
                    if r >> j & 1:
                        out |= 1 << perm[j]
                moved.append(out)
            other = GenMatrix(n, moved)
        else:
            mixed = list(rows)
            for _ in range(3 * k):
                i, j = rng.randrange(k), rng.randrange(k)
                if i != j:
                    mixed[i] ^= mixed[j]
            other = GenMatrix(n, mixed)
        return are_equivalent(m, other)

    run("code equivalence", lambda: 0, equiv_case)

    total = sum(cases.values())
    ok = not failures
    report(capsys, 8, ok,
           f"8 property suites, {total} cases, failures: {failures or 'none'}")


def _pick_vertex(rng):
    g = rand_graph(rng, rng.randrange(1, 11))
    return g, rng.randrange(g.n)


def _pick_edge(rng):
    g, (u, v) = rand_graph_with_edge(rng)
    return g, u, v


def _pick_bip_edge(rng):
    g, col, (u, v) = rand_bipartite_with_edge(rng)
    return g, col, u, v


def test_worker_determinism(capsys, connected_stream):
    outputs = []
    for workers in (1, 4, 8):
        levels = classify_bipartite(7, workers=workers)
        stream = classify_stream(connected_stream.get(7), mode="elc", workers=workers)
        blob = (
            "".join(repset_text(r) for r in levels)
            + census_table(levels, with_codes=True)
            + repset_text(stream)
        )
        outputs.append(blob.encode())
    ok = outputs[0] == outputs[1] == outputs[2]
    report(capsys, 9, ok, f"census outputs byte-identical across 1, 4, 8 workers ({len(outputs[0])} bytes)")
