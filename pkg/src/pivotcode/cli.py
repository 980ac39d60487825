"""Command-line interface: pivot, orbit, code, census, convert.

Vertex and column indices on the command line are 1-based; the library is
0-based.  Graphs default to graph6; matrices are 0/1 text.  All failures
exit nonzero with a single `error: ...` line on stderr.
"""

from __future__ import annotations

import argparse
import os
import sys

from .graph import (
    Graph,
    LEFT,
    bipartition,
    elc_classes,
    elc_via_lc,
    pivot_bipartite,
    swap_labels,
)
from .canon import canonical_form  # noqa: F401  (imported for __main__ users)
from .orbit import (
    OrbitOverflowError,
    dump_orbit,
    elc_orbit_labeled,
    elc_orbit_unlabeled,
    lc_orbit_unlabeled,
)
from . import codes as codes_mod
from . import census as census_mod
from . import formats

THREADS_ENV = "PIVOTCODE_THREADS"


def _default_threads() -> int:
    val = os.environ.get(THREADS_ENV, "")
    try:
        return max(1, int(val))
    except ValueError:
        return 1


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _read_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "graph6":
        for line in text.splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                return formats.from_graph6(line)
        raise ValueError("no graph6 line found in input")
    if fmt == "edges":
        return formats.from_edge_list(text)
    if fmt == "adj":
        return formats.from_adjacency_text(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def _write_out(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _graph_text(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return formats.to_graph6(g) + "\n"
    if fmt == "edges":
        return formats.to_edge_list(g)
    if fmt == "adj":
        return formats.to_adjacency_text(g)
    if fmt == "dot":
        return formats.to_dot(g)
    raise ValueError(f"unknown graph format {fmt!r}")


def _vertex(g: Graph, idx1: int) -> int:
    if not 1 <= idx1 <= g.n:
        raise ValueError(f"vertex {idx1} out of range 1..{g.n}")
    return idx1 - 1


def _read_matrix(path: str) -> codes_mod.GenMatrix:
    return codes_mod.GenMatrix.from_text(_read_text(path))


# -- subcommands ----------------------------------------------------------------


def cmd_pivot(args) -> int:
    g = _read_graph(args.input, args.format)
    u = _vertex(g, args.u)
    v = _vertex(g, args.v)
    if u == v or not g.has_edge(u, v):
        raise ValueError(f"{{{args.u}, {args.v}}} is not an edge")
    if args.definition == "lc-compose":
        h = elc_via_lc(g, u, v)
    elif args.definition == "classes":
        h = elc_classes(g, u, v)
    else:
        h = pivot_bipartite(g, u, v)
    if args.no_swap:
        h = swap_labels(h, u, v)  # undo the final swap: the pure edge toggle
    _write_out(_graph_text(h, args.format), args.output)
    return 0


def cmd_orbit(args) -> int:
    g = _read_graph(args.input, args.format)
    if args.lc and args.labeled:
        raise ValueError("--labeled applies to ELC orbits only")
    counts: dict[str, int] = {}
    if args.lc:
        report, reps = lc_orbit_unlabeled(g, max_size=args.max_size)
        counts["classes"] = report.size_unlabeled
        graphs = reps
    elif args.labeled:
        members = sorted(elc_orbit_labeled(g, max_size=args.max_size), key=lambda h: h.adj)
        counts["labeled"] = len(members)
        graphs = members
    else:
        coloring = bipartition(g)
        report, reps = elc_orbit_unlabeled(g, coloring, max_size=args.max_size)
        counts["classes"] = report.size_unlabeled
        graphs = reps
    if args.stats:
        lines = [f"n={g.n}"]
        if "classes" in counts:
            lines.append(f"size_unlabeled={counts['classes']}")
        if "labeled" in counts:
            lines.append(f"size_labeled={counts['labeled']}")
        if not args.lc and not args.labeled and report.coloring is not None:
            lines.append(f"delta_left={report.min_degree_left}")
            lines.append(f"delta_right={report.min_degree_right}")
        _write_out("\n".join(lines) + "\n", args.output)
    else:
        _write_out(dump_orbit(graphs, counts), args.output)
    return 0


def cmd_code(args) -> int:
    m = _read_matrix(args.matrix)
    if args.action == "mindist":
        d = codes_mod.min_distance_bruteforce(m) if args.brute else codes_mod.min_distance(m)
        _write_out(f"{d}\n", args.output)
    elif args.action == "infosets":
        count = (
            codes_mod.information_sets_oracle(m)
            if args.oracle
            else codes_mod.information_sets(m)
        )
        _write_out(f"{count}\n", args.output)
    elif args.action == "equiv":
        if args.matrix2 is None:
            raise ValueError("equiv needs a second matrix")
        m2 = _read_matrix(args.matrix2)
        verdict = codes_mod.are_equivalent(m, m2)
        _write_out(("equivalent" if verdict else "inequivalent") + "\n", args.output)
    elif args.action == "dual":
        _write_out(codes_mod.dual(m).to_text(), args.output)
    elif args.action == "standard":
        sf = codes_mod.standard_form(m)
        cols = " ".join(str(c + 1) for c in sf.perm)
        text = f"# columns {cols}\n" + sf.generator().to_text()
        _write_out(text, args.output)
    elif args.action == "graph":
        g, coloring = codes_mod.code_to_graph(m)
        left = ",".join(str(v + 1) for v in range(g.n) if coloring[v] == LEFT)
        _write_out(f"# left={left}\n{formats.to_graph6(g)}\n", args.output)
    elif args.action == "summary":
        s = codes_mod.summary(m)
        flags = (
            f"indecomposable={'yes' if s.indecomposable else 'no'} "
            f"self-dual={'yes' if s.self_dual else 'no'} "
            f"isodual={'yes' if s.isodual else 'no'} "
            f"info-sets={s.info_set_count}"
        )
        _write_out(f"[{s.n},{s.k},{s.d}] {flags}\n", args.output)
    else:
        raise ValueError(f"unknown code action {args.action!r}")
    return 0


def cmd_census(args) -> int:
    workers = args.threads if args.threads else _default_threads()
    if args.mode == "bipartite":
        if args.lc:
            raise ValueError("the bipartite classifier runs ELC orbits only")
        n_max = int(args.target[0])
        log = (lambda msg: print(msg, file=sys.stderr)) if args.verbose else None
        levels = census_mod.classify_bipartite(
            n_max, allow_large=args.allow_large, workers=workers, log=log
        )
        table = census_mod.census_table(levels, with_codes=args.codes)
        results = levels
    else:
        results = []
        for path in args.target:
            with open(path) as fh:
                graphs = list(formats.read_graph6_lines(fh))
            mode = "lc" if args.lc else "elc"
            results.append(
                census_mod.classify_stream(
                    graphs, mode, allow_large=args.allow_large, workers=workers
                )
            )
        table = census_mod.census_table(results, with_codes=args.codes)
    _write_out(table, args.output)
    if args.reps_dir:
        os.makedirs(args.reps_dir, exist_ok=True)
        kind = args.mode if args.mode == "bipartite" else ("lc" if args.lc else "elc")
        for reps in results:
            path = os.path.join(args.reps_dir, f"reps-{kind}-{reps.n}.txt")
            with open(path, "w") as fh:
                census_mod.write_repset(reps, fh)
    return 0


def cmd_convert(args) -> int:
    g = _read_graph(args.input, args.from_fmt)
    _write_out(_graph_text(g, args.to_fmt), args.output)
    return 0


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pivotcode",
        description="Edge local complementation orbits and binary linear codes.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pivot", help="apply ELC on one edge")
    p.add_argument("input", help="graph file, or - for stdin")
    p.add_argument("u", type=int, help="edge endpoint (1-based)")
    p.add_argument("v", type=int, help="edge endpoint (1-based)")
    p.add_argument("--def", dest="definition", default="classes",
                   choices=["lc-compose", "classes", "bipartite"],
                   help="which implementation to run (all agree)")
    p.add_argument("--no-swap", action="store_true",
                   help="emit the pure edge toggle, without the label swap")
    p.add_argument("--format", default="graph6", choices=["graph6", "edges", "adj"])
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_pivot)

    p = sub.add_parser("orbit", help="enumerate an LC or ELC orbit")
    p.add_argument("input")
    p.add_argument("--lc", action="store_true", help="LC orbit instead of ELC")
    p.add_argument("--labeled", action="store_true", help="labeled ELC orbit")
    p.add_argument("--stats", action="store_true",
                   help="print sizes and per-side minimum degrees only")
    p.add_argument("--max-size", type=int, default=None,
                   help="fail if the orbit exceeds this many classes")
    p.add_argument("--format", default="graph6", choices=["graph6", "edges", "adj"])
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("code", help="binary linear code operations")
    p.add_argument("action", choices=["mindist", "infosets", "equiv", "dual",
                                      "standard", "graph", "summary"])
    p.add_argument("matrix", help="generator matrix file (0/1 rows), or -")
    p.add_argument("matrix2", nargs="?", default=None, help="second matrix for equiv")
    p.add_argument("--brute", action="store_true",
                   help="mindist: enumerate codewords instead of the orbit method")
    p.add_argument("--oracle", action="store_true",
                   help="infosets: enumerate column subsets instead of the orbit method")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("census", help="orbit classification runs")
    p.add_argument("mode", choices=["bipartite", "stream"])
    p.add_argument("target", nargs="+",
                   help="bipartite: max n; stream: graph6 file per size")
    p.add_argument("--lc", action="store_true", help="stream mode: LC orbits")
    p.add_argument("--codes", action="store_true", help="add code-count columns")
    p.add_argument("--threads", type=int, default=None,
                   help=f"worker processes (default ${THREADS_ENV} or 1)")
    p.add_argument("--allow-large", action="store_true",
                   help="lift the desk-scale size guards")
    p.add_argument("--reps-dir", default=None,
                   help="directory for per-n orbit representative files")
    p.add_argument("--verbose", action="store_true", help="progress to stderr")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("convert", help="convert between graph formats")
    p.add_argument("input")
    p.add_argument("--from", dest="from_fmt", default="graph6",
                   choices=["graph6", "edges", "adj"])
    p.add_argument("--to", dest="to_fmt", default="edges",
                   choices=["graph6", "edges", "adj", "dot"])
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_convert)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 1
    except (ValueError, OrbitOverflowError, OSError) as exc:
        msg = " ".join(str(exc).split())  # keep the error on a single line
        print(f"error: {msg}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
