"""Command-line driver: ``zonecover <subcommand> [input] [flags]``.

Inputs are read from a path or from stdin (no path or ``-``). Reports are
JSON objects ``{"input", "result", "elapsed_ms", "seed"}``; ``gen`` writes
the generated instance in its text format instead, so generators pipe
straight into the other subcommands. Errors go to stderr as JSON with exit
code 2 (format), 3 (caps and limits) or 1 (anything else that fails).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import acyclic, arrangement, cover, formats, pcube, poset, special
from .errors import BudgetInfeasible, FormatError, LimitError, ZoneCoverError
from .graph import SimpleGraph, random_tree, star_graph

EXIT_OK, EXIT_FAIL, EXIT_FORMAT, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(FormatError):
    pass


def _read(path) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None


def _int_list(text, what):
    out = []
    for tok in text.replace(",", " ").split():
        try:
            out.append(int(tok))
        except ValueError:
            raise UsageError(f"{what}: {tok!r} is not an integer") from None
    return out


def _edge_list(g: SimpleGraph, text: str) -> list:
    """Edge indices from tokens like ``3`` (index) or ``1-4`` (endpoints)."""
    out = []
    for tok in text.replace(",", " ").split():
        try:
            if "-" in tok:
                u, v = (int(x) for x in tok.split("-"))
                if not g.has_edge(u, v):
                    raise UsageError(f"{tok} is not an edge")
                out.append(g.edge_index(u, v))
            else:
                out.append(int(tok))
        except (ValueError, IndexError):
            raise UsageError(f"bad edge token {tok!r}") from None
    return sorted(set(out))


def _pairs(g, idx):
    return [list(g.edges[i]) for i in idx]


def _load_cube(args):
    text = _read(args.input)
    kind = formats.sniff(text)
    if kind == "pcube":
        pc = formats.parse_pcube(text)
    elif kind == "graph":
        pc = pcube.recognize_graph(formats.parse_graph(text))
    else:
        raise FormatError(f"expected a pcube or graph input, got {kind!r}")
    return pc, {"path": args.input or "-", "format": kind, "vertices": pc.n, "dim": pc.dim}


def _load_graph(args):
    g = formats.parse_graph(_read(args.input))
    return g, {"path": args.input or "-", "format": "graph", "vertices": g.n, "edges": g.m}


def _load_poset(args):
    p = formats.parse_poset(_read(args.input))
    return p, {"path": args.input or "-", "format": "poset", "elements": p.n, "covers": len(p.covers)}


# -- subcommands (each returns (input info, result, plain text)) --------------------

def cmd_recognize(args):
    pc, info = _load_cube(args)
    result = {"vertices": pc.n, "dim": pc.dim, "zone_sizes": pc.zone_sizes(), "words": pc.words()}
    return info, result, pc.to_text()


def cmd_cover(args):
    pc, info = _load_cube(args)
    if args.budget is not None and args.method != "exact":
        raise UsageError("--budget only applies to --method exact")
    extra = {}
    if args.method == "exact":
        cert = cover.min_cover_exact(pc, budget=args.budget, node_cap=args.node_cap)
        if cert is None:
            raise BudgetInfeasible(f"no zone cover of size <= {args.budget}")
    elif args.method == "greedy":
        cert = cover.greedy_cover(pc)
    else:
        ind = cover.max_independent_zones(pc)
        cert = cover.independent_complement_cover(pc)
        extra["independent"] = list(ind)
        extra["independent_size"] = len(ind)
        if args.arrangement_dim:
            extra["dim_root"] = round(pc.dim ** (1 / args.arrangement_dim), 6)
    result = {**cert.to_json(), "method": args.method, **extra}
    plain = f"size {cert.size}\nzones {' '.join(map(str, cert.zones))}\n"
    return info, result, plain


def cmd_check_cover(args):
    pc, info = _load_cube(args)
    zones = _int_list(args.zones, "--zones")
    v = cover.first_uncovered(pc, zones)
    result = {"cover": v is None, "first_uncovered": v, "first_uncovered_word": None if v is None else pc.word(v)}
    plain = "cover\n" if v is None else f"uncovered {v} {pc.word(v)}\n"
    return info, result, plain


def cmd_guard_check(args):
    g, info = _load_graph(args)
    s = _edge_list(g, args.edges)
    if args.method == "enumerate":
        ok = acyclic.is_guarding(g, s, method="enumerate", cap=args.cap)
        order = None
    else:
        order = acyclic.find_transitive_order(g, s)
        ok = order is None
    result = {"guarding": ok, "edges": s, "pairs": _pairs(g, s), "method": args.method}
    if order is not None:
        result["witness_order"] = order
        result["witness_orientation"] = acyclic.AcyclicOrientation(g, acyclic.orientation_from_order(g, order)).bitstring()
    return info, result, f"{'guarding' if ok else 'not guarding'}\n"


def cmd_min_guard(args):
    g, info = _load_graph(args)
    s = acyclic.min_guarding(g, method=args.method, cap=args.cap, node_cap=args.node_cap)
    result = {"size": len(s), "edges": list(s), "pairs": _pairs(g, s), "method": args.method}
    return info, result, f"size {len(s)}\nedges {' '.join(map(str, s))}\n"


def cmd_min_cut(args):
    g, info = _load_graph(args)
    s = acyclic.min_edge_cut(g)
    result = {"size": len(s), "edges": list(s), "pairs": _pairs(g, s)}
    return info, result, f"size {len(s)}\nedges {' '.join(map(str, s))}\n"


def cmd_chordal(args):
    g, info = _load_graph(args)
    ok, peo = acyclic.is_chordal(g)
    result = {"chordal": ok, "peo": peo}
    if args.compare:
        result["min_cut_size"] = len(acyclic.min_edge_cut(g))
        result["min_guard_size"] = len(acyclic.min_guarding(g, cap=args.cap, node_cap=args.node_cap))
    return info, result, f"{'chordal' if ok else 'not chordal'}\n"


def cmd_fibre(args):
    p, info = _load_poset(args)
    s = poset.min_fibre(p, cap=args.cap, node_cap=args.node_cap)
    return info, {"size": len(s), "elements": list(s)}, f"size {len(s)}\nelements {' '.join(map(str, s))}\n"


def cmd_guard_poset(args):
    p, info = _load_poset(args)
    s = poset.min_guarding_poset(p, cap=args.cap, node_cap=args.node_cap)
    result = {"size": len(s), "elements": list(s), "downsets": len(poset.downset_masks(p, args.cap))}
    return info, result, f"size {len(s)}\nelements {' '.join(map(str, s))}\n"


def cmd_antichains(args):
    p, info = _load_poset(args)
    alls = poset.maximal_antichains(p, cap=args.cap)
    result = {"maximal": [list(a) for a in alls], "nontrivial": sum(len(a) >= 2 for a in alls)}
    plain = "".join(" ".join(map(str, a)) + "\n" for a in alls)
    return info, result, plain


def cmd_tree_cover(args):
    g, info = _load_graph(args)
    s = special.tree_min_edge_cover(g)
    result = {"size": len(s), "edges": list(s), "pairs": _pairs(g, s), "max_matching": len(special.max_matching(g))}
    return info, result, f"size {len(s)}\nedges {' '.join(map(str, s))}\n"


# -- generators --------------------------------------------------------------------

def _seed(args):
    return args.seed if args.gen_seed is None else args.gen_seed


def gen_instance(args):
    """Returns (kind, text, summary)."""
    kind = args.kind
    if kind == "hypercube":
        pc = pcube.hypercube(args.n)
    elif kind == "star":
        pc = pcube.recognize_graph(star_graph(args.n))
    elif kind == "permutohedron":
        pc = acyclic.permutohedron(args.n)
    elif kind == "tree-random":
        g = random_tree(args.n, _seed(args))
        return "graph", formats.graph_to_text(g), {"vertices": g.n, "edges": g.m}
    elif kind == "lines-random":
        a = arrangement.random_lines(args.n, _seed(args))
        return "lines", formats.arrangement_to_text(a), {"lines": a.n}
    elif kind == "wheel-blob":
        g, rim = acyclic.gen_wheel_blob(args.t, args.g)
        text = formats.graph_to_text(g) + f"# guard {' '.join(map(str, rim))}\n"
        return "graph", text, {"vertices": g.n, "edges": g.m, "guard": list(rim)}
    elif kind == "medianize":
        mg = special.medianize(formats.parse_graph(_read(args.file)))
        if args.roles:
            with open(args.roles, "w", encoding="ascii") as fh:
                json.dump(mg.roles_json(), fh, sort_keys=True)
                fh.write("\n")
        pc = mg.cube
    elif kind == "lattice":
        pc = poset.lattice_cube(formats.parse_poset(_read(args.file)), cap=args.cap)
    elif kind == "flipgraph":
        pc = acyclic.flip_graph(formats.parse_graph(_read(args.file)), cap=args.cap)
    elif kind in ("dual-lines", "dual-hyperplanes"):
        text = _read(args.file)
        a = formats.parse_lines(text) if kind == "dual-lines" else formats.parse_arrangement(text)
        cells = arrangement.cells_2d(a) if a.d == 2 else arrangement.cells_nd(a)
        pc = arrangement.dual_cube(cells)
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown generator {kind!r}")
    return "pcube", pc.to_text(), {"vertices": pc.n, "dim": pc.dim}


def cmd_gen(args):
    fmt, text, summary = gen_instance(args)
    info = {"generator": args.kind}
    return info, {"format": fmt, "text": text, **summary}, text


COMMANDS = {
    "recognize": cmd_recognize,
    "cover": cmd_cover,
    "check-cover": cmd_check_cover,
    "gen": cmd_gen,
    "guard-check": cmd_guard_check,
    "min-guard": cmd_min_guard,
    "min-cut": cmd_min_cut,
    "chordal": cmd_chordal,
    "fibre": cmd_fibre,
    "guard-poset": cmd_guard_poset,
    "antichains": cmd_antichains,
    "tree-cover": cmd_tree_cover,
}


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice (default 0)")
    common.add_argument("--threads", type=_positive, default=1,
                        help="worker threads; results do not depend on it (default 1)")
    common.add_argument("--output", choices=("json", "plain"), default=None,
                        help="report style (default json; plain for gen)")
    common.add_argument("-o", "--out", default=None, help="write output here instead of stdout")
    common.add_argument("--cap", type=_positive, default=10**6,
                        help="cap on enumerated orientations, downsets or antichains")
    common.add_argument("--node-cap", type=_positive, default=cover.DEFAULT_NODE_CAP,
                        help="cap on search nodes of the exact solvers")
    common.add_argument("--no-timing", action="store_true", help="report elapsed_ms as null")

    parser = argparse.ArgumentParser(prog="zonecover", description="Zone covers of partial cubes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, input_=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if input_:
            p.add_argument("input", nargs="?", default=None, help="input file (default stdin)")
        return p

    add("recognize", "graph or pcube -> pcube with zone statistics")
    p = add("cover", "minimum or heuristic zone cover")
    p.add_argument("--method", choices=("exact", "greedy", "independent-complement"), default="exact")
    p.add_argument("--budget", type=_nonneg, default=None, help="exact: any cover of at most this size")
    p.add_argument("--arrangement-dim", type=_positive, default=None,
                   help="independent-complement: also report dim ** (1/d)")
    p = add("check-cover", "does a zone list cover the cube")
    p.add_argument("--zones", required=True, help="zone indices, comma or space separated")
    p = add("guard-check", "is an edge set guarding")
    p.add_argument("--edges", required=True, help="edge indices or u-v pairs")
    p.add_argument("--method", choices=("search", "enumerate"), default="search")
    p = add("min-guard", "minimum guarding edge set")
    p.add_argument("--method", choices=("implicit", "enumerate"), default="implicit")
    add("min-cut", "global minimum edge cut")
    p = add("chordal", "chordality with a perfect elimination order")
    p.add_argument("--compare", action="store_true", help="also report min cut and min guarding sizes")
    add("fibre", "minimum fibre of a poset")
    add("guard-poset", "minimum guarding element set of a poset")
    add("antichains", "maximal antichains of a poset")
    add("tree-cover", "minimum edge cover of a tree")

    gen = sub.add_parser("gen", help="generate an instance").add_subparsers(dest="kind", required=True)

    def gadd(name, help_):
        return gen.add_parser(name, parents=[common], help=help_)

    for name, help_ in (("hypercube", "Q_n"), ("star", "cube of the star with n edges"),
                        ("permutohedron", "flip graph of K_n")):
        gadd(name, help_).add_argument("n", type=_nonneg)
    for name, help_ in (("tree-random", "random tree with n edges"), ("lines-random", "n random lines")):
        p = gadd(name, help_)
        p.add_argument("n", type=_positive)
        p.add_argument("gen_seed", type=int, nargs="?", default=None, metavar="seed")
    p = gadd("wheel-blob", "wheel with blown-up spokes")
    p.add_argument("t", type=int)
    p.add_argument("g", type=int)
    p = gadd("medianize", "apex plus subdivision of a graph")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--roles", default=None, help="write vertex roles to this JSON file")
    for name, help_ in (("lattice", "downset lattice of a poset"), ("flipgraph", "flip graph of a graph"),
                        ("dual-lines", "dual cube of a line arrangement"),
                        ("dual-hyperplanes", "dual cube of a hyperplane arrangement")):
        gadd(name, help_).add_argument("file", nargs="?", default=None)
    return parser


def _emit(text, out):
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    style = args.output or ("plain" if args.command == "gen" else "json")
    start = time.perf_counter()
    try:
        info, result, plain = COMMANDS[args.command](args)
    except ZoneCoverError as exc:
        code = EXIT_FORMAT if isinstance(exc, FormatError) else EXIT_LIMIT if isinstance(exc, LimitError) else EXIT_FAIL
        err = {"error": type(exc).__name__, "message": str(exc), "exit": code}
        sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
        return code
    elapsed = None if args.no_timing else round((time.perf_counter() - start) * 1000, 3)
    if style == "plain":
        _emit(plain, args.out)
    else:
        report = {"input": info, "result": result, "elapsed_ms": elapsed, "seed": args.seed}
        _emit(json.dumps(report, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
