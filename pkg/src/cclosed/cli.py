"""Command-line interface.  Exit codes: 0 yes / valid, 1 no / invalid, 2 error."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import generators
from .applications import AlmostClosedDecomposition, enumerate_maximal_cliques, max_independent_set
from .closure import bad_pair_vertices, enumerate_bad_pairs
from .errors import CClosedError, InputError
from .graph import BRUTE_FORCE_GUARD, brute_force_min_deletion, closure_number, delete_vertices, \
    is_c_closed, weak_closure_number
from .io import parse_graph, parse_hitting_set, parse_intervals, parse_solution, serialize_graph, \
    serialize_hitting_set
from .reductions import kernelize_parameter_k, reduce_ccvd_to_hittingset, reduce_hittingset_to_ccvd, \
    rule2_x_kernel
from .solvers import IntervalRepresentation, build_ilp, neighborhood_partition, solve_branching, solve_degree_bounded, \
    solve_ilp_tiny, solve_nd_branching, solve_unit_interval

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2
METHODS = ("auto", "brute", "branch", "nd", "interval", "degree")


def _read(path):
    return Path(path).read_text()


def _emit(text, out=None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph_and_rep(args):
    rep = parse_intervals(_read(args.intervals)) if getattr(args, "intervals", None) else None
    if args.input:
        g = parse_graph(_read(args.input))
        if rep is not None:
            # interval ids name the vertices of the graph file
            if sorted(rep.labels) != list(range(g.n)):
                raise InputError("interval ids must be exactly the vertices 0..n-1 of --input")
            by_id = dict(zip(rep.labels, rep.starts))
            rep = IntervalRepresentation([by_id[v] for v in range(g.n)])
            if rep.to_graph() != g:
                raise InputError("interval file does not represent the graph in --input")
    elif rep is not None:
        g = rep.to_graph()
    else:
        raise InputError("need --input or --intervals")
    return g, rep


def choose_method(g, c, rep=None, nd_threshold=12):
    if rep is not None and rep.depth() <= c + 1:
        return "interval"
    if c in (2, 3) and g.max_degree <= c:
        return "degree"
    if c >= 2 and neighborhood_partition(g).nd <= nd_threshold:
        return "nd"
    return "branch"


def run_solver(method, g, c, k, rep=None, guard=BRUTE_FORCE_GUARD):
    if method == "brute":
        return brute_force_min_deletion(g, c, k, guard=guard)
    if method == "branch":
        return solve_branching(g, c, k)
    if method == "nd":
        return solve_nd_branching(g, c, k)
    if method == "interval":
        if rep is None:
            raise InputError("method 'interval' needs --intervals")
        return solve_unit_interval(rep, c)
    if method == "degree":
        return solve_degree_bounded(g, c)
    raise InputError(f"unknown method {method!r}")


def cmd_solve(args):
    g, rep = _load_graph_and_rep(args)
    method = args.method
    if method == "auto":
        method = choose_method(g, args.c, rep, args.nd_threshold)
    res = run_solver(method, g, args.c, args.k, rep, args.guard)
    yes = res.solution is not None and len(res.solution) <= args.k
    labels = rep.labels if rep is not None else range(g.n)
    solution = sorted(labels[v] for v in res.solution) if yes else None
    if args.json:
        print(json.dumps({"answer": "yes" if yes else "no", "method": method,
                          "size": len(solution) if yes else None, "solution": solution,
                          "stats": res.stats}))
    else:
        print(f"answer: {'yes' if yes else 'no'}")
        print(f"method: {method}")
        if yes:
            print(f"size: {len(solution)}")
            print("solution: " + " ".join(map(str, solution)))
        if args.stats:
            for key, value in sorted(res.stats.items()):
                print(f"stat {key}: {value}")
    return EXIT_YES if yes else EXIT_NO


def cmd_kernel(args):
    g = parse_graph(_read(args.input))
    if args.param == "k":
        out = kernelize_parameter_k(g, args.c, args.k)
    else:
        out = rule2_x_kernel(g, args.c, args.k)
    header = [f"# kernel (parameter {args.param}) c={args.c} k={out.k}",
              "# origin: " + " ".join(str(out.old_id_map[i]) for i in range(out.graph.n))]
    if out.certificate_hooks:
        header.append("# forced pairs: " + " ".join(f"{u}-{v}" for u, v in out.certificate_hooks))
    _emit("\n".join(header) + "\n" + serialize_graph(out.graph), args.out)
    return EXIT_YES


def cmd_closure(args):
    g = parse_graph(_read(args.input))
    print(closure_number(g))
    if args.weak:
        print(f"weak: {weak_closure_number(g)}")
    return EXIT_YES


def cmd_badpairs(args):
    g = parse_graph(_read(args.input))
    for bp in enumerate_bad_pairs(g, args.c):
        print(f"{bp.u} {bp.v} : " + " ".join(map(str, bp.connectors)))
    print(f"x = {len(bad_pair_vertices(g, args.c))}")
    return EXIT_YES


def cmd_reduce(args):
    if args.direction == "to-hs":
        g = parse_graph(_read(args.input))
        _emit(serialize_hitting_set(reduce_ccvd_to_hittingset(g, args.c, args.k)), args.out)
    else:
        hs = parse_hitting_set(_read(args.input))
        g, c, k = reduce_hittingset_to_ccvd(hs)
        _emit(f"# c={c} k={k}\n" + serialize_graph(g), args.out)
    return EXIT_YES


def cmd_generate(args):
    params = {key: getattr(args, key) for key in ("n", "p", "seed", "c", "s", "mask")
              if getattr(args, key) is not None}
    if args.family in ("vc-maxdeg6", "vc-maxdeg45") and args.input:
        params["vc"] = parse_graph(_read(args.input))
    if args.family == "hs-split":
        if not args.input:
            raise InputError("hs-split needs --input with a hitting-set file")
        params["hs"] = parse_hitting_set(_read(args.input))
    if args.family == "random-vc":
        params["spread"] = args.spread
    inst = generators.generate(generators.GeneratorSpec(args.family, params))
    text = inst.serialize()
    if inst.meta and inst.meta.get("c") is not None:
        text = f"# c={inst.meta['c']} k={inst.meta['k']}\n" + text
    _emit(text, args.out)
    return EXIT_YES


def _modulator(args, g):
    if args.modulator:
        return parse_solution(_read(args.modulator))
    res = solve_branching(g, args.c, g.n)
    return sorted(res.solution)


def cmd_cliques(args):
    g = parse_graph(_read(args.input))
    dec = AlmostClosedDecomposition(g, frozenset(_modulator(args, g)), args.c)
    for clique in enumerate_maximal_cliques(dec):
        print(" ".join(map(str, sorted(clique))))
    return EXIT_YES


def cmd_indepset(args):
    g = parse_graph(_read(args.input))
    dec = AlmostClosedDecomposition(g, frozenset(_modulator(args, g)), args.c)
    found = max_independent_set(dec, args.ell)
    if found is None:
        print("answer: no")
        return EXIT_NO
    print("answer: yes")
    print("set: " + " ".join(map(str, sorted(found))))
    return EXIT_YES


def cmd_ilp(args):
    g = parse_graph(_read(args.input))
    model = build_ilp(g, args.c)
    if args.out:
        Path(args.out).write_text(model.to_lp())
    if args.solve:
        res = solve_ilp_tiny(model, g, args.c)
        print(f"objective: {res.stats['objective']}")
        print("deleted: " + " ".join(map(str, sorted(res.solution))))
    elif not args.out:
        sys.stdout.write(model.to_lp())
    return EXIT_YES


def cmd_verify(args):
    g = parse_graph(_read(args.input))
    s = parse_solution(_read(args.solution))
    if len(set(s)) != len(s):
        raise InputError("solution lists a vertex twice")
    ok = len(s) <= args.k and is_c_closed(delete_vertices(g, s), args.c)
    print("valid" if ok else "invalid")
    return EXIT_YES if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cclosed", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, c=True, k=False, inp=True):
        if c:
            p.add_argument("--c", type=int, required=True)
        if k:
            p.add_argument("--k", type=int, required=True)
        if inp:
            p.add_argument("--input", required=True)

    p = sub.add_parser("solve", help="decide (G, k) and print a minimum solution")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--input")
    p.add_argument("--intervals")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--nd-threshold", type=int, default=12)
    p.add_argument("--guard", type=int, default=BRUTE_FORCE_GUARD)
    p.add_argument("--json", action="store_true")
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("kernel", help="print a kernelized instance")
    common(p, k=True)
    p.add_argument("--param", choices=("k", "x"), default="k")
    p.add_argument("--out")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("closure", help="print the closure number")
    common(p, c=False)
    p.add_argument("--weak", action="store_true")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("badpairs", help="list bad pairs with their connectors")
    common(p)
    p.set_defaults(func=cmd_badpairs)

    p = sub.add_parser("reduce", help="translate to or from d-Hitting Set")
    p.add_argument("--direction", choices=("to-hs", "from-hs"), required=True)
    p.add_argument("--c", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("generate", help="write a generated instance")
    p.add_argument("family", choices=generators.FAMILIES)
    for name, typ in (("n", int), ("p", float), ("seed", int), ("c", int), ("s", int), ("mask", int)):
        p.add_argument(f"--{name}", type=typ)
    p.add_argument("--spread", action="store_true", help="random-vc: degree-3 vertices at distance >= 3")
    p.add_argument("--input", help="vertex cover graph (vc-*) or hitting-set file (hs-split)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    for name, func in (("cliques", cmd_cliques), ("indepset", cmd_indepset)):
        p = sub.add_parser(name)
        common(p)
        p.add_argument("--modulator", help="file with S; computed by branching when omitted")
        if name == "indepset":
            p.add_argument("--ell", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("ilp", help="emit the twin-class ILP in LP format")
    common(p)
    p.add_argument("--out")
    p.add_argument("--solve", action="store_true", help="solve by enumeration (tiny models only)")
    p.set_defaults(func=cmd_ilp)

    p = sub.add_parser("verify", help="check a claimed solution")
    common(p, k=True)
    p.add_argument("--solution", required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "reduce" and args.direction == "to-hs" and (args.c is None or args.k is None):
        parser.error("reduce --direction to-hs needs --c and --k")
    try:
        return args.func(args)
    except (CClosedError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
