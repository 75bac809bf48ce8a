"""``isodom`` command line: gen, check, solve, reduce, bench.

Exit codes: 0 ok / feasible / yes, 2 infeasible / no, 1 error.
"""
import argparse
import json
import sys

from . import certify, graph as gr
from . import reduce as red
from .bench import SUITES, run_suite
from .families import closed_form_isds_number
from .solve import OPTIMAL, ProblemKind, solve_bnb, solve_brute
from .treewidth import make_nice, min_fill_decomposition, parse_decomposition
from .treewidth import dp_min_dominating_set, dp_min_isolate_dominating_set

PROBLEMS = ("ds", "sds", "ids", "isds")


class CliError(Exception):
    pass


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text + "\n")


def _emit(payload, as_json, human=None):
    if as_json or human is None:
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        sys.stdout.write(human + "\n")


def _parse_set(text):
    text = (text or "").strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise CliError(f"bad vertex set {text!r}; expected comma-separated ids") from None


def _family_graph(args):
    fam = args.family.replace("-", "_")
    if fam == "random_bipartite":
        return gr.gen_random_bipartite(args.m, args.n, args.p, args.seed)[0]
    if fam == "random_split":
        return gr.gen_random_split(args.c, args.i, args.p, args.seed)[0]
    if fam == "random":
        return gr.gen_random_graph(args.n, args.p, args.seed)
    if fam == "complete_bipartite":
        return gr.gen_family(fam, args.m, args.n)
    return gr.gen_family(fam, args.n)


def cmd_gen(args):
    g = _family_graph(args)
    _write(args.out, gr.graph_to_json(g) if args.json else gr.serialize_edge_list(g))
    return 0


def cmd_check(args):
    g = gr.load_graph(_read(args.input))
    rep = certify.check(g, _parse_set(args.set), args.problem, args.method)
    human = f"{args.problem}: {'yes' if rep.verdict else 'no'}"
    if rep.violation:
        human += f" ({rep.violation})"
    _emit(rep.to_dict(), args.json, human)
    return 0 if rep.verdict else 2


def _closed_form(args):
    fam = args.family.replace("-", "_")
    sizes = (args.m, args.n) if fam == "complete_bipartite" else (args.n,)
    value = closed_form_isds_number(fam, *sizes)
    payload = {"kind": "ISDS", "method": "closed-form", "family": fam, "sizes": list(sizes),
               "status": OPTIMAL if value is not None else "infeasible", "value": value}
    return payload, value


def cmd_solve(args):
    kind = ProblemKind.parse(args.problem)
    if args.method == "closed-form":
        if kind is not ProblemKind.ISDS or not args.family:
            raise CliError("closed-form needs --problem isds and --family")
        payload, value = _closed_form(args)
    else:
        g = gr.load_graph(_read(args.input))
        if args.method == "brute":
            res = solve_brute(g, kind)
        elif args.method == "bnb":
            res = solve_bnb(g, kind, upper_bound=args.k)
        elif args.method == "treewidth":
            if kind not in (ProblemKind.DS, ProblemKind.IDS):
                raise CliError("treewidth method supports ds and ids only")
            td = parse_decomposition(_read(args.td)) if args.td else min_fill_decomposition(g)
            ntd = make_nice(td, g=g)
            dp = dp_min_dominating_set if kind is ProblemKind.DS else dp_min_isolate_dominating_set
            res = dp(g, ntd)
        else:
            raise CliError(f"unknown method {args.method!r}")
        payload, value = res.to_dict(timing=not args.no_timing), res.value
    if args.k is not None:
        answer = value is not None and value <= args.k
        payload["decision"] = {"k": args.k, "answer": answer}
        ok = answer
    else:
        ok = value is not None
    human = f"{payload['kind']} {payload['status']}" + (f" value={value}" if value is not None else "")
    if "witness" in payload and payload["witness"] is not None:
        human += " witness=" + ",".join(map(str, payload["witness"]))
    _emit(payload, args.json, human)
    return 0 if ok else 2


def cmd_reduce(args):
    g = gr.load_graph(_read(args.input))
    if args.kind == "dom-bipartite":
        bp = gr.is_bipartite(g)
        if bp is None:
            raise CliError("input graph is not bipartite")
        art = red.reduce_dom_bipartite(g, bp, args.k)
    else:
        if args.clique is not None:
            clique = frozenset(_parse_set(args.clique))
            sp = gr.SplitPartition(clique, frozenset(range(g.n)) - clique)
        else:
            sp = gr.split_partition(g)
            if sp is None:
                raise CliError("input graph is not a split graph")
        art = red.reduce_sdom_split(g, sp, args.k)
    side = art.sidecar()
    side["input_partition"] = (
        {"left": sorted(art.partition.left), "right": sorted(art.partition.right)}
        if args.kind == "dom-bipartite"
        else {"clique": sorted(art.partition.clique), "independent": sorted(art.partition.independent)})
    edge_list = gr.serialize_edge_list(art.reduced)
    if args.out:
        _write(args.out, edge_list)
        _write(args.sidecar or args.out + ".json", json.dumps(side, sort_keys=True))
        _emit(side, True)
    else:
        side["graph"] = edge_list
        _emit(side, True)
    return 0


def cmd_bench(args):
    rows = run_suite(args.suite, args.count)
    failing = [r for r in rows if not r["ok"]]
    payload = {"suite": args.suite, "rows": rows, "passed": not failing, "failing": failing}
    text = json.dumps(payload, sort_keys=True)
    if args.out:
        _write(args.out, text)
    if args.json or not args.out:
        sys.stdout.write(text + "\n")
    else:
        sys.stdout.write(f"{args.suite}: {len(rows) - len(failing)}/{len(rows)} rows passed\n")
    return 0 if not failing else 1


def build_parser():
    p = argparse.ArgumentParser(prog="isodom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a graph")
    g.add_argument("--family", required=True,
                   choices=["path", "cycle", "complete", "complete-bipartite", "complete_bipartite",
                            "star", "random", "random-bipartite", "random-split"])
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--c", type=int)
    g.add_argument("--i", type=int)
    g.add_argument("--p", type=float, default=0.5)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="check a vertex set")
    c.add_argument("--problem", required=True, choices=PROBLEMS)
    c.add_argument("--input", default="-")
    c.add_argument("--set", required=True)
    c.add_argument("--method", choices=["naive", "epn"], default="naive")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("solve", help="compute an optimum")
    s.add_argument("--problem", required=True, choices=PROBLEMS)
    s.add_argument("--input", default="-")
    s.add_argument("--method", choices=["brute", "bnb", "closed-form", "treewidth"], default="bnb")
    s.add_argument("--k", type=int)
    s.add_argument("--td", help="tree decomposition file for --method treewidth")
    s.add_argument("--family")
    s.add_argument("--n", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--no-timing", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    r = sub.add_parser("reduce", help="build a reduction instance")
    r.add_argument("--kind", required=True, choices=["dom-bipartite", "sdom-split"])
    r.add_argument("--input", default="-")
    r.add_argument("--k", type=int, required=True)
    r.add_argument("--clique", help="clique part for sdom-split (comma-separated)")
    r.add_argument("--out")
    r.add_argument("--sidecar")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_reduce)

    b = sub.add_parser("bench", help="run a verification sweep")
    b.add_argument("--suite", required=True, choices=SUITES)
    b.add_argument("--count", type=int)
    b.add_argument("--out")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ValueError, TypeError, OSError, RuntimeError) as exc:
        sys.stderr.write(f"isodom: error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
