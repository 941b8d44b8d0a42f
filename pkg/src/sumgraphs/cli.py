"""Command-line interface.

Exit codes: 0 success, 1 a check failed (labelling does not verify, a PASS
claim failed), 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import claims as CL
from . import constructors as C
from . import exactla as X
from . import fib as F
from . import graphs as G
from . import magmas as M
from . import product as P
from . import search as S
from .fixtures import FIXTURES
from .labelling import Labelling, is_strong, labelling_to_json, verify

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- helpers

def _emit(args, doc, text: str | None = None) -> None:
    if args.json or text is None:
        doc = {"schema": SCHEMA_VERSION, **doc}
        print(json.dumps(doc, indent=2, default=str))
    else:
        print(text)


def _graph(args, required: bool = True) -> G.Graph | None:
    if getattr(args, "fixture", None):
        return _fixture(args.fixture).graph
    if getattr(args, "g6", None):
        return G.parse_graph6(args.g6)
    if getattr(args, "graph", None):
        return G.build_family(G.parse_family(args.graph))
    if required:
        raise UsageError("give a graph with --graph NAME, --g6 STRING or --fixture KEY")
    return None


def _fixture(key: str):
    try:
        return FIXTURES[key]
    except KeyError:
        raise UsageError(f"unknown fixture {key!r}; known: {', '.join(FIXTURES)}") from None


def _labels(spec: M.MagmaSpec, text: str, relaxed: bool) -> Labelling:
    items = [t for t in M.split_labels(text) if t.strip()]
    return Labelling(spec, tuple(M.parse_element(spec, t) for t in items), relaxed)


def _labelling(args) -> Labelling:
    if getattr(args, "fixture", None) and not args.labels:
        return _fixture(args.fixture).labelling
    if not args.labels:
        raise UsageError("give --labels (or --fixture)")
    return _labels(M.parse_spec(args.magma), args.labels, args.relaxed)


def _add_graph_args(p: argparse.ArgumentParser, fixture: bool = True) -> None:
    g = p.add_argument_group("graph")
    g.add_argument("--graph", help="family name: C4, P6, K4, K3,3, Q4, E5, M3 (=3P2), C4+3K1, Petersen, Prism")
    g.add_argument("--g6", help="graph6 string")
    if fixture:
        g.add_argument("--fixture", help="printed labelling key (see `claims list`)")


def _verdict_text(lab: Labelling, v) -> str:
    head = "OK" if v.ok else "FAIL"
    lines = [f"{head}: {M.spec_name(lab.spec)} labels "
             + ", ".join(M.render_element(lab.spec, x) for x in lab.labels)]
    for u, w in v.missing_edges:
        lines.append(f"  missing edge {u}-{w}")
    for u, w, k in v.spurious_edges:
        lines.append(f"  spurious edge {u}-{w} (sum is the label of vertex {k})")
    return "\n".join(lines)


# ---------------------------------------------------------------- commands

def cmd_verify(args) -> int:
    g = _graph(args)
    lab = _labelling(args)
    v = verify(lab, g)
    doc = {"verdict": v.to_json(), "labelling": labelling_to_json(lab, g), "strong": is_strong(lab)}
    _emit(args, doc, _verdict_text(lab, v))
    return 0 if v.ok else 1


def cmd_build(args) -> int:
    g = _graph(args)
    if args.format == "g6":
        print(G.emit_graph6(g).decode())
    else:
        print(G.emit_report(g, fmt=args.format))
    return 0


_CONSTRUCT_GRAPHS = {
    "harary-path": lambda a: G.path(a[0]),
    "matching-harary": lambda a: G.matching(a[0]),
    "matching-li": lambda a: G.matching(a[0]),
    "empty": lambda a: G.empty(a[0]),
    "empty-alt": lambda a: G.empty(a[0]),
    "c4l": lambda a: G.cycle(4 * a[0]),
    "union-cycle": lambda a: G.cycle(2 * a[0]),
    "union-clique": lambda a: G.complete(a[0]),
    "boolean-clique": lambda a: G.complete(a[0]),
    "relaxed-clique": lambda a: G.complete(a[0]),
}


def cmd_construct(args) -> int:
    name = args.name
    if name in ("c4-abelian", "fibonacci"):
        spec = M.parse_spec(args.magma)
        if name == "c4-abelian":
            lab = C.c4_over_abelian(spec, M.parse_element(spec, args.a))
            g = G.cycle(4)
        else:
            if len(args.params) != 1:
                raise UsageError("fibonacci takes the cycle length n")
            n = args.params[0]
            lab = C.fibonacci_cycle(spec, M.parse_element(spec, args.a0), M.parse_element(spec, args.a1), n)
            g = G.cycle(n)
    elif name in C.CONSTRUCTORS:
        lab = C.CONSTRUCTORS[name](*args.params)
        g = _CONSTRUCT_GRAPHS[name](args.params)
    else:
        raise UsageError(f"unknown construction {name!r}")
    v = verify(lab, g)
    doc = {"construction": name, "params": args.params, "labelling": labelling_to_json(lab, g),
           "verdict": v.to_json(), "radius": lab.radius() if lab.spec.kind == M.INT_ADD else None}
    if name == "fibonacci":
        doc["conditions"] = C.fibonacci_conditions(lab.spec, lab.labels[0], lab.labels[1], g.n)
    _emit(args, doc, _verdict_text(lab, v))
    return 0 if v.ok else 1


def _domain(args):
    chosen = [x for x in (args.radius, args.max_label, args.mod) if x is not None]
    if args.magma:
        chosen.append(args.magma)
    if len(chosen) != 1:
        raise UsageError("choose exactly one of --radius, --max-label, --mod, --magma")
    if args.radius is not None:
        return S.IntRadius(args.radius, args.nonzero)
    if args.max_label is not None:
        return S.NatMax(args.max_label)
    if args.mod is not None:
        return S.Mod(args.mod)
    spec = M.parse_spec(args.magma)
    if not spec.is_finite:
        raise UsageError("--magma must be finite; use --radius or --max-label for Z and N")
    return S.FiniteMagma(spec)


def _outcome_text(out: S.SearchOutcome) -> str:
    if out.found:
        lab = out.labelling
        return (f"found ({out.nodes} nodes): "
                + ", ".join(M.render_element(lab.spec, x) for x in lab.labels))
    if out.status == S.BUDGET:
        return f"budget of {out.nodes} nodes exhausted; undecided"
    return f"no labelling within {out.bound} ({out.nodes} nodes)"


def cmd_search(args) -> int:
    g = _graph(args)
    prob = S.SearchProblem(g, _domain(args), relaxed=args.relaxed, strong=args.strong)
    out = S.solve(prob, budget=args.budget)
    _emit(args, out.to_json(), _outcome_text(out))
    return 0


def cmd_radius(args) -> int:
    g = _graph(args)
    r, out = S.radius(g, args.cap, relaxed=args.relaxed, budget=args.budget)
    doc = {"radius": r, "cap": args.cap, "above_cap": r is None,
           "outcome": out.to_json() if out else None}
    text = f"r = {r}" if r is not None else f"no labelling with radius <= {args.cap}"
    if r is not None:
        text += "  " + _outcome_text(out)
    _emit(args, doc, text)
    return 0


def cmd_sum_number(args) -> int:
    g = _graph(args)
    k, out = S.sum_number_bounded(g, args.max_isolated, args.max_label, budget=args.budget)
    doc = {"sum_number": k, "max_isolated": args.max_isolated, "max_label": args.max_label,
           "outcome": out.to_json() if out else None}
    text = (f"sum number {k} (labels <= {args.max_label})" if k is not None
            else f"above cap: no k <= {args.max_isolated} with labels <= {args.max_label}")
    _emit(args, doc, text)
    return 0


def cmd_mod_sweep(args) -> int:
    g = _graph(args)
    res = S.mod_sum_sweep(g, args.mod_cap, relaxed=args.relaxed, budget=args.budget)
    text = (f"Z_{res.modulus}: " + _outcome_text(res.outcome) if res.modulus
            else f"none for m <= {args.mod_cap}")
    text += f"\nbound N = 2*3^(n-1) = {res.theorem_bound}; conclusive: {res.conclusive}"
    _emit(args, res.to_json(), text)
    return 0


def cmd_count(args) -> int:
    graphs = G.read_graph6_file(args.file)
    c = S.count_corpus(graphs, relaxed=not args.no_relaxed, radius_cap=args.radius_cap,
                       jobs=args.jobs, budget=args.budget, nonzero=args.nonzero)
    print(json.dumps(c.to_json()))
    return 0


def cmd_fib_params(args) -> int:
    p = F.fib_params(args.n)
    text = "  ".join(f"{k}={v}" for k, v in p.to_json().items())
    _emit(args, p.to_json(), text)
    return 0


def cmd_delta_report(args) -> int:
    rep = F.delta_ratio_report(args.max_k)
    _emit(args, rep, F.format_delta_report(rep))
    return 0


def _int_source(args) -> tuple[G.Graph, Labelling]:
    g = _graph(args)
    if args.labels:
        lab = _labels(M.int_add(), args.labels, False)
    elif args.fixture:
        lab = _fixture(args.fixture).labelling
    else:
        raise UsageError("give --labels or --fixture")
    return g, lab


def cmd_kernel(args) -> int:
    g, lab = _int_source(args)
    system, basis = X.labelling_kernel(g, lab)
    coords = X.coordinates(lab.labels, basis)
    doc = {"rows": [list(r) for r in system.rows], "dimension": len(basis),
           "basis": [list(b) for b in basis], "coefficients": [str(c) for c in coords]}
    text = f"kernel dimension {len(basis)}\n" + "\n".join(" ".join(f"{x:3d}" for x in b) for b in basis)
    text += "\nlabels = " + " + ".join(f"({c})*b{i}" for i, c in enumerate(coords))
    _emit(args, doc, text)
    return 0


def cmd_primitives(args) -> int:
    g, lab = _int_source(args)
    _, basis = X.labelling_kernel(g, lab)
    labs = X.enumerate_primitive_labellings(g, basis, box=args.box, limit=args.limit)
    if args.sort_radius:
        labs = sorted(labs, key=lambda l: (l.radius(), l.labels))
    doc = {"box": args.box, "count": len(labs),
           "labellings": [{"labels": list(l.labels), "radius": l.radius(),
                           "coefficients": [str(c) for c in X.coordinates(l.labels, basis)]} for l in labs]}
    text = "\n".join(f"r={l.radius():4d}  {list(l.labels)}" for l in labs) + f"\n{len(labs)} labellings"
    _emit(args, doc, text)
    return 0


def cmd_random_cycle(args) -> int:
    hits = X.random_cycle_search(args.n, seed=args.seed, prime_bound=args.prime_bound,
                                 max_iter=args.max_iter, want=args.want)
    doc = {"n": args.n, "seed": args.seed, "hits": [h.to_json() for h in hits]}
    text = "\n".join(f"Z_{h.prime}: {list(h.labelling.labels)}  g={list(h.cycle_map)}" for h in hits)
    _emit(args, doc, text)
    return 0


def cmd_product(args) -> int:
    ga = G.build_family(G.parse_family(args.a))
    gb = G.build_family(G.parse_family(args.b))
    la = _labels(M.int_add(), args.labels_a, False)
    lb = _labels(M.int_add(), args.labels_b, False)
    for g, lab, name in ((ga, la, "a"), (gb, lb, "b")):
        if not verify(lab, g).ok:
            raise UsageError(f"labels for --{name} do not induce {g}")
    lab = P.product_labelling(la, lb)
    gp = P.direct_product(ga, gb)
    v = verify(lab, gp)
    doc = {"labelling": labelling_to_json(lab, gp), "verdict": v.to_json(), "strong": is_strong(lab)}
    _emit(args, doc, _verdict_text(lab, v))
    return 0 if v.ok else 1


def cmd_claims(args) -> int:
    if args.action == "list":
        for c in CL.select(args.filter):
            print(f"{c.id:<28} {c.expected:<6} {c.statement}")
        return 0
    records = CL.run_claims(args.filter, corpus_dir=args.corpus_dir, full=args.full,
                            seed=args.seed, jobs=args.jobs)
    if args.json:
        print(json.dumps({"schema": SCHEMA_VERSION, "claims": [r.to_json() for r in records]},
                         indent=2, default=str))
    else:
        print(CL.format_table(records))
    return CL.exit_status(records)


def cmd_convert(args) -> int:
    graphs = G.read_graph6_file(args.input)
    for g in graphs:
        if args.to == "g6":
            print(G.emit_graph6(g).decode())
        else:
            print(G.emit_report(g, fmt=args.to))
    return 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized commands")
    common.add_argument("--jobs", type=int, default=int(os.environ.get("SUMGRAPHS_JOBS", "1")),
                        help="worker processes (default $SUMGRAPHS_JOBS or 1)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="sumgraphs", description="Sum graphs over magmas: "
                                     "verification, constructions, bounded search and claim checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check that labels induce a graph")
    _add_graph_args(p)
    p.add_argument("--magma", default="z", help="z, n, absdiff, z11, units:11, ab:4x4, set:4:union")
    p.add_argument("--labels", help="comma list; (a,b) for products, {1,3} for sets")
    p.add_argument("--relaxed", action="store_true", help="allow repeated labels")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("build", parents=[common], help="print a named graph")
    _add_graph_args(p, fixture=False)
    p.add_argument("--format", choices=["g6", "json", "dot"], default="g6")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("construct", parents=[common], help="closed-form labellings, verified")
    p.add_argument("name", help=", ".join(sorted(C.CONSTRUCTORS) + ["c4-abelian", "fibonacci"]))
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--magma", default="z5")
    p.add_argument("--a", help="generator for c4-abelian")
    p.add_argument("--a0")
    p.add_argument("--a1")
    p.set_defaults(func=cmd_construct)

    def search_flags(p, domain=True):
        _add_graph_args(p)
        if domain:
            p.add_argument("--radius", type=int, help="labels in [-r, r]")
            p.add_argument("--max-label", type=int, help="labels in [1, B]")
            p.add_argument("--mod", type=int, help="labels in Z_m")
            p.add_argument("--magma", help="any finite magma")
        p.add_argument("--relaxed", action="store_true")
        p.add_argument("--strong", action="store_true")
        p.add_argument("--nonzero", action="store_true", help="forbid the label 0 (integer domains)")
        p.add_argument("--budget", type=int, help="stop after this many candidate assignments")

    p = sub.add_parser("search", parents=[common], help="bounded labelling search")
    search_flags(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("radius", parents=[common], help="least labelling radius up to a cap")
    search_flags(p, domain=False)
    p.add_argument("--cap", type=int, required=True)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("sum-number", parents=[common], help="least isolated vertices for an N-labelling")
    _add_graph_args(p)
    p.add_argument("--max-isolated", type=int, default=3)
    p.add_argument("--max-label", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_sum_number)

    p = sub.add_parser("mod-sweep", parents=[common], help="first m with a Z_m labelling")
    _add_graph_args(p)
    p.add_argument("--mod-cap", type=int, required=True)
    p.add_argument("--relaxed", action="store_true")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_mod_sweep)

    p = sub.add_parser("count", parents=[common], help="count (relaxed) integral sum graphs in a graph6 file")
    p.add_argument("--file", required=True)
    p.add_argument("--radius-cap", type=int, default=10)
    p.add_argument("--no-relaxed", action="store_true")
    p.add_argument("--nonzero", action="store_true", help="forbid the label 0")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("fib-params", parents=[common], help="Fibonacci parameter tuple for C_n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_fib_params)

    p = sub.add_parser("delta-report", parents=[common], help="ratios of consecutive delta values")
    p.add_argument("--max-k", type=int, default=12)
    p.set_defaults(func=cmd_delta_report)

    for name, func, help_ in (("kernel", cmd_kernel, "rational kernel of an integral labelling"),
                              ("primitives", cmd_primitives, "primitive labellings from the kernel")):
        p = sub.add_parser(name, parents=[common], help=help_)
        _add_graph_args(p)
        p.add_argument("--labels")
        if name == "primitives":
            p.add_argument("--box", type=int, default=50)
            p.add_argument("--limit", type=int)
            p.add_argument("--sort-radius", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("random-cycle", parents=[common], help="C_n labellings over prime fields")
    p.add_argument("--n", type=int, default=9)
    p.add_argument("--prime-bound", type=int, default=100)
    p.add_argument("--max-iter", type=int, default=100_000)
    p.add_argument("--want", type=int, default=1)
    p.set_defaults(func=cmd_random_cycle)

    p = sub.add_parser("product", parents=[common], help="strong labelling of a direct product")
    p.add_argument("--a", required=True)
    p.add_argument("--labels-a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--labels-b", required=True)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("claims", parents=[common], help="run or list the claim checks")
    p.add_argument("action", choices=["run", "list"])
    p.add_argument("--filter", help="claim id or glob, e.g. 'T8-*'")
    p.add_argument("--corpus-dir", type=Path, help="directory with graphs{n}.g6 and cubic{n}.g6")
    p.add_argument("--full", action="store_true", help="include slow claims")
    p.set_defaults(func=cmd_claims)

    p = sub.add_parser("convert", parents=[common], help="graph6 file to json/dot/g6")
    p.add_argument("input")
    p.add_argument("--to", choices=["json", "dot", "g6"], default="json")
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError, OSError) as e:
        print(f"sumgraphs {args.command}: error: {e}", file=sys.stderr)
        return 2
    except X.NoSolutionWithinBudget as e:
        print(f"sumgraphs {args.command}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
