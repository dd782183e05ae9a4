"""Batch command-line front end.

Exit codes: 0 the property holds / the value was computed, 1 the property
fails (a witness is printed), 2 usage or parse error, 3 an enumeration cap
was exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .errors import CapExceeded, WfcoalgError
from .finset import Subobject, element_key
from .functor import PowFin, Id, RFunctor
from .coalgebra import canonical_graph, is_cartesian, is_subcoalgebra
from .wellfounded import is_wellfounded, wf_part
from .recursion import (find_homs, hylo, initial_chain, para_hylo,
                        parametric_oracle, recursive_oracle)
from .textform import (ParseError, SpecDocument, parse_spec, render_value)
from . import demos

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _fmt_subset(s: Subobject) -> str:
    return "{" + ", ".join(str(x) for x in s.sorted_members()) + "}"


def _load_document(args) -> SpecDocument:
    if args.demo_doc:
        return _demo_document(args.demo_doc)
    if not args.spec:
        raise WfcoalgError("give a spec file or --demo NAME")
    with open(args.spec, encoding="utf-8") as fh:
        return parse_spec(fh.read())


def _demo_document(name: str) -> SpecDocument:
    if name == "graph-g":
        g = demos.graph_g()
        return SpecDocument("P(X)", g.functor, {"A": g.carrier},
                            coalgebras={"G": g})
    if name == "r-coalgebra":
        from .finset import Carrier
        from .functor import RPair
        from .coalgebra import Coalgebra
        carrier = Carrier(("0", "1"))
        c = Coalgebra(RFunctor(), carrier, (RPair("0", "1"), RPair("0", "1")))
        return SpecDocument("R", c.functor, {"C": carrier}, coalgebras={"C": c})
    raise WfcoalgError(f"no built-in document {name!r} (try graph-g, r-coalgebra)")


def _cmd_check_wf(args, out) -> int:
    doc = _load_document(args)
    coalg = doc.the_coalgebra(args.coalgebra)
    result = wf_part(coalg)
    if result.part.is_full():
        print("well-founded", file=out)
        return EXIT_OK
    print(f"not well-founded: well-founded part = {_fmt_subset(result.part)} != A",
          file=out)
    return EXIT_FAIL


def _cmd_wf_part(args, out) -> int:
    doc = _load_document(args)
    result = wf_part(doc.the_coalgebra(args.coalgebra))
    for i, stage in enumerate(result.chain):
        print(f"step {i}: {_fmt_subset(stage)}", file=out)
    print(f"part: {_fmt_subset(result.part)}", file=out)
    return EXIT_OK


def _cmd_canonical_graph(args, out) -> int:
    doc = _load_document(args)
    graph = canonical_graph(doc.the_coalgebra(args.coalgebra))
    if args.dot:
        print("digraph canonical {", file=out)
        for v in graph.vertices:
            for w in sorted(graph.successors(v), key=element_key):
                print(f'  "{v}" -> "{w}";', file=out)
        print("}", file=out)
    else:
        for v in graph.vertices:
            succ = " ".join(str(w) for w in
                            sorted(graph.successors(v), key=element_key))
            print(f"{v} -> {succ}" if succ else f"{v} ->", file=out)
    return EXIT_OK


def _cmd_hylo(args, out) -> int:
    doc = _load_document(args)
    coalg = doc.the_coalgebra(args.coalgebra)
    alg = doc.the_algebra(args.algebra)
    h = hylo(coalg, alg)
    for a in coalg.carrier:
        print(f"{a} -> {h(a)}", file=out)
    return EXIT_OK


def _cmd_para_hylo(args, out) -> int:
    doc = _load_document(args)
    coalg = doc.the_coalgebra(args.coalgebra)
    par = doc.the_paralgebra(args.paralgebra)
    h = para_hylo(coalg, par.target, par)
    for a in coalg.carrier:
        print(f"{a} -> {h(a)}", file=out)
    return EXIT_OK


def _cmd_initial_chain(args, out) -> int:
    doc = _load_document(args)
    chain = initial_chain(doc.functor, args.max_depth, cap=args.max_enum)
    for i, stage in enumerate(chain.stages):
        print(f"W{i}: {len(stage)} elements", file=out)
    if chain.stabilized:
        print(f"stabilized at index {chain.stable_index}; "
              f"|mu F| = {len(chain.mu_carrier())}", file=out)
        return EXIT_OK
    print("not stabilized within the depth bound", file=out)
    return EXIT_FAIL


def _cmd_find_homs(args, out) -> int:
    doc = _load_document(args)
    coalg = doc.the_coalgebra(args.coalgebra)
    alg = doc.the_algebra(args.algebra)
    homs = find_homs(coalg, alg, cap=args.max_enum)
    print(f"found {len(homs)} morphisms", file=out)
    for i, h in enumerate(homs):
        body = ", ".join(f"{a} -> {h(a)}" for a in coalg.carrier)
        print(f"  [{i}] {body}", file=out)
    return EXIT_OK


def _cmd_oracle(args, out, parametric: bool) -> int:
    doc = _load_document(args)
    coalg = doc.the_coalgebra(args.coalgebra)
    run = parametric_oracle if parametric else recursive_oracle
    verdict = run(coalg, args.max_carrier, cap=args.max_enum)
    sizes = ", ".join(map(str, verdict.sizes_checked))
    if verdict.status == "fail":
        w = verdict.witness
        print(f"fail at carrier size {len(w.carrier)}: "
              f"{w.solution_count} solutions", file=out)
        for k, v in w.table:
            if parametric:
                fv, a = k
                print(f"  {render_value(coalg.functor, fv)} @ {a} -> {v}", file=out)
            else:
                print(f"  {render_value(coalg.functor, k)} -> {v}", file=out)
        return EXIT_FAIL
    print(f"pass (sizes checked: {sizes or 'none'})", file=out)
    return EXIT_OK if verdict.complete else EXIT_CAP


def _cmd_demo(args, out) -> int:
    name = args.name
    if name == "quicksort":
        items = tuple(args.input.split(",")) if args.input else ()
        coalg, alg = demos.quicksort(tuple(sorted(set(items))) or ("a",),
                                     max(len(items), 1))
        h = hylo(coalg, alg)
        print(",".join(h(items)), file=out)
        return EXIT_OK
    if name == "factorial":
        coalg, target, step = demos.factorial_scheme(args.n)
        h = para_hylo(coalg, target, step)
        print(h(args.n), file=out)
        return EXIT_OK
    if name == "fibonacci":
        coalg, target, step = demos.fibonacci_scheme(args.n, args.a0, args.a1)
        h = para_hylo(coalg, target, step)
        print(h(args.n), file=out)
        return EXIT_OK
    if name == "graph-g":
        g = demos.graph_g()
        from .finset import all_subsets
        subs = [s for s in all_subsets(g.carrier) if is_subcoalgebra(g, s)]
        subs.sort(key=lambda s: (len(s.members), s.sorted_members()))
        print("subcoalgebras: " +
              " ".join(_fmt_subset(s) for s in subs), file=out)
        cart = [s for s in subs if is_cartesian(g, s)]
        print("cartesian: " + " ".join(_fmt_subset(s) for s in cart), file=out)
        print(f"well-founded part: {_fmt_subset(wf_part(g).part)}", file=out)
        return EXIT_OK
    if name == "r-coalgebra":
        c = demos.r_coalgebra()
        print(f"well-founded: {is_wellfounded(c)}", file=out)
        rec = recursive_oracle(c, args.max_carrier)
        par = parametric_oracle(c, args.max_carrier)
        print(f"recursive oracle: {rec.status} "
              f"(sizes {list(rec.sizes_checked)})", file=out)
        print(f"parametric oracle: {par.status}", file=out)
        return EXIT_OK
    if name == "automaton":
        c = demos.automaton()
        verdict = is_wellfounded(c)
        print(f"deterministic automaton, {len(c.carrier)} states, "
              f"well-founded: {verdict}", file=out)
        return EXIT_OK
    if name == "lts":
        coalg, subset = demos.transition_system()
        from .coalgebra import next_time
        print(f"next-time {_fmt_subset(subset)} = "
              f"{_fmt_subset(next_time(coalg, subset))}", file=out)
        return EXIT_OK
    raise WfcoalgError(f"unknown demo {name!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wfcoalg",
        description="Workbench for well-founded and recursive coalgebras "
                    "of finite set functors.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_doc=True):
        if needs_doc:
            p.add_argument("spec", nargs="?", help="spec document file")
            p.add_argument("--demo", dest="demo_doc", metavar="NAME",
                           help="use a built-in document instead of a file")
            p.add_argument("--coalgebra", help="coalgebra name in the document")
        p.add_argument("--max-enum", type=int, default=10_000_000,
                       help="enumeration cap")
        p.add_argument("--max-carrier", type=int, default=2,
                       help="largest oracle carrier size")
        p.add_argument("--max-depth", type=int, default=16,
                       help="initial-chain depth bound")

    for cmd, fn in [("check-wf", _cmd_check_wf), ("wf-part", _cmd_wf_part)]:
        p = sub.add_parser(cmd)
        common(p)
        p.set_defaults(handler=fn)

    p = sub.add_parser("canonical-graph")
    common(p)
    p.add_argument("--dot", action="store_true", help="emit graphviz dot")
    p.set_defaults(handler=_cmd_canonical_graph)

    p = sub.add_parser("hylo")
    common(p)
    p.add_argument("--algebra", help="algebra name in the document")
    p.set_defaults(handler=_cmd_hylo)

    p = sub.add_parser("para-hylo")
    common(p)
    p.add_argument("--paralgebra", help="paralgebra name in the document")
    p.set_defaults(handler=_cmd_para_hylo)

    p = sub.add_parser("initial-chain")
    common(p)
    p.set_defaults(handler=_cmd_initial_chain)

    p = sub.add_parser("find-homs")
    common(p)
    p.add_argument("--algebra", help="algebra name in the document")
    p.set_defaults(handler=_cmd_find_homs)

    p = sub.add_parser("oracle-recursive")
    common(p)
    p.set_defaults(handler=lambda a, o: _cmd_oracle(a, o, parametric=False))

    p = sub.add_parser("oracle-parametric")
    common(p)
    p.set_defaults(handler=lambda a, o: _cmd_oracle(a, o, parametric=True))

    p = sub.add_parser("demo")
    p.add_argument("name", help="graph-g | r-coalgebra | quicksort | "
                                "factorial | fibonacci | automaton | lts")
    p.add_argument("--input", help="comma-separated list for quicksort")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--a0", type=int, default=0)
    p.add_argument("--a1", type=int, default=1)
    common(p, needs_doc=False)
    p.set_defaults(handler=_cmd_demo)
    return parser


def main(argv: Optional[list] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.handler(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=out)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=out)
        return EXIT_CAP
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=out)
        return EXIT_USAGE
    except WfcoalgError as exc:
        print(f"error: {exc}", file=out)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
