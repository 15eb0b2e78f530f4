"""Command-line interface.

Exit codes: 0 success, 1 property fails / nothing found, 2 usage or parse
error, 3 capacity error, 4 hypothesis violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import matrices
from .cycles import HallViolator, find_cycle_factor, hamilton_cycle, hamilton_cycle_graph, theorem23_hamilton
from .errors import CapacityError, GraphFormatError, PreconditionError
from .graph import (
    UGraph,
    complete_biorientation,
    is_eulerian,
    is_s_quadrangular,
    is_s_quadrangular_graph,
    is_strong,
    iter_bits,
    max_semidegree,
)
from .io import format_graph, format_matrix, parse_graph_file, parse_matrix
from .tutte import build_partition, find_2_factor, tutte_check, verify_partition
from .verify import DIGRAPH, EnumSpace, sample_verify, verify_conjecture

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_HYPOTHESIS = 4


class UsageError(Exception):
    pass


def _load(path, tol):
    """Graph or matrix file -> Digraph/UGraph. Matrices go through their pattern."""
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    first = next((ln.split()[0] for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")), "")
    if first == "matrix":
        return matrices.digraph_of_matrix(parse_matrix(text), tol)
    return parse_graph_file(text)


def _fmt(mask):
    return "{" + ", ".join(map(str, iter_bits(mask))) + "}"


def cmd_check(args):
    g = _load(args.file, args.tol)
    if isinstance(g, UGraph):
        connected = g.is_connected()
        squad = is_s_quadrangular_graph(g)
        print(f"connected: {str(connected).lower()}")
        print(f"s-quadrangular: {str(squad).lower()}")
        print(f"max degree: {g.max_degree()}")
        return EXIT_OK if connected and squad else EXIT_FAIL
    strong = is_strong(g)
    squad = is_s_quadrangular(g)
    print(f"strong: {str(strong).lower()}")
    print(f"s-quadrangular: {str(squad).lower()}")
    print(f"max semi-degree: {max_semidegree(g)}")
    print(f"eulerian: {str(is_eulerian(g)).lower()}")
    return EXIT_OK if strong and squad else EXIT_FAIL


def cmd_factor(args):
    g = _load(args.file, args.tol)
    if isinstance(g, UGraph):
        edges = find_2_factor(g)
        if edges is not None:
            print("2-factor: " + " ".join(f"{u}-{v}" for u, v in edges))
            return EXIT_OK
        viol = tutte_check(g, 2)
        print("no 2-factor")
        if viol is not None:
            print(f"Tutte violator: S={_fmt(viol.s)} T={_fmt(viol.t)} lhs={viol.lhs} > rhs={viol.rhs}")
        return EXIT_FAIL
    if g.n < 2:
        raise UsageError("cycle factors need at least 2 vertices")
    res = find_cycle_factor(g)
    if isinstance(res, HallViolator):
        print("no cycle factor")
        print(f"Hall violator ({res.side}): X={_fmt(res.x)}")
        return EXIT_FAIL
    print("cycle factor: " + " | ".join(" ".join(map(str, c)) for c in res.cycles))
    return EXIT_OK


def cmd_hamilton(args):
    g = _load(args.file, args.tol)
    if args.method == "theorem23":
        d = complete_biorientation(g) if isinstance(g, UGraph) else g
        res = theorem23_hamilton(d)
        if not res.ok:
            print(f"hypothesis violation: {res.violation}: {res.detail}")
            return EXIT_HYPOTHESIS
        cycle = res.cycle
    elif isinstance(g, UGraph):
        if g.n < 3:
            raise UsageError("undirected Hamilton cycles need at least 3 vertices")
        cycle = hamilton_cycle_graph(g)
    else:
        cycle = hamilton_cycle(g)
    if cycle is None:
        print("no Hamilton cycle")
        return EXIT_FAIL
    print("hamilton cycle: " + " ".join(map(str, cycle)))
    return EXIT_OK


def cmd_partition(args):
    g = _load(args.file, args.tol)
    if not isinstance(g, UGraph):
        raise UsageError("partition needs an undirected graph file")
    try:
        p = build_partition(g)
    except PreconditionError as exc:
        print(f"hypothesis violation: {exc.reason}: {exc}")
        return EXIT_HYPOTHESIS
    print(f"S={_fmt(p.s)} T={_fmt(p.t)} O={_fmt(p.o)} R={_fmt(p.r)}")
    print(f"w={p.w} oc={p.oc} e(T,O)={p.eTO}")
    bad = {v.prop: v for v in verify_partition(g, p)}
    for prop in ("i", "ii", "iii", "iv", "v", "vi", "vii"):
        print(f"({prop}): " + (f"FAIL {bad[prop].message}" if prop in bad else "ok"))
    return EXIT_FAIL if bad else EXIT_OK


def _gen_matrix(args):
    kind, size = args.kind, args.size
    if kind == "dft":
        return matrices.dft(size)
    if kind == "sylvester":
        if size < 1 or size & (size - 1):
            raise UsageError("sylvester size must be a power of two")
        return matrices.sylvester(size.bit_length() - 1)
    if kind == "weighing43":
        if size not in (None, 4):
            raise UsageError("weighing43 has order 4")
        return matrices.weighing43()
    if kind == "permutation":
        if args.perm:
            perm = [int(x) for x in args.perm.split(",")]
        else:
            perm = [(i + 1) % size for i in range(size)]
        return matrices.permutation(perm)
    return matrices.random_unitary(size, args.seed)


def cmd_gen(args):
    if args.kind != "weighing43" and args.size is None and not (args.kind == "permutation" and args.perm):
        raise UsageError("--size is required")
    if args.size is not None and args.size > 64:
        raise CapacityError("order exceeds 64")
    try:
        m = _gen_matrix(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.emit == "digraph":
        sys.stdout.write(format_graph(matrices.digraph_of_matrix(m, args.tol)))
    else:
        sys.stdout.write(format_matrix(m))
    return EXIT_OK


def cmd_verify(args):
    try:
        space = EnumSpace(args.n, loops=args.loops, mode=args.mode)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.sample is not None:
        report = sample_verify(space, args.sample, args.seed, threads=args.threads, cross_check=args.cross_check)
    else:
        report = verify_conjecture(space, threads=args.threads, cross_check=args.cross_check)
    text = report.to_json()
    print(text)
    if args.cross_check and args.mode == DIGRAPH:
        print(
            f"cross-check: cycle factors {report.cross_factor}/{report.squad}, "
            f"max semi-degree <= 3 solved constructively {report.cross_theorem23}/{report.cross_delta3}",
            file=sys.stderr,
        )
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text + "\n")
    return EXIT_OK if report.holds else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="squad", description="s-quadrangular digraphs and Hamilton cycles")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file")
        sp.add_argument("--tol", type=float, default=matrices.DEFAULT_TOL,
                        help="nonzero threshold for matrix files")
        return sp

    with_file("check", "structural predicates").set_defaults(func=cmd_check)
    with_file("factor", "cycle factor / 2-factor or an obstruction").set_defaults(func=cmd_factor)
    sp = with_file("hamilton", "find a Hamilton cycle")
    sp.add_argument("--method", choices=["exact", "theorem23"], default="exact")
    sp.set_defaults(func=cmd_hamilton)
    with_file("partition", "obstruction partition of a 2-factor-free graph").set_defaults(func=cmd_partition)

    sp = sub.add_parser("gen", help="generate a matrix or its digraph")
    sp.add_argument("--kind", required=True, choices=["dft", "sylvester", "weighing43", "permutation", "random"])
    sp.add_argument("--size", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--perm", help="comma-separated images, e.g. 1,2,0")
    sp.add_argument("--emit", choices=["matrix", "digraph"], default="matrix")
    sp.add_argument("--tol", type=float, default=matrices.DEFAULT_TOL)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="exhaustive or sampled conjecture check")
    sp.add_argument("--mode", choices=["digraph", "graph"], default="digraph")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--loops", action="store_true")
    sp.add_argument("--sample", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--json", metavar="PATH")
    sp.add_argument("--cross-check", action="store_true",
                    help="also run the cycle-factor and max-semi-degree-3 constructions")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
