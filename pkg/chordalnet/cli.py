"""Command-line interface for chordalnet.

Usage:
    chordalnet tri data/coloring9.sys --squarefree --out net.txt   (dump to stdout without --out)
    chordalnet count net.txt
    chordalnet sample net.txt -k 3 --seed 7 --check data/coloring9.sys
    chordalnet member net.txt h.poly --trials 20
    chordalnet dim | top | census | isolate -d D | components | export-dot

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import os
import random
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import networkx as nx

from .chordal import complete_with_order, relabel_system, suggest_order, support_graph
from .errors import ChordalNetError, ParseError
from .network import ChordalNetwork, TriangulateOptions, chordal_triangularize
from .queries import (
    MemberOptions,
    dim_census,
    dimension,
    isolate_dim,
    minimal_primes,
    radical_member,
    sample,
    top_component,
    zero_count,
)
from .ring import Poly, evaluate, format_poly, parse_poly
from .store import Problem, dump_network, export_dot, parse_collapse, parse_problem, read_network, write_network
from .utils.env import default_gb_budget, default_seed, load_env_defaults

log = logging.getLogger("chordalnet")


def _configure_logging(verbosity: int) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, os.environ.get("CHORDALNET_LOG_LEVEL", "WARNING").upper(), logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def _resolve_order(spec: Optional[str], problem: Problem, g: nx.Graph) -> List[int]:
    """``natural``, ``mindeg``, ``file:<path>`` or an explicit ``i0,i1,...``; the file's directive otherwise."""
    n = problem.ring.n
    if spec is None:
        return list(problem.order) if problem.order else list(range(n))
    if spec == "natural":
        return list(range(n))
    if spec == "mindeg":
        return suggest_order(g)
    text = Path(spec[5:]).read_text(encoding="utf-8") if spec.startswith("file:") else spec
    try:
        order = [int(t) for t in text.replace(",", " ").split()]
    except ValueError as e:
        raise ParseError(f"bad --order value {spec!r}") from e
    if sorted(order) != list(range(n)):
        raise ParseError(f"--order must list each of 0..{n - 1} exactly once")
    return order


def _summary(net: ChordalNetwork) -> str:
    return f"ranks={net.n} nodes={net.node_count()} width={net.width()} chains={net.chain_count()}"


def _emit_network(net: ChordalNetwork, out: Optional[str]) -> None:
    if out:
        write_network(net, out)
        print(f"Wrote network to {out}", file=sys.stderr)
    else:
        sys.stdout.write(dump_network(net))


def _seed(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else default_seed()
    if seed is None:
        seed = random.SystemRandom().randrange(2**32)
        log.warning("no seed given; drew %d from entropy", seed)
    print(f"seed: {seed}", file=sys.stderr)
    return seed


def _read_poly(path: str, net: ChordalNetwork) -> Poly:
    lines = [ln for ln in Path(path).read_text(encoding="utf-8").splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError(f"no polynomial in {path}")
    h = parse_poly(" ".join(lines), net.ring)
    return relabel_system([h], net.cs.order, net.ring)[0]


def cmd_tri(args: argparse.Namespace) -> int:
    problem = parse_problem(args.file, prime=args.prime)
    g = support_graph(problem.polys, problem.ring.n)
    order = _resolve_order(args.order, problem, g)
    cs = complete_with_order(g, order)
    F = relabel_system(problem.polys, order, problem.ring)
    opts = TriangulateOptions(
        mode=args.mode,
        squarefree=args.squarefree,
        strip=args.strip,
        gb_budget=args.gb_budget or default_gb_budget(),
        progress=args.progress,
    )
    net = chordal_triangularize(F, cs, opts, ring=problem.ring)
    print(_summary(net), file=sys.stderr)
    _emit_network(net, args.out)
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    print(zero_count(read_network(args.net)))
    return 0


def cmd_sample(args: argparse.Namespace) -> int:
    net = read_network(args.net)
    rng = random.Random(_seed(args))
    check: Optional[List[Poly]] = None
    if args.check:
        check = parse_problem(args.check, prime=net.ring.p).polys
    for _ in range(args.k):
        point = sample(net, rng=rng)
        if check is not None:
            bad = [f for f in check if evaluate(f, point)]
            if bad:
                raise ChordalNetError(f"sampled point does not satisfy {format_poly(bad[0])}")
        print(",".join(str(x) for x in point))
    return 0


def cmd_member(args: argparse.Namespace) -> int:
    net = read_network(args.net)
    h = _read_poly(args.polyfile, net)
    ok = radical_member(net, h, MemberOptions(trials=args.trials, seed=_seed(args)))
    print(f"vanishes: {'true' if ok else 'false'}")
    return 0


def cmd_dim(args: argparse.Namespace) -> int:
    print(dimension(read_network(args.net)))
    return 0


def cmd_top(args: argparse.Namespace) -> int:
    top = top_component(read_network(args.net))
    print(_summary(top), file=sys.stderr)
    _emit_network(top, args.out)
    return 0


def cmd_census(args: argparse.Namespace) -> int:
    for d, k in dim_census(read_network(args.net)).items():
        print(f"{d}: {k}")
    return 0


def cmd_isolate(args: argparse.Namespace) -> int:
    net = read_network(args.net)
    for chain in isolate_dim(net, args.d):
        eqs, ineqs = net.chain_polys(chain)
        s = "(" + ", ".join(format_poly(f) for f in eqs) + ")"
        if ineqs:
            s += " / " + ", ".join(format_poly(h) for h in ineqs)
        print(s)
    return 0


def cmd_components(args: argparse.Namespace) -> int:
    net = read_network(args.net)
    for basis in minimal_primes(net, max_count=args.max, min_dim=args.min_dim):
        print("; ".join(format_poly(g) for g in basis))
    return 0


def cmd_export_dot(args: argparse.Namespace) -> int:
    text = export_dot(read_network(args.net), parse_collapse(args.collapse))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chordalnet", description="Chordal networks of polynomial systems over GF(p)")
    p.add_argument("-v", "--verbose", action="count", default=0, help="INFO with -v, DEBUG with -vv")
    sub = p.add_subparsers(dest="cmd", metavar="command")

    sp = sub.add_parser("tri", help="Chordal triangularization of a problem file")
    sp.add_argument("file")
    sp.add_argument("--mode", choices=("auto", "zerodim", "monomial", "binomial"), default="auto")
    sp.add_argument("--squarefree", action="store_true")
    sp.add_argument("--order", default=None, help="natural, mindeg, file:<path> or i0,i1,...")
    sp.add_argument("--out", default=None, help="Write the network dump here")
    sp.add_argument("--prime", type=int, default=None, help="Override the file's modulus")
    sp.add_argument("--strip", action="store_true", help="Drop inequations at the end (binomial mode)")
    sp.add_argument("--progress", action="store_true", help="Show a progress bar (needs tqdm)")
    sp.add_argument("--gb-budget", type=int, default=None, help="S-pair budget per Gröbner basis")
    sp.set_defaults(func=cmd_tri)

    sp = sub.add_parser("count", help="Number of solutions")
    sp.add_argument("net")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("sample", help="Uniform GF(p) solutions")
    sp.add_argument("net")
    sp.add_argument("-k", type=int, default=1)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--check", default=None, help="Problem file to evaluate the points on")
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("member", help="Does a polynomial vanish on the variety?")
    sp.add_argument("net")
    sp.add_argument("polyfile")
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--seed", type=int, default=None)
    sp.set_defaults(func=cmd_member)

    sp = sub.add_parser("dim", help="Dimension of the variety")
    sp.add_argument("net")
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("top", help="Top-dimensional part of the network")
    sp.add_argument("net")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_top)

    sp = sub.add_parser("census", help="Chain count per dimension")
    sp.add_argument("net")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("isolate", help="Chains of one dimension")
    sp.add_argument("net")
    sp.add_argument("-d", type=int, required=True)
    sp.set_defaults(func=cmd_isolate)

    sp = sub.add_parser("components", help="Minimal primes, one Gröbner basis per line")
    sp.add_argument("net")
    sp.add_argument("--max", type=int, default=None)
    sp.add_argument("--min-dim", type=int, default=None)
    sp.set_defaults(func=cmd_components)

    sp = sub.add_parser("export-dot", help="Render the network as DOT")
    sp.add_argument("net")
    sp.add_argument("--collapse", default=None, help="Rank groups, e.g. '0,1;2,3'")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_export_dot)

    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_env_defaults()
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    if not getattr(args, "cmd", None):
        parser.print_help()
        return 2
    try:
        return int(args.func(args) or 0)
    except ChordalNetError as e:
        where = f" (rank {e.rank})" if e.rank is not None else ""
        print(f"error{where}: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (OSError, ImportError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
