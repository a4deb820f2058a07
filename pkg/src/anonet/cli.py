"""Batch front-end: generate graphs, analyze symmetry, run elections, verify.

Subcommands:
  generate <family> <params...> [--seed S] [-o FILE]
  analyze FILE [--csv]
  elect FILE <algorithm> [--n N] [--D D] [--round-cap C] [-o FILE]
  verify <suite>
  bench [--max-k K]

Families: q K | qtilde K | r D LAM | t K | m K | g K | gprime K |
          small CASE D LAM | cycle M | tadpole D | random N DENSITY
"""

from __future__ import annotations

import argparse
import sys

from . import families
from .election import ALGORITHMS, KNOWLEDGE_NEEDS, verify_outcome
from .graph import diameter, load_graph, save_graph, serialize_graph
from .sim import Knowledge, run_sync
from .suites import SUITES, run_suite
from .views import full_partition, level_of_symmetry, stabilization_depth

_FAMILIES = {
    "q": (families.symmetric_clique, 1),
    "qtilde": (families.twin_clique, 1),
    "r": (families.clique_necklace, 2),
    "t": (families.spiked_torus, 1),
    "m": (families.twisted_tori, 1),
    "g": (families.uniform_chorded_ring, 1),
    "gprime": (families.pendant_chorded_ring, 1),
    "small": (families.small_case, 3),
    "cycle": (families.uniform_cycle, 1),
    "tadpole": (families.tadpole, 1),
}


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="anonet",
        description="anonymous-network leader election workbench",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a graph family member to a file")
    gen.add_argument("family", choices=sorted(_FAMILIES) + ["random"])
    gen.add_argument("params", nargs="*", help="family parameters")
    gen.add_argument("--seed", type=int, default=0, help="seed for random graphs")
    gen.add_argument("-o", "--out", default=None, help="output file (default stdout)")

    ana = sub.add_parser("analyze", help="print symmetry parameters of a graph file")
    ana.add_argument("file")
    ana.add_argument("--csv", action="store_true", help="emit one CSV row")

    ele = sub.add_parser("elect", help="run a leader election and verify it")
    ele.add_argument("file")
    ele.add_argument("algorithm", choices=sorted(ALGORITHMS))
    ele.add_argument("--n", type=int, default=None, help="declared node count")
    ele.add_argument("--D", type=int, default=None, help="declared diameter")
    ele.add_argument("--round-cap", type=int, default=None)
    ele.add_argument("-o", "--out", default=None, help="transcript CSV file")

    ver = sub.add_parser("verify", help="run a named verification suite")
    ver.add_argument("suite", choices=sorted(SUITES))

    ben = sub.add_parser("bench", help="table of rounds vs bounds per family")
    ben.add_argument("--max-k", type=int, default=4)
    return parser


def _cmd_generate(args):
    if args.family == "random":
        if len(args.params) != 2:
            raise SystemExit("random needs: N DENSITY")
        g = families.random_port_graph(int(args.params[0]), float(args.params[1]), args.seed)
    else:
        builder, arity = _FAMILIES[args.family]
        if len(args.params) != arity:
            raise SystemExit(f"{args.family} needs {arity} parameter(s)")
        g = builder(*(int(tok) for tok in args.params))
    if args.out:
        save_graph(g, args.out)
    else:
        sys.stdout.write(serialize_graph(g))
    print(f"n={g.n} edges={len(g.edges)}", file=sys.stderr)
    return 0


def _cmd_analyze(args):
    g = load_graph(args.file)
    d = diameter(g)
    lam = level_of_symmetry(g)
    stable = stabilization_depth(g)
    pi = full_partition(g)
    solvable = pi.sigma == 1
    if args.csv:
        print("n,diameter,lambda,Lambda,sigma,classes,solvable")
        print(f"{g.n},{d},{lam},{stable},{pi.sigma},{len(pi)},{int(solvable)}")
    else:
        print(f"n         {g.n}")
        print(f"diameter  {d}")
        print(f"lambda    {lam}")
        print(f"Lambda    {stable}")
        print(f"sigma     {pi.sigma}")
        print(f"classes   {len(pi)}")
        print(f"solvable  {'yes' if solvable else 'no'}")
    return 0


def _cmd_elect(args):
    g = load_graph(args.file)
    needs = KNOWLEDGE_NEEDS[args.algorithm]
    if "n" in needs and args.n is None:
        raise SystemExit(f"{args.algorithm} requires --n")
    if "D" in needs and args.D is None:
        raise SystemExit(f"{args.algorithm} requires --D")
    knowledge = Knowledge(
        n=args.n if "n" in needs else None,
        D=args.D if "D" in needs else None,
    )
    try:
        transcript = run_sync(g, ALGORITHMS[args.algorithm], knowledge, args.round_cap)
    except ValueError as exc:
        raise SystemExit(f"knowledge mismatch: {exc}")
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(transcript.to_csv())
    report = verify_outcome(g, transcript)
    kinds = {d.kind for d in transcript.decisions if d}
    if kinds == {"impossible"}:
        verdict = "LE impossible"
    elif report.leader is not None:
        verdict = f"leader={report.leader}"
    else:
        verdict = "no outcome"
    status = "ok" if report.ok else "FAILED " + "; ".join(report.problems)
    print(f"{verdict} rounds={transcript.rounds} verification={status}")
    return 0 if report.ok else 1


def _cmd_verify(args):
    checks = run_suite(args.suite)
    for check in checks:
        print(check.line())
    failed = sum(1 for c in checks if not c.ok)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 0 if failed == 0 else 1


def _cmd_bench(args):
    from .election import elect as run_elect

    rows = []
    graphs = []
    for k in range(2, args.max_k + 1):
        graphs.append((f"q{k}", families.symmetric_clique(k)))
    for k in range(3, min(args.max_k, 6) + 1):
        graphs.append((f"t{k}", families.spiked_torus(k)))
    for k in (2, 3):
        if k <= args.max_k:
            graphs.append((f"gprime{k}", families.pendant_chorded_ring(k)))
    header = ("graph", "n", "D", "lambda", "Lambda", "algorithm", "rounds", "bound")
    print("{:<10}{:>5}{:>4}{:>8}{:>8}  {:<14}{:>7}{:>7}".format(*header))
    for name, g in graphs:
        d = diameter(g)
        lam = level_of_symmetry(g)
        stable = stabilization_depth(g)
        for alg in sorted(ALGORITHMS):
            tr = run_elect(g, alg)
            if alg == "sle-size":
                bound = 2 * g.n - 2
            elif alg == "wle-size":
                bound = d + stable + 2
            else:
                bound = d + stable + 1
            print(
                f"{name:<10}{g.n:>5}{d:>4}{lam:>8}{stable:>8}  "
                f"{alg:<14}{tr.rounds:>7}{bound:>7}"
            )
    return 0


def main(argv=None):
    args = _build_parser().parse_args(argv)
    handlers = {
        "generate": _cmd_generate,
        "analyze": _cmd_analyze,
        "elect": _cmd_elect,
        "verify": _cmd_verify,
        "bench": _cmd_bench,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
