"""Command-line interface: ``clustervd <verb> ...``.

Exit codes: 0 positive answer, 1 negative answer or infinite value,
2 usage, parse or input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import generators
from .cotree import (build_cotree, expand, parse_cotree, random_binary_cotree,
                     serialize_cotree, strip_comments)
from .dp import solve as dp_solve
from .errors import ClusterVDError, NotACographError
from .graph import PatternWitness, format_graph, parse_graph
from .oracle import brute_min, branch_cvd, verify
from .reductions import (Side, amplify, cvd_to_ccvd, dichotomy_classify, subdivide3,
                         vc_to_cvd_dense)
from .solution import SCHEMA, Variant

EXIT_YES, EXIT_NO, EXIT_USAGE = 0, 1, 2

CLI_VARIANTS = ["cvd", "ccvd", "clique", "cclique", "covc"]


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def load_instance(path: str):
    """Return (graph, cotree-or-None).  A file whose first significant
    character is '(' or that holds a single integer is read as a cotree."""
    text = _read_text(path)
    body = strip_comments(text).strip()
    if body.startswith("(") or (body.isdigit() and len(body.split()) == 1):
        t = parse_cotree(body)
        return expand(t), t
    return parse_graph(text), None


def _emit(obj, out=None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=False)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _witness_json(w):
    if w is None:
        return None
    if isinstance(w, PatternWitness):
        return {"kind": w.kind.value, "vertices": list(w.vertices)}
    return [list(x) if isinstance(x, tuple) else x for x in w]


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def cmd_recognize(args) -> int:
    g, t = load_instance(args.graph)
    result = t if t is not None else build_cotree(g)
    if isinstance(result, PatternWitness):
        print("not a cograph; induced P4: " + " ".join(map(str, result.vertices)))
        return EXIT_NO
    text = serialize_cotree(result) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_YES


def cmd_solve(args) -> int:
    if args.method == "branch":
        if args.budget is None or args.variant != "cvd":
            raise UsageError("--method branch needs --budget and --variant cvd")
        if args.weighted:
            raise UsageError("--method branch is unweighted")
    elif args.budget is not None:
        raise UsageError("--budget only applies to --method branch")
    g, t = load_instance(args.graph)
    variant = Variant(args.variant)

    if args.method == "branch":
        found = branch_cvd(g, args.budget, force=args.force)
        _emit({"schema": SCHEMA, "variant": "cvd", "method": "branch", "budget": args.budget,
               "answer": "yes" if found is not None else "no",
               "set": None if found is None else sorted(found)})
        return EXIT_YES if found is not None else EXIT_NO

    if args.method == "cotree":
        source = t if t is not None else g
        try:
            sol = dp_solve(source, variant, weighted=args.weighted, weights=g.weights)
        except NotACographError as exc:
            raise UsageError(f"--method cotree needs a cograph; induced P4: "
                             + " ".join(map(str, exc.witness.vertices))) from None
    else:
        sol = brute_min(g, variant, weights=True if args.weighted else None, force=args.force)
    _emit(sol.to_json())
    return EXIT_YES if sol.finite else EXIT_NO


def _parse_set(text: str) -> list[int]:
    tokens = text.replace(",", " ").split()
    try:
        return [int(x) for x in tokens]
    except ValueError:
        raise UsageError(f"--set must list integers, got {text!r}") from None


def cmd_verify(args) -> int:
    g, _ = load_instance(args.graph)
    if args.set is not None:
        chosen = _parse_set(args.set)
    else:
        data = json.loads(_read_text(args.solution))
        chosen = data.get("set") or []
    try:
        verdict = verify(g, chosen, Variant(args.variant))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit({"schema": SCHEMA, "variant": args.variant, "accept": verdict.ok,
           "reason": verdict.reason or None, "witness": _witness_json(verdict.witness)})
    return EXIT_YES if verdict.ok else EXIT_NO


def cmd_classify(args) -> int:
    g, _ = load_instance(args.graph)
    verdict = dichotomy_classify(g)
    _emit(verdict.to_json())
    return EXIT_YES if verdict.side is Side.POLYNOMIAL else EXIT_NO


def cmd_reduce(args) -> int:
    if args.kind == "amplify" and args.t is None:
        raise UsageError("--kind amplify needs --t")
    if args.kind == "ccvd-gadget" and args.girth is None:
        raise UsageError("--kind ccvd-gadget needs --girth")
    g, _ = load_instance(args.graph)
    if args.kind == "dense":
        ri = vc_to_cvd_dense(g, args.k)
    elif args.kind == "subdiv3":
        ri = subdivide3(g, args.k)
    elif args.kind == "amplify":
        ri = amplify(g, args.k, args.t)
    else:
        ri = cvd_to_ccvd(g, args.k, args.girth)
    header = [f"clustervd reduce --kind {args.kind} --k {args.k}", f"k' = {ri.k_prime}"]
    text = format_graph(ri.produced, header)
    sidecar_path = args.sidecar or (args.output + ".json" if args.output else None)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if sidecar_path:
        _emit(ri.sidecar(), sidecar_path)
    return EXIT_YES


def cmd_gen(args) -> int:
    need = {"random-cograph": ["n"], "gnp": ["n", "p"], "path": ["n"], "cycle": ["n"],
            "grid": ["rows", "cols"]}[args.kind]
    missing = [f"--{x}" for x in need if getattr(args, x) is None]
    if missing:
        raise UsageError(f"--kind {args.kind} needs " + ", ".join(missing))
    if args.n is not None and args.n < (3 if args.kind == "cycle" else 1):
        raise UsageError("--n is too small for this kind")
    seed = args.seed
    header = [f"clustervd gen --kind {args.kind} "
              + " ".join(f"--{x} {getattr(args, x)}" for x in need) + f" --seed {seed}"]
    cotree = None
    if args.kind == "random-cograph":
        t = random_binary_cotree(args.n, random.Random(seed))
        g = expand(t)
        cotree = serialize_cotree(t)
    elif args.kind == "gnp":
        if not 0.0 <= args.p <= 1.0:
            raise UsageError("--p must lie in [0, 1]")
        g = generators.gnp_graph(args.n, args.p, seed)
    elif args.kind == "path":
        g = generators.path_graph(args.n)
    elif args.kind == "cycle":
        g = generators.cycle_graph(args.n)
    else:
        if args.rows < 1 or args.cols < 1:
            raise UsageError("--rows and --cols must be positive")
        g = generators.grid_graph(args.rows, args.cols)
    text = format_graph(g, header)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if cotree is not None:
        path = args.cotree_output or (args.output + ".cotree" if args.output else None)
        if path:
            with open(path, "w") as fh:
                fh.write(f"# {header[0]}\n{cotree}\n")
    return EXIT_YES


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clustervd", description="Cluster vertex deletion toolkit.")
    sub = p.add_subparsers(dest="verb", required=True)

    r = sub.add_parser("recognize", help="build a cotree or report an induced P4")
    r.add_argument("graph")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_recognize)

    s = sub.add_parser("solve", help="solve a deletion variant")
    s.add_argument("graph", help="graph or cotree file")
    s.add_argument("--variant", choices=CLI_VARIANTS, default="cvd")
    s.add_argument("--method", choices=["cotree", "brute", "branch"], default="cotree")
    s.add_argument("--weighted", action="store_true", help="use the weights line of the graph file")
    s.add_argument("--budget", type=int)
    s.add_argument("--force", action="store_true", help="lift the oracle size guards")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a deletion set")
    v.add_argument("graph")
    v.add_argument("--variant", choices=CLI_VARIANTS + ["vc"], default="cvd")
    group = v.add_mutually_exclusive_group(required=True)
    group.add_argument("--set", help="vertex ids, comma or space separated")
    group.add_argument("--solution", help="JSON solution file")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="dichotomy side of an H-free restriction")
    c.add_argument("graph")
    c.set_defaults(func=cmd_classify)

    d = sub.add_parser("reduce", help="generate a reduced instance")
    d.add_argument("graph")
    d.add_argument("--kind", choices=["dense", "subdiv3", "amplify", "ccvd-gadget"], required=True)
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--t", type=int)
    d.add_argument("--girth", type=int)
    d.add_argument("-o", "--output")
    d.add_argument("--sidecar", help="JSON sidecar path (default: OUTPUT.json)")
    d.set_defaults(func=cmd_reduce)

    gn = sub.add_parser("gen", help="generate a graph")
    gn.add_argument("--kind", choices=["random-cograph", "gnp", "path", "cycle", "grid"], required=True)
    gn.add_argument("--n", type=int)
    gn.add_argument("--p", type=float)
    gn.add_argument("--rows", type=int)
    gn.add_argument("--cols", type=int)
    gn.add_argument("--seed", type=int, default=0)
    gn.add_argument("-o", "--output")
    gn.add_argument("--cotree-output")
    gn.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "k", None) is not None and args.k < 0:
            parser.error("--k must be non-negative")
        if getattr(args, "budget", None) is not None and args.budget < 0:
            parser.error("--budget must be non-negative")
    except SystemExit as exc:  # argparse reports usage errors this way
        return EXIT_USAGE if exc.code else EXIT_YES
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"clustervd: {exc}", file=sys.stderr)
    except (ClusterVDError, ValueError, OSError) as exc:
        print(f"clustervd: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
