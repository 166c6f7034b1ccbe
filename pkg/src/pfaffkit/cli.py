"""Command-line interface.

    pfaffkit verify <id> [--n N] [--m M] [--r R] [--k K] [--shape P] ...
    pfaffkit pfaffian FILE
    pfaffkit young-basis --shape P
    pfaffkit tableaux --shape P

Exit codes: 0 pass, 1 fail, 2 parameter error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .exactpoly import format_poly, ratfn_to_json
from .pfaffian import AntisymmetricMatrix, pfaffian
from .specht import change_of_basis
from .tableaux import enumerate_syt, tableau_graph
from .verify import VERIFIERS, ParameterError


def _parse_shape(text: str) -> tuple[int, ...]:
    return tuple(int(p) for p in text.replace(",", " ").split())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pfaffkit")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify one identity family")
    v.add_argument("id", choices=sorted(VERIFIERS))
    v.add_argument("--n", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--r", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--p", type=int)
    v.add_argument("--shape", type=str)
    v.add_argument("--v", type=str, help="integer index vector, comma separated")
    v.add_argument("--which", type=str)
    v.add_argument("--producer", type=str, help="pair-family descriptor (name or JSON)")
    v.add_argument("--negative-control", action="store_true")
    v.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("pfaffian", help="Pfaffian of a matrix from a JSON file")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")

    y = sub.add_parser("young-basis", help="orthogonal basis over the tableau basis")
    y.add_argument("--shape", required=True)
    y.add_argument("--format", choices=("text", "json"), default="json")

    t = sub.add_parser("tableaux", help="standard tableaux and graph of a shape")
    t.add_argument("--shape", required=True)
    t.add_argument("--format", choices=("text", "json"), default="json")
    return parser


def _verify_kwargs(args) -> dict:
    kwargs = {}
    if args.n is not None:
        kwargs["n"] = args.n
    if args.m is not None:
        kwargs["m"] = args.m
    if args.r is not None:
        kwargs["r"] = args.r
    if args.k is not None:
        kwargs["k"] = args.k
    if args.p is not None:
        kwargs["p"] = args.p
    if args.v is not None:
        kwargs["v"] = [int(s) for s in args.v.split(",")]
    if args.which is not None:
        kwargs["which"] = args.which
    if args.shape is not None:
        kwargs["shape"] = _parse_shape(args.shape)
    if args.negative_control:
        kwargs["negative_control"] = True
    if args.producer is not None:
        if args.id in ("pfaffzg", "det-symmetry"):
            kwargs["z_spec"] = args.producer
        elif args.id == "detaz":
            kwargs["a_spec"] = args.producer
        else:
            kwargs["producer"] = args.producer
    return kwargs


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            fn = VERIFIERS[args.id]
            report = fn(**_verify_kwargs(args))
            if args.format == "json":
                print(report.to_json())
            else:
                print(report.summary())
            return 0 if report.verdict else 1

        if args.command == "pfaffian":
            with open(args.file) as fh:
                data = json.load(fh)
            result = pfaffian(AntisymmetricMatrix.from_json(data))
            if args.format == "json":
                print(json.dumps(ratfn_to_json(result), sort_keys=True))
            else:
                if result.den.is_one:
                    print(format_poly(result.num))
                else:
                    print(f"({format_poly(result.num)}) / ({format_poly(result.den)})")
            return 0

        if args.command == "young-basis":
            cb = change_of_basis(_parse_shape(args.shape))
            if args.format == "json":
                print(json.dumps(cb.to_json(), sort_keys=True))
            else:
                for t, row in zip(cb.order, cb.entries):
                    print(t, [str(c) for c in row])
            return 0

        if args.command == "tableaux":
            shape = _parse_shape(args.shape)
            graph = tableau_graph(shape)
            if args.format == "json":
                out = {
                    "shape": list(shape),
                    "count": len(graph.tableaux),
                    "tableaux": [t.to_json() for t in graph.tableaux],
                    "ranks": [graph.rank[t] for t in graph.tableaux],
                    "edges": [
                        {"from": e.src.to_json(), "i": e.i, "rho": e.rho, "to": e.dst.to_json()}
                        for e in graph.edges
                    ],
                }
                print(json.dumps(out, sort_keys=True))
            else:
                for t in graph.tableaux:
                    print(f"rank {graph.rank[t]}: {t}")
                for e in graph.edges:
                    print(f"  {e.src} --s_{e.i}+1/({e.rho})--> {e.dst}")
            return 0
    except ParameterError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
