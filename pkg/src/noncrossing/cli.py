"""Command line front end: ``nc lattice|hurwitz|embed|verify-all``.

Exit codes: 0 success, 1 usage error, 2 budget exceeded, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb

from .building import building_chamber_graph, building_dot, field_of, nc_apartment_check, verify_embedding
from .coxeter import CoxeterSpec
from .errors import IntegrityError, ResourceError, UsageError
from .hurwitz import build_hurwitz_graph, metrics, metrics_report, to_dot
from .lattice import build_nc, is_supersolvable, maximal_chains
from .verify import run_all

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_FAILED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _spec(args) -> CoxeterSpec:
    if args.family is None or args.degree is None:
        raise UsageError("--family and --degree are required")
    return CoxeterSpec.A(args.degree) if args.family == "A" else CoxeterSpec.B(args.degree)


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def cmd_lattice(args) -> int:
    spec = _spec(args)
    L = build_nc(spec, max_degree=args.budget)
    ok, chain = is_supersolvable(L)
    report = {
        "schema_version": 1,
        "spec": str(spec),
        "element_count": len(L),
        "maximal_chain_count": len(maximal_chains(L)),
        "supersolvable": ok,
        "witness_chain": None if chain is None else [str(L.elements[x]) for x in chain],
        "lattice": L.to_json(),
    }
    _emit(args, _json(report))
    return EXIT_OK


def cmd_hurwitz(args) -> int:
    spec = _spec(args)
    L = build_nc(spec)
    G = build_hurwitz_graph(spec, L, max_chains=args.budget)
    if args.format == "dot":
        _emit(args, to_dot(G, f"H_{spec}"))
        return EXIT_OK
    report = metrics_report(G, metrics(G))
    bound = comb(spec.rank(), 2)
    report["radius_lower_bound"] = bound
    report["bound_holds"] = report["radius"] >= bound
    _emit(args, _json(report))
    return EXIT_OK if report["bound_holds"] else EXIT_FAILED


def cmd_embed(args) -> int:
    if args.building:
        if args.p is None or args.dim is None:
            raise UsageError("--building needs --p and --dim")
        G = building_chamber_graph(args.p, args.dim)
        if args.format == "dot":
            _emit(args, building_dot(G, f"L_F{args.p}_{args.dim}"))
            return EXIT_OK
        m = metrics(G)
        expected = comb(args.dim, 2)
        report = {
            "schema_version": 1,
            "building": f"L(F_{args.p}^{args.dim})",
            "chamber_count": len(G),
            "edge_count": G.edge_count,
            "radius": m.radius,
            "diameter": m.diameter,
            "expected_diameter": expected,
        }
        _emit(args, _json(report))
        return EXIT_OK if m.diameter == expected == m.radius else EXIT_FAILED
    spec = _spec(args)
    p, _ = field_of(spec)
    if args.p is not None and args.p != p:
        raise UsageError(f"{spec} embeds over F_{p}, not F_{args.p}")
    L = build_nc(spec)
    report = verify_embedding(L).to_json()
    report["schema_version"] = 1
    report["apartments_contain_chambers"] = nc_apartment_check(L)
    _emit(args, _json(report))
    return EXIT_OK if report["apartments_contain_chambers"] else EXIT_FAILED


def cmd_verify_all(args) -> int:
    report = run_all(only=args.only, stable=args.stable, fault=args.inject_fault)
    _emit(args, _json(report))
    return EXIT_OK if report["failed"] == 0 else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nc", description="Non-crossing partition lattices, Hurwitz graphs and buildings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--family", choices=["A", "B"])
        p.add_argument("--degree", type=int)
        p.add_argument("--format", choices=["json", "dot"], default="json")
        p.add_argument("--out", metavar="PATH")
        p.add_argument("--budget", type=int, help="override the enumeration cap of this command")
        return p

    lat = common(sub.add_parser("lattice", help="build NC(W, c) and test supersolvability"))
    lat.set_defaults(run=cmd_lattice)
    hur = common(sub.add_parser("hurwitz", help="Hurwitz graph metrics or DOT export"))
    hur.set_defaults(run=cmd_hurwitz)
    emb = common(sub.add_parser("embed", help="check the embedding into the subspace building"))
    emb.add_argument("--building", action="store_true", help="chamber graph of L(F_p^dim) instead")
    emb.add_argument("--p", type=int, choices=[2, 3])
    emb.add_argument("--dim", type=int)
    emb.set_defaults(run=cmd_embed)
    ver = sub.add_parser("verify-all", help="run the acceptance claims")
    ver.add_argument("--only", metavar="CLAIM_ID", help="claim number or substring of its id")
    ver.add_argument("--stable", action="store_true", help="omit timings for byte-identical output")
    ver.add_argument("--inject-fault", action="store_true", help="corrupt a join table to test the failure path")
    ver.add_argument("--out", metavar="PATH")
    ver.set_defaults(run=cmd_verify_all)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.run(args)
    except UsageError as exc:
        print(f"nc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"nc: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except IntegrityError as exc:
        print(f"nc: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
