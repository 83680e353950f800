"""Command line interface. Every command prints a newline-terminated JSON or DOT document.

Exit codes: 0 success or accepted, 3 rejected verdict (or failing verify run),
4 invalid input, 5 enumeration budget exceeded, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .algebra import Algebra, Chain
from .characterize import DEFAULT_BUDGET, brute_force_pair_oracle, is_fuzzy_rough_pair
from .errors import BudgetExceeded, FuzzyRoughError, ValidationError
from .induced import factor_poset, factor_poset_to_dot, quasiorder_R, quasiorder_rho, quasiorder_to_dot
from .ingest import IngestionConfig, ingest_similarity, read_csv
from .lattice import check_properties, diagram_document, diagram_dot, enumerate_lattice, frs_of, join, meet
from .space import ApproximationSpace
from .verify import ALGEBRAS, VerifyConfig, run

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_REJECTED, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3, 4, 5


def _emit(text: str, out: str | None) -> None:
    if out:
        io.write_text(out, text)
    else:
        sys.stdout.write(text)


def _space(args) -> ApproximationSpace:
    return io.parse_space(io.load_json(args.space))


def _set(space, path):
    return io.parse_fuzzy_set(space, io.load_json(path))


def cmd_approx(args) -> int:
    space = _space(args)
    f = _set(space, args.set)
    space.check_in_chain(f)
    doc = {"lower": space.lower(f).as_dict(), "upper": space.upper(f).as_dict()}
    _emit(io.dumps(doc), args.out)
    return EXIT_OK


def _poset_doc(q, poset) -> dict:
    part = poset.partition
    return {
        "pairs": [list(p) for p in q.pairs()],
        "classes": [list(part.names(k)) for k in range(len(part.classes))],
        "maximal": [list(part.names(k)) for k in poset.maximal],
        "covers": [[list(part.names(a)), list(part.names(b))] for a, b in poset.covers],
    }


def cmd_classes(args) -> int:
    space = _space(args)
    if (args.upper is None) == (args.lower is None):
        raise ValidationError("give exactly one of --upper or --lower")
    if args.upper is not None:
        q = quasiorder_R(space, _set(space, args.upper))
        name = "R"
    else:
        q = quasiorder_rho(space, _set(space, args.lower))
        name = "rho"
    poset = factor_poset(q)
    if args.format == "dot":
        text = quasiorder_to_dot(q, name) + factor_poset_to_dot(poset, f"{name}_classes")
    else:
        text = io.dumps({"relation": name, **_poset_doc(q, poset)})
    _emit(text, args.out)
    return EXIT_OK


def cmd_check_pair(args) -> int:
    space = _space(args)
    F = _set(space, args.upper)
    G = _set(space, args.lower)
    verdict = is_fuzzy_rough_pair(space, F, G)
    doc = verdict.to_dict()
    if args.oracle:
        found = brute_force_pair_oracle(space, F, G, budget=args.budget)
        doc["oracle"] = {"found": found is not None}
        if found is not None:
            doc["oracle"]["witness"] = found.as_dict()
    if verdict.accepted and args.witness_out:
        io.write_text(args.witness_out, io.dumps(io.emit_fuzzy_set(verdict.witness)))
    sys.stdout.write(io.dumps(doc))
    return EXIT_OK if verdict.accepted else EXIT_REJECTED


def _pairs(space, args):
    pairs = [io.parse_pair(space, io.load_json(p)) for p in args.pairs or []]
    pairs += [frs_of(space, _set(space, p)) for p in args.sets or []]
    if not pairs:
        raise ValidationError("give at least one --pairs or --sets document")
    return pairs


def cmd_meet(args) -> int:
    space = _space(args)
    _emit(io.dumps(meet(space, _pairs(space, args)).to_dict()), args.out)
    return EXIT_OK


def cmd_join(args) -> int:
    space = _space(args)
    _emit(io.dumps(join(space, _pairs(space, args)).to_dict()), args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    space = _space(args)
    diagram = enumerate_lattice(space, budget=args.budget)
    doc = diagram_document(diagram)
    if args.properties:
        doc["properties"] = check_properties(space, diagram).to_dict(diagram)
    _emit(io.dumps(doc), args.out)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    doc = io.load_json(args.diagram)
    if not isinstance(doc, dict) or "elements" not in doc or "covers" not in doc:
        raise ValidationError("not a diagram document")
    _emit(diagram_dot(doc), args.out)
    return EXIT_OK


def cmd_ingest(args) -> int:
    text = Path(args.csv).read_text(encoding="utf-8")
    chain = Chain.of(*[c.strip() for c in args.chain.split(",")]) if args.chain else None
    columns = tuple(c.strip() for c in args.columns.split(",")) if args.columns else None
    config = IngestionConfig(columns=columns, id_column=args.id_column, chain=chain)
    rel = ingest_similarity(read_csv(text), config)
    algebra = Algebra.from_descriptor({"negator": args.negator} if chain else {}, chain)
    space = ApproximationSpace(rel.universe, rel, algebra, chain)
    _emit(io.dumps(io.emit_space(space)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    config = VerifyConfig(
        seed=args.seed,
        samples=args.samples,
        max_universe=args.max_universe,
        max_chain=args.max_chain,
        symmetric=not args.no_symmetry,
        algebra=args.algebra,
    )
    result = run(config)
    _emit(io.dumps(result), args.out)
    return EXIT_OK if result["failures"] == 0 else EXIT_REJECTED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fuzzyrough", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_space(p):
        p.add_argument("--space", required=True, help="space document (JSON)")
        p.add_argument("--out", help="write the result here instead of standard output")
        return p

    p = with_space(sub.add_parser("approx", help="lower and upper approximation of a fuzzy set"))
    p.add_argument("--set", required=True)
    p.set_defaults(func=cmd_approx)

    p = with_space(sub.add_parser("classes", help="induced quasiorder, its classes and maximal classes"))
    p.add_argument("--upper", help="upper approximation image F")
    p.add_argument("--lower", help="lower approximation image G")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("check-pair", help="decide whether (lower, upper) is a fuzzy rough pair")
    p.add_argument("--space", required=True)
    p.add_argument("--upper", required=True)
    p.add_argument("--lower", required=True)
    p.add_argument("--witness-out")
    p.add_argument("--oracle", action="store_true", help="also run the exhaustive search")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_check_pair)

    for name, func in (("meet", cmd_meet), ("join", cmd_join)):
        p = with_space(sub.add_parser(name, help=f"{name} of fuzzy rough pairs"))
        p.add_argument("--pairs", nargs="+", help="pair documents with witnesses")
        p.add_argument("--sets", nargs="+", help="reference sets; their pairs are used")
        p.set_defaults(func=func)

    p = with_space(sub.add_parser("enumerate", help="all fuzzy rough pairs of a chain-mode space"))
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--properties", action="store_true", help="add lattice property checks")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("export-dot", help="Hasse diagram of an enumerated lattice in DOT")
    p.add_argument("--diagram", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("ingest", help="similarity space from a CSV table")
    p.add_argument("--csv", required=True)
    p.add_argument("--chain", help="comma-separated chain, e.g. 0,1/4,1/2,3/4,1")
    p.add_argument("--columns", help="comma-separated numeric columns (default: all)")
    p.add_argument("--id-column", help="column holding element names")
    p.add_argument("--negator", default="reversal", choices=("reversal", "standard"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("verify", help="randomized invariant checks")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--max-universe", type=int, default=5)
    p.add_argument("--max-chain", type=int, default=5)
    p.add_argument("--algebra", choices=ALGEBRAS, default="kd")
    p.add_argument("--no-symmetry", action="store_true", help="generate non-symmetric relations")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValidationError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (FuzzyRoughError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
