"""Command-line surface: construct, build, validate, check, experiment.

Exit codes: 0 when the command succeeds and any checked property holds,
1 when a checked property fails or a design is invalid, 2 on usage or
parse errors.  Reports are line-oriented ``key: value`` text; ``--json``
switches a reporting command to one machine-parseable JSON document.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import builders, checker, designs, hypergraph, randomhg
from .designs import DesignError
from .galois import GaloisError, prime_power
from .hypergraph import HypergraphError

USAGE_ERROR = 2
PROPERTY_FAILED = 1


class _CliError(Exception):
    def __init__(self, message: str, code: int = USAGE_ERROR):
        super().__init__(message)
        self.code = code


def _read_hypergraph(path: str) -> hypergraph.Hypergraph:
    try:
        return hypergraph.read_hypergraph(path)
    except (OSError, HypergraphError) as exc:
        raise _CliError(f"cannot read hypergraph {path}: {exc}") from exc


def _read_design(path: str) -> designs.Design:
    try:
        return designs.read_design(path)
    except (OSError, DesignError) as exc:
        raise _CliError(f"cannot read design {path}: {exc}") from exc


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _format_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_vertices(text: str) -> list[int]:
    try:
        return [int(f) for f in text.replace(",", " ").split()]
    except ValueError:
        raise _CliError(f"expected integers, got {text!r}") from None


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_check(args) -> int:
    hg = _read_hypergraph(args.input)
    result = checker.is_nec(
        hg, args.n, engine=args.engine, threads=args.threads,
        record_witnesses=args.witnesses,
    )
    if args.json:
        doc = _result_doc(hg, result)
        if args.witnesses:
            doc["witnesses"] = [
                {"S": list(s), "T": list(t), "X": list(x)}
                for (s, t), x in sorted(result.witness_log.items())
            ]
        print(json.dumps(doc))
    else:
        sys.stdout.write(checker.format_report(hg, result))
        if args.witnesses:
            for (s, t), x in sorted(result.witness_log.items()):
                print(f"witness: S={_set(s)} T={_set(t)} X={_set(x)}")
    return 0 if result.holds else PROPERTY_FAILED


def _cmd_maxec(args) -> int:
    hg = _read_hypergraph(args.input)
    best = checker.max_ec(hg, engine=args.engine, threads=args.threads)
    failing = checker.is_nec(hg, best + 1, engine=args.engine, threads=args.threads)
    ce = failing.counterexample
    doc = {
        "max_ec": best,
        "h": hg.h,
        "m": hg.m,
        "edges": hg.edge_count,
        "failed_at_n": best + 1,
        "counterexample_S": list(ce[0]) if ce else None,
        "counterexample_T": list(ce[1]) if ce else None,
    }
    if args.json:
        print(json.dumps(doc))
    else:
        print(f"max_ec: {best}")
        print(f"h: {hg.h}")
        print(f"m: {hg.m}")
        print(f"edges: {hg.edge_count}")
        print(f"failed_at_n: {best + 1}")
        print(f"counterexample_S: {_set(ce[0]) if ce else '-'}")
        print(f"counterexample_T: {_set(ce[1]) if ce else '-'}")
    return 0


def _cmd_construct(args) -> int:
    kind = args.kind
    if kind == "fano":
        design = designs.fano()
        _write_artifact(args.out, designs.format_design(design, ["constructed: fano"]))
        print(f"written: {args.out} (2-(7,3,1), 7 blocks)")
        return 0
    q = args.q
    if q is None:
        raise _CliError(f"construct {kind} requires -q")
    if prime_power(q) is None:
        raise _CliError(f"q={q} is not a prime power")
    try:
        if kind == "mols":
            mols = designs.complete_mols(q)
            _write_artifact(args.out, designs.format_mols(mols, [f"constructed: complete mols q={q}"]))
            print(f"written: {args.out} ({mols.count} squares of order {q})")
        elif kind == "pg":
            design = designs.projective_plane(q)
            _write_artifact(args.out, designs.format_design(design, [f"constructed: pg q={q}"]))
            print(f"written: {args.out} (2-({design.v},{design.k},1), {design.b} blocks)")
        else:  # inversive
            design = designs.inversive_plane(q)
            _write_artifact(args.out, designs.format_design(design, [f"constructed: inversive q={q}"]))
            print(f"written: {args.out} (3-({design.v},{design.k},1), {design.b} blocks)")
    except (DesignError, GaloisError) as exc:
        raise _CliError(str(exc)) from exc
    return 0


def _write_artifact(out: str, text: str) -> None:
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)


def _cmd_build(args) -> int:
    try:
        if args.kind == "from-mols":
            mols = designs.read_mols(args.input)
            if args.h is not None and args.h != mols.order - 1:
                raise _CliError(f"from-mols fixes h = order-1 = {mols.order - 1}, got --h {args.h}")
            built = builders.build_from_mols(mols)
        else:
            if args.h is None:
                raise _CliError("build from-design requires --h")
            design = _read_design(args.input)
            built = builders.build_from_design(design, args.h)
    except (DesignError, OSError) as exc:
        raise _CliError(str(exc)) from exc
    hypergraph.write_hypergraph(args.out, built.hypergraph, [built.provenance])
    if args.json:
        print(json.dumps({
            "written": args.out,
            "raw_edges": built.raw_edges,
            "unique_edges": built.unique_edges,
            "guaranteed_ec": built.guaranteed_ec,
        }))
    else:
        print(f"written: {args.out}")
        print(f"raw_edges: {built.raw_edges}")
        print(f"unique_edges: {built.unique_edges}")
        print(f"guaranteed_ec: {built.guaranteed_ec if built.guaranteed_ec is not None else '-'}")
    return 0


def _cmd_random(args) -> int:
    if not 0.0 < args.p < 1.0:
        raise _CliError(f"p must lie in (0,1), got {args.p}")
    if args.trials < 1:
        raise _CliError(f"trials must be >= 1, got {args.trials}")
    try:
        model = randomhg.RandomModel(args.h, args.m, args.p, args.seed)
        bound_log = randomhg.union_bound_log(args.n, args.h, args.m, args.p)
    except randomhg.RandomModelError as exc:
        raise _CliError(str(exc)) from exc
    outcome = randomhg.estimate_ec_fraction(model, args.n, args.trials, threads=args.threads)
    doc = {
        "h": args.h,
        "m": args.m,
        "p": args.p,
        "n": args.n,
        "trials": args.trials,
        "seed": args.seed,
        "union_bound": randomhg.union_bound(args.n, args.h, args.m, args.p),
        "union_bound_log": bound_log,
        "fraction": outcome.fraction,
        "verdicts": list(outcome.verdicts),
    }
    if args.json:
        print(json.dumps(doc))
    else:
        for key in ("h", "m", "p", "n", "trials", "seed"):
            print(f"{key}: {doc[key]!r}" if key == "p" else f"{key}: {doc[key]}")
        print(f"union_bound: {doc['union_bound']!r}")
        print(f"union_bound_log: {doc['union_bound_log']!r}")
        print(f"fraction: {outcome.fraction!r}")
        for i, verdict in enumerate(outcome.verdicts):
            print(f"trial_{i}: {'true' if verdict else 'false'}")
    return 0


def _cmd_validate(args) -> int:
    design = _read_design(args.input)
    report = designs.validate_design(design)
    doc: dict = {
        "valid": report.valid,
        "t": design.t,
        "v": design.v,
        "k": design.k,
        "lambda": design.lam,
        "b": design.b,
        "min_coverage": report.min_coverage,
        "max_coverage": report.max_coverage,
    }
    if design.t == 2:
        params = designs.design_params(design)
        doc["b_formula"] = _format_frac(params.b_formula)
        doc["r_formula"] = _format_frac(params.r_formula)
        doc["replication_min"] = params.replication_min
        doc["replication_max"] = params.replication_max
    table = {}
    for i in range(design.t + 1):
        for j in range(design.t + 1 - i):
            table[f"lambda_{i}_{j}"] = _format_frac(designs.lambda_ij(design, i, j))
    doc.update(table)
    if args.json:
        print(json.dumps(doc))
    else:
        for key, value in doc.items():
            if isinstance(value, bool):
                value = "true" if value else "false"
            print(f"{key}: {value}")
    return 0 if report.valid else PROPERTY_FAILED


def _cmd_complement(args) -> int:
    hg = _read_hypergraph(args.input)
    result = hg.complement()
    _write_output(hypergraph.format_hypergraph(result, ["complement"]), args.out)
    return 0


def _cmd_induce(args) -> int:
    hg = _read_hypergraph(args.input)
    vertices = _parse_vertices(args.vertices)
    try:
        result, relabel = hg.induced(vertices)
    except HypergraphError as exc:
        raise _CliError(str(exc)) from exc
    comments = ["induced"] + [f"relabel {old} -> {new}" for old, new in sorted(relabel.items())]
    _write_output(hypergraph.format_hypergraph(result, comments), args.out)
    return 0


def _cmd_delete_vertex(args) -> int:
    hg = _read_hypergraph(args.input)
    try:
        result, relabel = hg.delete_vertex(args.vertex)
    except HypergraphError as exc:
        raise _CliError(str(exc)) from exc
    comments = [f"deleted vertex {args.vertex}"]
    comments += [f"relabel {old} -> {new}" for old, new in sorted(relabel.items())]
    _write_output(hypergraph.format_hypergraph(result, comments), args.out)
    return 0


def _result_doc(hg, result) -> dict:
    ce = result.counterexample
    return {
        "holds": result.holds,
        "n": result.n,
        "h": hg.h,
        "m": hg.m,
        "edges": hg.edge_count,
        "counterexample_S": list(ce[0]) if ce else None,
        "counterexample_T": list(ce[1]) if ce else None,
        "candidates_examined": result.stats.candidates_examined,
        "elapsed_ms": result.stats.elapsed_ms,
        "note": result.stats.note,
    }


def _set(vertices) -> str:
    return "{" + ",".join(str(v) for v in vertices) + "}"


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperec",
        description="Construct, validate, and certify existentially closed uniform hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common_check_flags(p):
        p.add_argument("--engine", choices=checker.ENGINES, default="optimized")
        p.add_argument("--threads", type=int, default=1,
                       help="worker count; results are identical for any value (default 1)")
        p.add_argument("--json", action="store_true", help="emit one JSON document")

    p = sub.add_parser("check", help="decide whether a hypergraph is n-e.c.")
    p.add_argument("input", help="hypergraph file")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--witnesses", action="store_true", help="record and print all witnesses")
    common_check_flags(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("maxec", help="largest n for which the hypergraph is n-e.c.")
    p.add_argument("input", help="hypergraph file")
    common_check_flags(p)
    p.set_defaults(func=_cmd_maxec)

    p = sub.add_parser("construct", help="generate a design or MOLS family")
    p.add_argument("kind", choices=["mols", "pg", "inversive", "fano"])
    p.add_argument("-q", type=int, default=None, help="order (prime power)")
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("build", help="build a hypergraph from a MOLS or design file")
    p.add_argument("kind", choices=["from-mols", "from-design"])
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--h", type=int, default=None, dest="h", help="edge size")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("random", help="sample the random model and report the e.c. fraction")
    p.add_argument("--h", type=int, required=True, dest="h")
    p.add_argument("--m", type=int, required=True, dest="m")
    p.add_argument("--p", type=float, required=True, dest="p")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True,
                   help="base seed; all randomness flows from it")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_random)

    p = sub.add_parser("validate", help="validate a design file and print its parameters")
    p.add_argument("input", help="design file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("complement", help="complement of a hypergraph file")
    p.add_argument("input")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=_cmd_complement)

    p = sub.add_parser("induce", help="subgraph induced on a vertex set")
    p.add_argument("input")
    p.add_argument("--vertices", required=True, help="comma- or space-separated vertex list")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=_cmd_induce)

    p = sub.add_parser("delete-vertex", help="delete a vertex and relabel")
    p.add_argument("input")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=_cmd_delete_vertex)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
