"""Command-line driver.

    possdlp solve FILE [--engine resolution|gppe|both] [--json] [--trace]
    possdlp analyze FILE [--json]
    possdlp repair FILE [--json]
    possdlp check FILE

Exit codes: 0 success, 1 usage or parse error, 2 no possibilistic answer sets
(solve), 3 the two engines disagree (solve --engine both).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .asp import answer_sets
from .consistency import analyze, repair
from .errors import PossError
from .model import PossAtomSet, is_strong_neg, project, strong_neg_of
from .parser import parse, unparse
from .parteval import poss_t_answer_sets
from .resolution import necessities, poss_answer_sets_resolution

EXIT_OK, EXIT_ERROR, EXIT_NO_MODELS, EXIT_DISAGREE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def show_atom(atom: str) -> str:
    return "-" + strong_neg_of(atom) if is_strong_neg(atom) else atom


def _sorted_models(models):
    return sorted(models, key=lambda M: sorted(show_atom(a) for a in M))


def model_record(M: PossAtomSet, degree: str | None = None, preferred: bool | None = None) -> dict:
    rec = {
        "atoms": sorted([show_atom(a), v] for a, v in M.items()),
        "projection": sorted(show_atom(a) for a in M),
    }
    if degree is not None:
        rec["incons_degree"] = degree
    if preferred is not None:
        rec["preferred"] = preferred
    return rec


def format_model(M: PossAtomSet) -> str:
    return "{" + ", ".join(f"({a}, {v})" for a, v in sorted([show_atom(a), v] for a, v in M.items())) + "}"


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _trace_resolution(program, out):
    for S in answer_sets(project(program)):
        _, results = necessities(program, S, trace=True)
        print(f"% answer set {{{', '.join(sorted(show_atom(a) for a in S))}}}", file=out)
        for atom, res in results.items():
            print(f"%   {show_atom(atom)}: {res.optimal_value}", file=out)
            for step in res.derivation_trace or ():
                print(f"%     {step}", file=out)


def _trace_gppe(trace, out):
    for S, rounds in trace.items():
        print(f"% answer set {{{', '.join(sorted(show_atom(a) for a in S))}}}", file=out)
        for k, new in enumerate(rounds, 1):
            print(f"%   round {k}: " + " ".join(str(c) for c in new), file=out)


def cmd_solve(args) -> int:
    program = parse(_read(args.file))
    runs = {}
    gppe_trace = {} if args.trace else None
    if args.engine in ("resolution", "both"):
        runs["resolution"] = _sorted_models(poss_answer_sets_resolution(program))
        if args.trace:
            _trace_resolution(program, sys.stderr)
    if args.engine in ("gppe", "both"):
        runs["gppe"] = _sorted_models(poss_t_answer_sets(program, gppe_trace))
        if args.trace:
            _trace_gppe(gppe_trace, sys.stderr)
    models = next(iter(runs.values()))
    agreement = None
    if args.engine == "both":
        agreement = runs["resolution"] == runs["gppe"]
    report = analyze(program, models)
    status = EXIT_OK if models else EXIT_NO_MODELS
    if agreement is False:
        status = EXIT_DISAGREE

    if args.json:
        doc = {
            "program_path": args.file,
            "engine": args.engine,
            "models": [
                model_record(M, report.per_model_degrees[i], i in report.preferred_models)
                for i, M in enumerate(models)
            ],
            "program_diagnostics": {
                "consistent": report.program_consistent,
                "cons_cut_degree": report.cons_cut_degree,
            },
        }
        if agreement is not None:
            doc["engine_agreement"] = agreement
        json.dump(doc, sys.stdout, indent=2)
        print()
    else:
        for i, M in enumerate(models, 1):
            print(f"Answer {i}: {format_model(M)}")
        if not models:
            print("No possibilistic answer sets.")
            print(f"Consistency cut degree: {report.cons_cut_degree}")
        if agreement is not None:
            print(f"Engines agree: {'yes' if agreement else 'NO'}")
    if agreement is False:
        for name, ms in runs.items():
            print(f"{name}: " + "; ".join(format_model(M) for M in ms), file=sys.stderr)
    return status


def cmd_analyze(args) -> int:
    program = parse(_read(args.file))
    models = _sorted_models(poss_answer_sets_resolution(program))
    report = analyze(program, models, literal=args.literal_cuts)
    if args.json:
        doc = {
            "program_path": args.file,
            "program_consistent": report.program_consistent,
            "cons_cut_degree": report.cons_cut_degree,
            "irreparable": report.irreparable,
            "models": [
                model_record(M, report.per_model_degrees[i], i in report.preferred_models)
                for i, M in enumerate(models)
            ],
        }
        json.dump(doc, sys.stdout, indent=2)
        print()
        return EXIT_OK
    print(f"Consistent: {'yes' if report.program_consistent else 'no'}")
    print(f"Consistency cut degree: {report.cons_cut_degree}")
    if report.irreparable:
        print("No strict cut below the top restores consistency.")
    for i, M in enumerate(models):
        mark = "*" if i in report.preferred_models else " "
        print(f"{mark} {format_model(M)}  inconsistency degree {report.per_model_degrees[i]}")
    return EXIT_OK


def cmd_repair(args) -> int:
    program = parse(_read(args.file))
    fixed = repair(program)
    models = _sorted_models(fixed.models)
    if args.json:
        doc = {
            "program_path": args.file,
            "cons_cut_degree": fixed.degree,
            "irreparable": fixed.irreparable,
            "removed_clauses": len(program) - len(fixed.program),
            "program": unparse(fixed.program),
            "models": [model_record(M) for M in models],
        }
        json.dump(doc, sys.stdout, indent=2)
        print()
    else:
        print(f"% consistency cut degree {fixed.degree}; "
              f"removed {len(program) - len(fixed.program)} clause(s)")
        sys.stdout.write(unparse(fixed.program))
        for i, M in enumerate(models, 1):
            print(f"% Answer {i}: {format_model(M)}")
    return EXIT_OK if models else EXIT_NO_MODELS


def cmd_check(args) -> int:
    program = parse(_read(args.file))
    L = program.lattice
    kind = "chain" if L.is_chain else "lattice"
    print(f"ok: {len(program)} clause(s), {len(program.atoms())} atom(s), "
          f"{kind} of {len(L)} element(s) from {L.bottom} to {L.top}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="possdlp", description="Possibilistic disjunctive logic program solver")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="compute possibilistic answer sets")
    p.add_argument("file")
    p.add_argument("--engine", choices=["resolution", "gppe", "both"], default="resolution")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--trace", action="store_true", help="print derivations on stderr")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("analyze", help="inconsistency degrees and preferred models")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--literal-cuts", action="store_true",
                   help="cut possibilistic sets at values >= alpha instead of not-below alpha")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("repair", help="strict cut at the consistency cut degree, then solve")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_repair)

    p = sub.add_parser("check", help="parse and validate only")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PossError, OSError) as exc:
        where = f"{args.file}:" if isinstance(exc, PossError) and getattr(exc, "line", None) else ""
        print(f"possdlp: {where}{exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
