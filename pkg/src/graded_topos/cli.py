"""Command-line surface.

Verbs: check space|frame|system, functor ext|j|fm|s, adjunction-test
j-ext|fm-s, spatiality, eval, consequence, theorem2, suite. Exit codes:
0 pass, 1 violation found, 2 input error. GRADED_TOPOS_SUBSET_CAP moves the
exhaustive-subset boundary.
"""

from __future__ import annotations

import argparse
import sys

from .checks import Violation, subset_regime
from .errors import GradedToposError
from .frames import check_frame
from .functors import (
    GradeSet,
    check_triangle_identities,
    ext_object,
    fm_object,
    j_object,
    s_object,
)
from .generators import GeneratorConfig
from .grades import format_grade, grade
from .logic.semantics import Assignment, sat_grade, sequent_grade, theorem2_suite
from .logic.parser import parse_formula
from .reports import FAIL, PASS, Report, emit_reports
from .serialization import (
    load_formulas,
    load_frame,
    load_interpretation,
    load_space,
    load_system,
    save_frame,
    save_space,
    save_system,
)
from .spaces import check_space
from .suites import SUITE_NAMES, run_suite
from .systems import check_spatial, check_system


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graded-topos",
                                     description="exact checkers for graded frames, "
                                                 "fuzzy topological spaces/systems and "
                                                 "fuzzy geometric logic")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="validate a structure file against its axioms")
    check.add_argument("kind", choices=["space", "frame", "system"])
    check.add_argument("file")

    functor = sub.add_parser("functor", help="apply a functor to a structure file")
    functor.add_argument("name", choices=["ext", "j", "fm", "s"])
    functor.add_argument("--in", dest="infile", required=True)
    functor.add_argument("--grades", help="comma-separated grade set for the hom functor")
    functor.add_argument("--out", dest="outfile", required=True)

    adj = sub.add_parser("adjunction-test", help="run the triangle identities on an instance")
    adj.add_argument("pair", choices=["j-ext", "fm-s"])
    adj.add_argument("--in", dest="infile", required=True)
    adj.add_argument("--grades")

    spatial = sub.add_parser("spatiality", help="test whether a system is spatial")
    spatial.add_argument("file")

    ev = sub.add_parser("eval", help="grade of satisfaction of a formula")
    ev.add_argument("--interp", required=True)
    ev.add_argument("--formula", required=True)
    ev.add_argument("--assign", default="", help="x1=d1,x2=d2,...")

    cons = sub.add_parser("consequence", help="grade of a sequent")
    cons.add_argument("--interp", required=True)
    cons.add_argument("--lhs", required=True)
    cons.add_argument("--rhs", required=True)

    thm = sub.add_parser("theorem2", help="run the graded-sequent property suite")
    thm.add_argument("--interp", required=True)
    thm.add_argument("--pool", required=True)

    suite = sub.add_parser("suite", help="run a named invariant suite")
    suite.add_argument("name", choices=list(SUITE_NAMES))
    suite.add_argument("--seed", type=int, default=0)
    suite.add_argument("--instances", type=int, default=None)
    return parser


def _parse_grade_set(text: str | None) -> GradeSet | None:
    if not text:
        return None
    return GradeSet.closure(grade(part) for part in text.split(","))


def _parse_assignment(text: str) -> Assignment:
    values = {}
    if text:
        for part in text.split(","):
            name, _, element = part.partition("=")
            name = name.strip()
            if not name.startswith("x") or not name[1:].isdigit() or not element:
                raise GradedToposError(f"bad assignment entry {part!r}")
            values[int(name[1:])] = element.strip()
    return Assignment(values)


def _cmd_check(args) -> int:
    if args.kind == "space":
        space = load_space(args.file)
        result = check_space(space.universe, list(space.opens))
        violation = result if isinstance(result, Violation) else None
        regime = "exhaustive"
    elif args.kind == "frame":
        frame = load_frame(args.file)
        violation = check_frame(frame)
        regime = subset_regime(len(frame.carrier))
    else:
        system = load_system(args.file)
        # the system clauses presuppose a valid frame
        violation = check_frame(system.frame) or check_system(system)
        regime = subset_regime(len(system.frame.carrier))
    report = Report(subject=f"check/{args.kind}",
                    status=PASS if violation is None else FAIL,
                    regime=regime,
                    witnesses=() if violation is None
                    else ((violation.clause, "holds", violation.witness),))
    return emit_reports([report])


def _cmd_functor(args) -> int:
    values = _parse_grade_set(args.grades)
    if args.name == "ext":
        save_space(ext_object(load_system(args.infile)), args.outfile)
    elif args.name == "j":
        save_system(j_object(load_space(args.infile)), args.outfile)
    elif args.name == "fm":
        save_frame(fm_object(load_system(args.infile)), args.outfile)
    else:
        frame = load_frame(args.infile)
        save_system(s_object(frame, values or GradeSet.for_frame(frame)), args.outfile)
    return 0


def _cmd_adjunction(args) -> int:
    values = _parse_grade_set(args.grades)
    if args.pair == "j-ext":
        instance = load_space(args.infile)
        laws = check_triangle_identities("j-ext", instance)
    else:
        instance = load_frame(args.infile)
        laws = check_triangle_identities("fm-s", instance, values)
    reports = [
        Report(subject=f"adjunction-test/{law.name}",
               status=PASS if law.ok else FAIL,
               witnesses=() if law.ok else ((law.name, "identity", law.detail or "differs"),))
        for law in laws
    ]
    return emit_reports(reports)


def _cmd_spatiality(args) -> int:
    system = load_system(args.file)
    bad = check_frame(system.frame) or check_system(system)
    if bad is not None:
        print(str(bad), file=sys.stderr)
        return 2
    spatial, pair = check_spatial(system)
    report = Report(subject="spatiality",
                    status=PASS if spatial else FAIL,
                    witnesses=() if spatial
                    else (("indistinguishable pair", "separated", f"{pair[0]!r}, {pair[1]!r}"),))
    return emit_reports([report])


def _cmd_eval(args) -> int:
    interp = load_interpretation(args.interp)
    formula = parse_formula(args.formula, interp.signature())
    assignment = _parse_assignment(args.assign)
    for index, element in assignment.values.items():
        if element not in interp.domain:
            raise GradedToposError(f"x{index} is assigned {element!r}, "
                                   "which is not a domain element")
    value = sat_grade(interp, assignment, formula)
    print(format_grade(value))
    return 0


def _cmd_consequence(args) -> int:
    interp = load_interpretation(args.interp)
    sig = interp.signature()
    value = sequent_grade(interp, parse_formula(args.lhs, sig), parse_formula(args.rhs, sig))
    print(format_grade(value))
    return 0


def _cmd_theorem2(args) -> int:
    interp = load_interpretation(args.interp)
    pool = load_formulas(args.pool, interp.signature())
    reports = [
        Report(subject=f"theorem2/{law.name}",
               status=PASS if law.ok else FAIL,
               witnesses=() if law.ok else (("pool", "clause holds", law.detail or "violated"),))
        for law in theorem2_suite(interp, pool)
    ]
    return emit_reports(reports)


def _cmd_suite(args) -> int:
    cfg = GeneratorConfig(seed=args.seed)
    return emit_reports(run_suite(args.name, cfg, args.instances))


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {
        "check": _cmd_check,
        "functor": _cmd_functor,
        "adjunction-test": _cmd_adjunction,
        "spatiality": _cmd_spatiality,
        "eval": _cmd_eval,
        "consequence": _cmd_consequence,
        "theorem2": _cmd_theorem2,
        "suite": _cmd_suite,
    }[args.command]
    try:
        return handler(args)
    except GradedToposError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
