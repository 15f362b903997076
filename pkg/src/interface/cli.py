"""
Command Line

One subcommand per construction. Pipelines are composed through files:
`color` writes a colouring that `subgroup-gens`, `davis-quotient` and
`rs-presentation` read back.

Exit codes: 0 success, 1 negative verdict under --strict, 2 input error,
3 failed precondition.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from coloring.colorings import chromatic_number, coloring_by_dimension, exact_coloring, find_coloring, greedy_coloring
from coloring.conditions import NONE_CERTIFIED, check_generation_conditions, pullback_presentation, subgroup_generators
from common.errors import InputError, WorkbenchError
from common.jsonio import dump_json, write_json
from common.settings import get_settings, load_settings, use_settings
from complexes.simplicial import barycentric_subdivision, is_flag, is_orientable, is_pseudo_manifold
from coxeter.io import system_to_document
from coxeter.system import CoxeterSystem
from coxeter.word_problem import racg_length, racg_normal_form, verify_presentation_hom
from homology.groups import cohomology, homology, homology_batch
from homology.manifolds import is_r_homology_manifold, is_r_homology_sphere
from homology.rings import ZZ, CoefficientRing
from nerve.davis import davis_quotient
from nerve.euler import chiswell_euler
from nerve.reports import free_cohomology_report, vcd_report
from nerve.spherical import nerve
from presentations.abelian import abelian_invariants
from presentations.schreier import reidemeister_schreier
from presentations.tietze import tietze_simplify
from presentations.words import Word

from .battery import verify_fixtures
from .documents import (
    load_coloring,
    load_complex,
    load_hom,
    load_images,
    load_presentation,
    load_system,
)
from .report_formatter import OutputFormat, ReportFormatter

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, ReportFormatter], int]
COMMANDS: Dict[str, Handler] = {}


def command(name: str):
    """Register a subcommand handler."""
    def decorator(func: Handler) -> Handler:
        COMMANDS[name] = func
        return func
    return decorator


def _ring_arg(text: str) -> CoefficientRing:
    try:
        return CoefficientRing.parse(text)
    except InputError as e:
        raise argparse.ArgumentTypeError(e.message)


def _rings(args: argparse.Namespace) -> List[CoefficientRing]:
    return args.ring or [ZZ]


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _verdict_exit(args: argparse.Namespace, holds: bool) -> int:
    return 1 if args.strict and not holds else 0


def _write_or_print(args: argparse.Namespace, formatter: ReportFormatter, document, summary: str) -> None:
    """With --output the document goes to the file and the summary to stdout."""
    if args.output:
        write_json(args.output, document)
        logger.info(f"wrote {args.output}")
        _emit(summary)
    elif formatter.is_json:
        _emit(dump_json(document).rstrip("\n"))
    else:
        _emit(summary)


@command("nerve")
def cmd_nerve(args, formatter: ReportFormatter) -> int:
    _emit(formatter.format_nerve(nerve(load_system(args.system))))
    return 0


@command("flag-check")
def cmd_flag_check(args, formatter: ReportFormatter) -> int:
    holds = is_flag(load_complex(args.complex))
    _emit(formatter.format_verdict("flag", holds))
    return _verdict_exit(args, holds)


def _graded(args, formatter: ReportFormatter, compute, letter: str) -> int:
    complexes = [load_complex(path) for path in args.complex]
    labelled = len(args.complex) > 1 or len(_rings(args)) > 1
    parts = []
    for ring in _rings(args):
        if compute is homology:
            results = homology_batch(complexes, ring, args.reduced, args.jobs)
        else:
            results = [compute(K, ring, args.reduced) for K in complexes]
        for path, groups in zip(args.complex, results):
            label = f"{path} [{ring}]" if labelled else None
            parts.append(formatter.format_groups(groups, ring, letter, label))
    _emit(formatter.join(parts))
    return 0


@command("homology")
def cmd_homology(args, formatter: ReportFormatter) -> int:
    return _graded(args, formatter, homology, "H")


@command("cohomology")
def cmd_cohomology(args, formatter: ReportFormatter) -> int:
    return _graded(args, formatter, cohomology, "H^")


@command("manifold-check")
def cmd_manifold_check(args, formatter: ReportFormatter) -> int:
    K = load_complex(args.complex)
    pseudo = is_pseudo_manifold(K)
    orientable = bool(is_orientable(K)) if pseudo else None
    parts = []
    all_hold = True
    for ring in _rings(args):
        verdict = is_r_homology_manifold(K, ring)
        all_hold = all_hold and verdict.holds
        extra = {"ring": ring.label, "pseudo_manifold": pseudo.is_pseudo_manifold, "orientable": orientable}
        detail = verdict.reason
        if verdict.holds:
            detail = f"pseudo-manifold: {bool(pseudo)}, orientable: {orientable}"
        parts.append(formatter.format_verdict(f"{ring}-homology {K.dimension}-manifold", verdict.holds, detail, extra))
    _emit(formatter.join(parts))
    return _verdict_exit(args, all_hold)


@command("sphere-check")
def cmd_sphere_check(args, formatter: ReportFormatter) -> int:
    K = load_complex(args.complex)
    parts = []
    all_hold = True
    for ring in _rings(args):
        verdict = is_r_homology_sphere(K, ring)
        all_hold = all_hold and verdict.holds
        parts.append(
            formatter.format_verdict(f"{ring}-homology {K.dimension}-sphere", verdict.holds, verdict.reason, {"ring": ring.label})
        )
    _emit(formatter.join(parts))
    return _verdict_exit(args, all_hold)


@command("subdivide")
def cmd_subdivide(args, formatter: ReportFormatter) -> int:
    S = barycentric_subdivision(load_complex(args.complex))
    if args.system:
        document = system_to_document(CoxeterSystem.right_angled(S))
    else:
        document = S.to_document()
    _write_or_print(args, formatter, document, formatter.format_complex_summary(S, "subdivision"))
    return 0


@command("color")
def cmd_color(args, formatter: ReportFormatter) -> int:
    system = load_system(args.system)
    graph = system.labeled_graph()
    if args.by_dimension:
        coloring = coloring_by_dimension(nerve(system).complex)
    elif args.greedy:
        coloring = greedy_coloring(graph)
    elif args.colors is not None:
        coloring = find_coloring(graph, args.colors)
    else:
        coloring = exact_coloring(graph, chromatic_number(graph))
    if coloring is None:
        _emit(formatter.format_verdict(f"proper {args.colors}-colouring", False, "search exhausted"))
        return _verdict_exit(args, False)
    _write_or_print(args, formatter, coloring.to_document(), formatter.format_coloring(coloring))
    return 0


@command("color-report")
def cmd_color_report(args, formatter: ReportFormatter) -> int:
    report = check_generation_conditions(load_system(args.system), load_coloring(args.coloring))
    _emit(formatter.format_coloring_report(report))
    return _verdict_exit(args, report.mode != NONE_CERTIFIED)


@command("subgroup-gens")
def cmd_subgroup_gens(args, formatter: ReportFormatter) -> int:
    generators = subgroup_generators(load_system(args.system), load_coloring(args.coloring), args.economical)
    _emit(formatter.format_generator_set(generators))
    return 0


@command("pullback-presentation")
def cmd_pullback_presentation(args, formatter: ReportFormatter) -> int:
    pres = pullback_presentation(load_system(args.system), load_coloring(args.coloring))
    _write_or_print(args, formatter, pres.to_document(), formatter.format_presentation(pres))
    return 0


@command("euler")
def cmd_euler(args, formatter: ReportFormatter) -> int:
    N = nerve(load_system(args.system))
    _emit(formatter.format_euler(chiswell_euler(N), args.index, N.complex.f_vector()))
    return 0


@command("davis-quotient")
def cmd_davis_quotient(args, formatter: ReportFormatter) -> int:
    ring = _rings(args)[0]
    quotient = davis_quotient(load_system(args.system), load_hom(args.hom))
    _emit(formatter.format_davis_quotient(quotient, homology(quotient.data, ring), ring))
    return 0


@command("vcd-report")
def cmd_vcd_report(args, formatter: ReportFormatter) -> int:
    _emit(formatter.format_vcd_report(vcd_report(load_system(args.system), _rings(args))))
    return 0


@command("free-cohomology")
def cmd_free_cohomology(args, formatter: ReportFormatter) -> int:
    _emit(formatter.format_free_cohomology(free_cohomology_report(load_system(args.system), _rings(args)[0])))
    return 0


@command("word-reduce")
def cmd_word_reduce(args, formatter: ReportFormatter) -> int:
    system = load_system(args.system)
    if len(args.word) > 1 or args.word[0] in system:
        word = Word.from_generators(args.word)
    else:
        word = Word.parse(args.word[0])
    _emit(formatter.format_word(word, racg_normal_form(system, word), racg_length(system, word)))
    return 0


@command("verify-hom")
def cmd_verify_hom(args, formatter: ReportFormatter) -> int:
    check = verify_presentation_hom(load_presentation(args.presentation), load_system(args.system), load_images(args.images))
    _emit(formatter.format_hom_check(check))
    return _verdict_exit(args, check.holds)


@command("rs-presentation")
def cmd_rs_presentation(args, formatter: ReportFormatter) -> int:
    kernel = reidemeister_schreier(load_presentation(args.presentation), load_hom(args.hom))
    if not args.raw:
        kernel = tietze_simplify(kernel, args.effort)
    _write_or_print(args, formatter, kernel.to_document(), formatter.format_presentation(kernel))
    return 0


@command("tietze")
def cmd_tietze(args, formatter: ReportFormatter) -> int:
    pres = tietze_simplify(load_presentation(args.presentation), args.effort)
    _write_or_print(args, formatter, pres.to_document(), formatter.format_presentation(pres))
    return 0


@command("abelianize")
def cmd_abelianize(args, formatter: ReportFormatter) -> int:
    _emit(formatter.format_invariants(abelian_invariants(load_presentation(args.presentation))))
    return 0


@command("verify-fixtures")
def cmd_verify_fixtures(args, formatter: ReportFormatter) -> int:
    scorecard = verify_fixtures(skip_slow=args.skip_slow)
    _emit(formatter.format_scorecard(scorecard))
    return 0 if scorecard.ok else 1


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    common.add_argument("--strict", action="store_true", help="exit 1 on a negative verdict")
    common.add_argument("--config", type=Path, help="settings file (default config/config.json)")
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    common.add_argument("--jobs", type=int, help="workers for independent homology computations")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="workbench",
        description="Coxeter groups, nerves, homology and subgroup presentations.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    common = [_common_options()]

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(name, help=help_text, parents=common)

    def ring(p: argparse.ArgumentParser) -> None:
        p.add_argument("--ring", type=_ring_arg, action="append", help="Z, Q or Fp:<p>; repeatable")

    def output(p: argparse.ArgumentParser) -> None:
        p.add_argument("--output", "-o", help="write the JSON document to this file")

    system_help = "Coxeter graph file, complex file or library:<name>"

    p = add("nerve", "spherical subsets of a Coxeter system")
    p.add_argument("system", help=system_help)

    p = add("flag-check", "is every clique of the 1-skeleton a simplex")
    p.add_argument("complex")

    for name, help_text in (("homology", "simplicial homology"), ("cohomology", "simplicial cohomology")):
        p = add(name, help_text)
        p.add_argument("complex", nargs="+")
        p.add_argument("--reduced", action="store_true")
        ring(p)

    for name, help_text in (("manifold-check", "R-homology manifold test"), ("sphere-check", "R-homology sphere test")):
        p = add(name, help_text)
        p.add_argument("complex")
        ring(p)

    p = add("subdivide", "barycentric subdivision")
    p.add_argument("complex")
    p.add_argument("--system", action="store_true", help="emit the right-angled Coxeter graph instead")
    output(p)

    p = add("color", "proper colouring of the labeled graph")
    p.add_argument("system", help=system_help)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--colors", "-k", type=int, help="number of colours (default: chromatic number)")
    group.add_argument("--by-dimension", action="store_true", help="colour each barycentre by its dimension")
    group.add_argument("--greedy", action="store_true")
    output(p)

    for name, help_text in (
        ("color-report", "generation conditions of a colouring"),
        ("subgroup-gens", "generators of the colouring kernel"),
        ("pullback-presentation", "presentation of the pullback group"),
    ):
        p = add(name, help_text)
        p.add_argument("system", help=system_help)
        p.add_argument("coloring")
        if name == "subgroup-gens":
            p.add_argument("--economical", action="store_true", help="one base point per colour class")
        if name == "pullback-presentation":
            output(p)

    p = add("euler", "Euler characteristic of the Coxeter group")
    p.add_argument("system", help=system_help)
    p.add_argument("--index", type=int, help="also print index * chi")

    p = add("davis-quotient", "cells and homology of the Davis complex modulo a kernel")
    p.add_argument("system", help=system_help)
    p.add_argument("hom", help="homomorphism or colouring file")
    ring(p)

    p = add("vcd-report", "what the nerve says about the virtual cohomological dimension")
    p.add_argument("system", help=system_help)
    ring(p)

    p = add("free-cohomology", "cohomology with group ring coefficients for manifold nerves")
    p.add_argument("system", help=system_help)
    ring(p)

    p = add("word-reduce", "normal form in a right-angled Coxeter group")
    p.add_argument("system", help=system_help)
    p.add_argument("word", nargs="+", help="case-convention text, or generator names separated by spaces")

    p = add("verify-hom", "check that a map on generators kills every relator")
    p.add_argument("presentation")
    p.add_argument("system", help=system_help)
    p.add_argument("images")

    p = add("rs-presentation", "Reidemeister-Schreier presentation of a kernel")
    p.add_argument("presentation", help="presentation file or Coxeter graph file")
    p.add_argument("hom", help="homomorphism or colouring file")
    p.add_argument("--raw", action="store_true", help="skip Tietze simplification")
    p.add_argument("--effort", type=int, choices=range(0, 4))
    output(p)

    p = add("tietze", "simplify a presentation")
    p.add_argument("presentation")
    p.add_argument("--effort", type=int, choices=range(0, 4))
    output(p)

    p = add("abelianize", "abelian invariants of a presentation")
    p.add_argument("presentation", help="presentation file or Coxeter graph file")

    p = add("verify-fixtures", "run the fixture battery and print a scorecard")
    p.add_argument("--skip-slow", action="store_true")

    return parser


def _apply_global_options(args: argparse.Namespace) -> None:
    if args.config is not None:
        use_settings(load_settings(args.config))
    settings = get_settings()
    if args.log_level:
        logging.getLogger().setLevel(args.log_level)
    if args.jobs is None:
        args.jobs = settings.homology.jobs
    elif args.jobs < 1:
        raise InputError(f"--jobs must be at least 1, got {args.jobs}")


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run one subcommand and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    formatter = ReportFormatter(OutputFormat(args.format))
    for name in ("output", "ring", "effort"):
        if not hasattr(args, name):
            setattr(args, name, None)
    try:
        _apply_global_options(args)
        return COMMANDS[args.command](args, formatter)
    except WorkbenchError as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        sys.stderr.write(formatter.format_error(e) + "\n")
        return e.exit_code
