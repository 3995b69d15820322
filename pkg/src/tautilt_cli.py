#!/usr/bin/env python3
"""
Command-line interface for taucheck

Usage:
    python -m src.tautilt_cli classify data/corpus/A3Z.alg data/corpus/A3Z_Tstar.mod
    python -m src.tautilt_cli suite reduction --corpus A2 A3Z LOC2
    python -m src.tautilt_cli enumerate LinearA(3)
    python -m src.tautilt_cli tau-tilting A3Z --support
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.config import Settings, configure_logging, load_config
from src.errors import (
    DimensionError,
    FeasibilityError,
    FormatError,
    PresentationError,
    TaucheckError,
    UndecidedError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_INPUT_ERROR = 2
EXIT_UNDECIDED = 3
EXIT_INTERRUPTED = 130

SUITE_NAMES = ['reduction', 'criteria', 'counts', 'dell', 'conjectures', 'thm1', 'thm2', 'all']


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="taucheck",
        description="taucheck: τ-tilting theory over finite fields",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Classify a module given by files
  python -m src.tautilt_cli classify data/corpus/A3Z.alg data/corpus/A3Z_Tstar.mod

  # Run a verification suite over part of the corpus
  python -m src.tautilt_cli suite reduction --corpus A2 A3Z --format text

  # The same suite selected by its short name
  python -m src.tautilt_cli suite --suite thm1 --corpus A3Z

  # Every suite over the default corpus, four worker processes
  python -m src.tautilt_cli suite all --workers 4 --out report.json

  # Enumerate indecomposables and (support) τ-tilting modules
  python -m src.tautilt_cli enumerate "LinearA(3)" --max-dim 3
  python -m src.tautilt_cli tau-tilting A3Z --support

Exit codes: 0 consistent, 1 theorem inconsistency, 2 input error,
3 undecided within budget/horizon, 130 interrupted.
        """,
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='YAML config file (default: configs/base_config.yaml)')
    common.add_argument('--seed', type=int, help='Random seed for sampled searches')
    common.add_argument('--horizon', type=int, help='Degrees checked before a verdict becomes Unknown')
    common.add_argument('--max-dim', type=int, help='Enumeration cap D on total dimension')
    common.add_argument('--budget', type=int, help='Candidate modules per dell search')
    common.add_argument('--format', choices=['json', 'text'], default='json', help='Report format (default: json)')
    common.add_argument('--out', help='Write the report here instead of standard output')
    common.add_argument('--quiet', '-q', action='store_true', help='No progress bars')
    common.add_argument('--verbose', '-v', action='store_true', help='Debug logging')

    sub = parser.add_subparsers(dest='command', required=True)

    classify = sub.add_parser('classify', parents=[common], help='Classify one module')
    classify.add_argument('algebra', help='.alg file')
    classify.add_argument('module', help='.mod file')
    classify.add_argument('--checks', action='store_true', help='Also emit the theorem verdicts for this module')

    suite = sub.add_parser('suite', parents=[common], help='Run a verification suite')
    suite.add_argument('suite', nargs='?', choices=SUITE_NAMES, help='Suite to run (or give it with --suite)')
    suite.add_argument('--suite', dest='suite_option', choices=SUITE_NAMES, help='Suite to run; thm1 = reduction, thm2 = criteria')
    suite.add_argument('--corpus', nargs='+', help='Corpus entries: aliases, families like LinearA(3), or .alg files')
    suite.add_argument('--workers', type=int, help='Worker processes (default from config)')
    suite.add_argument('--with-kronecker', action='store_true', help='Add the Kronecker algebra to the default corpus')

    enum = sub.add_parser('enumerate', parents=[common], help='Enumerate indecomposables up to dimension D')
    enum.add_argument('corpus', help='Corpus entry or .alg file')

    tau = sub.add_parser('tau-tilting', parents=[common], help='List basic τ-tilting modules')
    tau.add_argument('corpus', help='Corpus entry or .alg file')
    tau.add_argument('--support', action='store_true', help='List support τ-tilting modules instead')
    tau.add_argument('--write', metavar='DIR', help='Write each module as a .mod file into DIR')

    return parser


def effective_settings(args: argparse.Namespace) -> Settings:
    """Config file values overridden by explicit flags"""
    settings = load_config(args.config)
    if args.seed is not None:
        settings.suite.seed = args.seed
    if args.horizon is not None:
        settings.homology.horizon = args.horizon
    if args.max_dim is not None:
        settings.enumeration.max_dim = args.max_dim
    if args.budget is not None:
        settings.dell.budget_modules = args.budget
    if getattr(args, 'workers', None) is not None:
        settings.suite.workers = args.workers
    return settings


def cmd_classify(args, settings: Settings):
    from src.data.formats import load_algebra, load_module
    from src.data.reports import Report
    from src.tautilt import (
        check_classical,
        check_one_tilting_criteria,
        check_support_routes,
        check_tau_tilting_reduction,
        classify,
    )

    A = load_algebra(args.algebra)
    T = load_module(args.module, A)
    h, seed = settings.homology.horizon, settings.suite.seed
    report = Report(command="classify", corpus=[A.name], seed=seed, config=settings.model_dump(mode="json"))
    report.classifications.append(classify(T, h, seed))
    if args.checks:
        report.verdicts.append(check_tau_tilting_reduction(T, h, seed))
        report.verdicts.append(check_one_tilting_criteria(T, h, seed))
        report.verdicts.append(check_classical(T, h, seed))
        report.verdicts.append(check_support_routes(T, h, seed))
    return report


def _corpus(entries: Optional[List[str]], settings: Settings, with_kronecker: bool = False):
    from src.data.corpus import CorpusSpec, standard_corpus

    p = settings.field.p
    if entries:
        return [CorpusSpec.parse(e, p=p) for e in entries]
    return standard_corpus(p=p, include_rep_infinite=with_kronecker)


def cmd_suite(args, settings: Settings):
    from src.suites import run_suite

    corpus = _corpus(args.corpus, settings, args.with_kronecker)
    if args.max_dim is not None:
        corpus = [spec.model_copy(update={"max_dim": args.max_dim}) for spec in corpus]
    return run_suite(args.suite, corpus, settings, progress=not args.quiet)


def _enumeration(args, settings: Settings, support: bool):
    from src.data.corpus import CorpusSpec
    from src.data.enumerate import enumerate_modules, enumerate_support_tau_tilting, enumerate_tau_tilting
    from src.data.reports import EnumerationSummary, Report

    spec = CorpusSpec.parse(args.corpus, p=settings.field.p, max_dim=args.max_dim)
    A = spec.build()
    cap = spec.enumeration_cap(settings.enumeration.max_dim)
    seed = settings.suite.seed
    pool = enumerate_modules(A, cap, settings.enumeration.brute_force_limit_log2, seed=seed, progress=not args.quiet)
    taus = enumerate_tau_tilting(A, pool)
    supports = enumerate_support_tau_tilting(A, pool)
    if args.command == 'enumerate':
        listed = [f"{M.name}: dim vector {M.dimension_vector}" for M in pool]
    else:
        listed = [M.name for M in (supports if support else taus)]
    report = Report(command=args.command, corpus=[spec.label], seed=seed, config=settings.model_dump(mode="json"))
    report.enumerations.append(
        EnumerationSummary(
            algebra=A.name,
            max_dim=cap,
            complete=spec.pool_is_complete(cap),
            indecomposables=len(pool),
            tau_tilting=len(taus),
            support_tau_tilting=len(supports),
            modules=listed,
        )
    )
    if getattr(args, 'write', None):
        from src.data.formats import dump_module

        out_dir = Path(args.write)
        out_dir.mkdir(parents=True, exist_ok=True)
        for k, M in enumerate(supports if support else taus):
            if M.dim:
                (out_dir / f"{A.name}_T{k}.mod").write_text(dump_module(M), encoding="utf-8")
    return report


def emit(report, args) -> None:
    text = report.to_json() + "\n" if args.format == 'json' else report.to_text()
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"✨ Report written to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == 'suite':
        if args.suite and args.suite_option and args.suite != args.suite_option:
            parser.error(f"suite given twice: {args.suite} and --suite {args.suite_option}")
        args.suite = args.suite or args.suite_option
        if not args.suite:
            parser.error('suite: choose one of ' + ', '.join(SUITE_NAMES))

    try:
        settings = effective_settings(args)
        configure_logging(settings.logging, verbose=args.verbose)

        if args.command == 'classify':
            report = cmd_classify(args, settings)
        elif args.command == 'suite':
            report = cmd_suite(args, settings)
        else:
            report = _enumeration(args, settings, support=getattr(args, 'support', False))

        emit(report, args)
        code = report.exit_code()
        if code == EXIT_INCONSISTENT:
            print("❌ Inconsistent theorem verdicts found", file=sys.stderr)
        elif code == EXIT_UNDECIDED:
            print("⚠️  Some certifications stayed undecided within budget/horizon", file=sys.stderr)
        return code

    except KeyboardInterrupt:
        print("\n\n⚠️  Cancelled by user", file=sys.stderr)
        return EXIT_INTERRUPTED

    except (FormatError, PresentationError, DimensionError, FeasibilityError) as e:
        print(f"\n❌ Input error: {e}", file=sys.stderr)
        if isinstance(e, PresentationError) and e.basis_pair:
            print(f"   violating basis pair: {e.basis_pair[0]} · {e.basis_pair[1]}", file=sys.stderr)
        if isinstance(e, FeasibilityError) and e.estimate:
            print(f"   estimate: {e.estimate}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    except UndecidedError as e:
        print(f"\n⚠️  Undecided: {e}", file=sys.stderr)
        return EXIT_UNDECIDED

    except TaucheckError as e:
        print(f"\n❌ Error: {e}", file=sys.stderr)
        if args.verbose:
            import traceback
            traceback.print_exc()
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
