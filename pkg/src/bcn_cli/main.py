"""Command-line entry point.

Exit status: 0 when the analysis completed (an undecomposable network or a failed ``verify``
included), 1 for unreadable or invalid input, 2 when an internal identity was violated.
"""

import argparse
import logging
import sys
import time
from typing import List, Optional

from pydantic import ValidationError

from bcn_analysis import InvariantViolation

from .commands import CommandRunner, parse_index_list
from .config import AnalysisConfig
from .reports import Report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INVARIANT_VIOLATION = 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', dest='json_output', action='store_true', default=None,
                        help='Print the machine-readable JSON report')
    common.add_argument('--quiet', '-q', action='store_true', default=None,
                        help='Print a one-line summary instead of the full text report')
    common.add_argument('--timing', dest='show_timing', action='store_true', default=None,
                        help='Append the elapsed time to the text report')
    common.add_argument('--max-n', dest='max_n', type=int, default=None,
                        help='Refuse models with more state variables than this (default: 20)')
    common.add_argument('--max-rows', dest='max_rows', type=int, default=None,
                        help='Stop listing observability rows beyond this many (default: 65536)')
    common.add_argument('--log-level', dest='log_level', type=str, default=None,
                        help='Logging level for stderr (default: $BCN_LOG_LEVEL or WARNING)')

    parser = argparse.ArgumentParser(
        prog='bcn',
        description='Analyse Boolean control networks: algebraic form, observability and '
                    'maximum decomposition with respect to outputs')
    sub = parser.add_subparsers(dest='command', required=True)

    convert = sub.add_parser('convert', parents=[common],
                             help='Compile a model to its structure matrices')
    convert.add_argument('model', help='Model file (.json or .bcn)')

    obsmat = sub.add_parser('obsmat', parents=[common],
                            help='Observability matrix and its column partition')
    obsmat.add_argument('model', help='Model file (.json or .bcn)')

    decompose = sub.add_parser('decompose', parents=[common],
                               help='Maximum decomposition with respect to outputs')
    decompose.add_argument('model', help='Model file (.json or .bcn)')
    decompose.add_argument('--order', type=int, default=None,
                           help='Look for a decomposition of exactly this order')
    decompose.add_argument('--all', dest='list_all', action='store_true',
                           help='List every partition of the winning order')
    decompose.add_argument('--regularity', action='store_true',
                           help='Run the regularity test against every alternative partition')
    decompose.add_argument('--edges', action='store_true',
                           help='Include the transition graph edge lists')
    decompose.add_argument('--exhaustive', action='store_true',
                           help='Cross-check by enumerating every equal partition (n <= 4)')

    verify = sub.add_parser('verify', parents=[common],
                            help='Check whether a transformation T decomposes the network')
    verify.add_argument('model', help='Model file (.json or .bcn)')
    verify.add_argument('--T', dest='T', required=True, help="Delta indices of T, e.g. '3,6,1,8,7,2,5,4'")
    verify.add_argument('--s', dest='s', type=int, required=True, help='Number of retained coordinates')

    simulate = sub.add_parser('simulate', parents=[common], help='Iterate the network')
    simulate.add_argument('model', help='Model file (.json or .bcn)')
    simulate.add_argument('--x0', type=int, default=1, help='Initial state index (default: 1)')
    steps = simulate.add_mutually_exclusive_group()
    steps.add_argument('--inputs', type=str, default=None, help="Input indices, e.g. '1,2,1'")
    steps.add_argument('--steps', type=int, default=None, help='Number of steps with input 1')
    simulate.add_argument('--bits', action='store_true', help='Show states and outputs as Boolean tuples')

    regularity = sub.add_parser('regularity', parents=[common],
                                help='Regularity test between two decomposing transformations')
    regularity.add_argument('model', help='Model file (.json or .bcn)')
    regularity.add_argument('--T1', dest='T1', required=True, help='Delta indices of the first T')
    regularity.add_argument('--T2', dest='T2', required=True, help='Delta indices of the second T')
    regularity.add_argument('--s', dest='s', type=int, required=True, help='Number of retained coordinates')
    return parser


def run_command(runner: CommandRunner, args: argparse.Namespace) -> Report:
    if args.command == 'convert':
        return runner.convert(args.model)
    if args.command == 'obsmat':
        return runner.obsmat(args.model)
    if args.command == 'decompose':
        return runner.decompose(args.model, order=args.order, list_all=args.list_all,
                                regularity=args.regularity, edges=args.edges,
                                exhaustive=args.exhaustive)
    if args.command == 'verify':
        return runner.verify(args.model, args.T, args.s)
    if args.command == 'simulate':
        inputs = parse_index_list(args.inputs) if args.inputs else None
        return runner.simulate(args.model, args.x0, inputs=inputs, steps=args.steps, bits=args.bits)
    if args.command == 'regularity':
        return runner.regularity(args.model, args.T1, args.T2, args.s)
    raise ValueError(f"unknown command '{args.command}'")


def main(argv: Optional[List[str]] = None) -> int:
    """Main execution function."""
    args = build_parser().parse_args(argv)
    try:
        config = AnalysisConfig.from_env(
            json_output=args.json_output,
            quiet=args.quiet,
            show_timing=args.show_timing,
            max_n=args.max_n,
            max_rows=args.max_rows,
            log_level=args.log_level,
        )
    except ValidationError as exc:
        print(f"error: {exc.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    logging.basicConfig(**config.get_logging_params(), force=True)

    runner = CommandRunner(config)
    started = time.perf_counter()
    try:
        report = run_command(runner, args)
    except InvariantViolation as exc:
        logger.error("Internal invariant violated: %s", exc)
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT_VIOLATION
    except (ValueError, ValidationError, OSError) as exc:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    elapsed = time.perf_counter() - started

    if config.json_output:
        print(report.to_json())
    elif config.quiet:
        print(report.summary())
    else:
        print(report.render_text())
        if config.show_timing:
            print(f"elapsed: {elapsed * 1000:.1f} ms")
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
