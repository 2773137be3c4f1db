# -*- coding: utf-8 -*-
"""
seaweed-index -- compute the index of seaweed meanders and the partition statistics built on it.

Every command writes a deterministic report to standard output (or the file named by --output) and diagnostics to
standard error. Exit codes: 0 ok, 2 usage or parse error, 3 verification mismatch, 4 internal invariant breach.
"""

import argparse
import logging
import sys
import traceback
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from seaweed_index import __version__
from seaweed_index.lib import constants
from seaweed_index.lib.log import LOGGER, AppLogger
from seaweed_index.lib.meander import EmptyMeanderError, build_meander, components, index_dk, parse_seaweed_type
from seaweed_index.lib.partition import ParseError
from seaweed_index.lib.report import (
    CommandConfig,
    render_lines,
    render_mapping,
    render_records,
    render_table,
    status_label,
    write_output,
)
from seaweed_index.lib.series import SERIES
from seaweed_index.lib.settings import SettingsManager
from seaweed_index.lib.stats import (
    VerificationMismatch,
    breakdown_holds,
    claimed_tail,
    conjecture_rows,
    frobenius_breakdown,
    frobenius_counts,
    frobenius_partitions,
    frobenius_period,
    ones_table,
    stabilization_report,
    stat_rows,
    tail_mismatches,
)
from seaweed_index.lib.util import CountOverflowError
from seaweed_index.lib.winding import WindingError, wind_down

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3
EXIT_INVARIANT = 4

# A command returns its rendered report and whether every check it made held
CommandResult = Tuple[str, bool]


def _format_arcs(arcs) -> str:
    return " ".join(f"{j}-{k}" for j, k in sorted(arcs))


def cmd_index(args: argparse.Namespace, config: CommandConfig) -> CommandResult:
    """
    Index of a seaweed type with its component breakdown.
    """
    seaweed = parse_seaweed_type(args.type)
    meander = build_meander(seaweed)
    summary = components(meander)
    record = {
        "type": str(seaweed),
        "index": index_dk(seaweed),
        "cycles": summary.cycles,
        "paths": summary.paths,
        "top_arcs": _format_arcs(meander.top_arcs),
        "bottom_arcs": _format_arcs(meander.bottom_arcs),
    }
    return render_mapping(record, config.output_format), True


def cmd_wind(args: argparse.Namespace, config: CommandConfig) -> CommandResult:
    """
    Winding-down trace of a seaweed type, one move per line, and the reconstructed index.
    """
    trace = wind_down(parse_seaweed_type(args.type))
    if config.output_format == "json":
        # Bare array of moves; the index goes to the log
        LOGGER.info(f"{trace.start}: index={trace.index}")
        return render_records(trace.to_records(), "json"), True
    if config.output_format == "csv":
        rows = [[step, record["kind"], record["result"]] for step, record in enumerate(trace.to_records(), start=1)]
        return render_table(["step", "kind", "result"], rows, "csv"), True
    return render_lines(trace.to_lines() + [f"index={trace.index}"]), True


def cmd_ones_table(args: argparse.Namespace, config: CommandConfig) -> CommandResult:
    table = ones_table(args.n_max, args.i_max, jobs=config.jobs)
    return render_table(table.header(), table.rows(), config.output_format), True


def cmd_stabilize(args: argparse.Namespace, config: CommandConfig) -> CommandResult:
    rows = stabilization_report(args.i_max)
    records = [{**row.to_dict(), "status": status_label(row.match)} for row in rows]
    return render_records(records, config.output_format), all(row.match for row in rows)


def cmd_frobenius(args: argparse.Namespace, config: CommandConfig) -> CommandResult:
    """
    |P(n, d)| for n = 1..n_max, or with --list the Frobenius partitions themselves.
    """
    if args.list:
        records = [
            {"n": n, "d": args.d, "partition": partition.frequency_notation()}
            for n in range(1, args.n_max + 1)
            for partition in frobenius_partitions(n, args.d)
        ]
        return render_records(records, config.output_format), True

    counts = frobenius_counts(args.d, args.n_max, jobs=config.jobs)
    return render_records([count.to_dict() for count in counts], config.output_format), True


def cmd_period(args: argparse.Namespace, config: CommandConfig) -> CommandResult:
    """
    Detect the period of |P(n, d)| and check it against the stated tail for d, when there is one.
    """
    settings = SettingsManager.get_instance()
    counts = frobenius_counts(args.d, args.n_max, jobs=config.jobs)
    report = frobenius_period(counts, min_repeats=settings.min_repeats.value)
    mismatches = tail_mismatches(counts, args.d)
    for n, expected, counted in mismatches:
        LOGGER.error(f"|P({n}, {args.d})| = {counted}, expected {expected}")

    tail = claimed_tail(args.d)
    if report is None:
        record = {"d": args.d, "period": None, "verified_up_to": args.n_max}
    else:
        record = report.to_dict()
    record["mismatches"] = len(mismatches)
    if tail is not None:
        record["status"] = status_label(report is not None and not mismatches)

    ok = tail is None or (report is not None and not mismatches)
    return render_mapping(record, config.output_format), ok


def cmd_breakdown(args: argparse.Namespace, config: CommandConfig) -> CommandResult:
    rows = frobenius_breakdown(range(2, args.m_max + 1))
    records = [row.to_dict() for row in rows]
    return render_records(records, config.output_format), breakdown_holds(rows)


def cmd_conjecture(args: argparse.Namespace, config: CommandConfig) -> CommandResult:
    """
    e_n, o_n, |e_n - o_n| and the product coefficient for n = 1..n_max.
    """
    rows = conjecture_rows(args.n_max, jobs=config.jobs)
    records = [
        {
            "n": row.tally.n,
            "e": row.tally.even_count,
            "o": row.tally.odd_count,
            "difference": row.tally.difference,
            "coefficient": row.coefficient,
            "status": status_label(row.match),
        }
        for row in rows
    ]
    return render_records(records, config.output_format), all(row.match for row in rows)


def cmd_stat(args: argparse.Namespace, config: CommandConfig) -> CommandResult:
    rows = stat_rows(args.kind, args.n_max, jobs=config.jobs)
    records = [{"n": row.n, "count": row.count, "claimed": row.claimed, "status": status_label(row.match)} for row in rows]
    return render_records(records, config.output_format), all(row.match for row in rows)


def cmd_series(args: argparse.Namespace, config: CommandConfig) -> CommandResult:
    series = SERIES[args.which](args.order)
    return render_table(["n", "coefficient"], series.rows(), config.output_format), True


COMMANDS: Dict[str, Callable[[argparse.Namespace, CommandConfig], CommandResult]] = {
    "index": cmd_index,
    "wind": cmd_wind,
    "ones-table": cmd_ones_table,
    "stabilize": cmd_stabilize,
    "frobenius": cmd_frobenius,
    "period": cmd_period,
    "breakdown": cmd_breakdown,
    "conjecture": cmd_conjecture,
    "stat": cmd_stat,
    "series": cmd_series,
}


def init_settings():
    """
    Initialize the run settings from their defaults.
    """
    settings = SettingsManager.get_instance()
    settings.reset()

    settings.output_format = ("output/format", str, constants.OUTPUT_FORMAT_DEFAULT)
    settings.jobs = ("run/jobs", int, constants.JOBS_DEFAULT)
    settings.min_repeats = ("period/min_repeats", int, constants.MIN_REPEATS_DEFAULT)


def bounded_int(text: str) -> int:
    """
    argparse type for a positive integer no larger than the bound cap.
    """
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if not 1 <= value <= constants.N_MAX_CAP:
        raise argparse.ArgumentTypeError(f"{value} is outside [1, {constants.N_MAX_CAP}]")
    return value


def breakdown_bound(text: str) -> int:
    """
    argparse type for --m-max: a bounded integer large enough to compare two witnesses.
    """
    value = bounded_int(text)
    if value < constants.BREAKDOWN_M_MIN:
        raise argparse.ArgumentTypeError(f"--m-max must be at least {constants.BREAKDOWN_M_MIN}, got {value}")
    return value


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """
    Parse command line arguments.
    """
    parser = argparse.ArgumentParser(
        prog=constants.APP_NAME,
        description="Index of seaweed meanders and the partition statistics built on it",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="Verbose logging to console")
    parser.add_argument("--log", action="store_true", help="Also log to a dated file in the user log directory")
    parser.add_argument("--log-file", type=Path, help="Also log to the given file")
    parser.add_argument("--jobs", type=bounded_int, default=constants.JOBS_DEFAULT, help="Worker processes")
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=constants.OUTPUT_FORMATS,
        default=constants.OUTPUT_FORMAT_DEFAULT,
        help="Output format",
    )
    parser.add_argument("--output", type=Path, help="Write the report to this file instead of standard output")

    subparsers = parser.add_subparsers(dest="command", required=True)

    index_parser = subparsers.add_parser("index", help="Index and components of a seaweed type")
    index_parser.add_argument("type", help="Seaweed type, e.g. 2|4/1|2|3")

    wind_parser = subparsers.add_parser("wind", help="Wind a seaweed type down to the empty type")
    wind_parser.add_argument("type", help="Seaweed type, e.g. 17|3/10|4|6")

    table_parser = subparsers.add_parser("ones-table", help="Partitions of n by their all-ones index")
    table_parser.add_argument("--n-max", type=bounded_int, required=True)
    table_parser.add_argument("--i-max", type=bounded_int, required=True)

    stabilize_parser = subparsers.add_parser("stabilize", help="Check the stabilized all-ones counts")
    stabilize_parser.add_argument("--i-max", type=bounded_int, required=True)

    frobenius_parser = subparsers.add_parser("frobenius", help="Frobenius partitions with bounded parts")
    frobenius_parser.add_argument("--d", type=bounded_int, required=True, help="Largest part")
    frobenius_parser.add_argument("--n-max", type=bounded_int, required=True)
    frobenius_parser.add_argument("--list", action="store_true", help="List the partitions instead of counting them")

    period_parser = subparsers.add_parser("period", help="Detect the period of the Frobenius counts")
    period_parser.add_argument("--d", type=bounded_int, required=True, help="Largest part")
    period_parser.add_argument("--n-max", type=bounded_int, required=True)
    period_parser.add_argument("--min-repeats", type=bounded_int, default=constants.MIN_REPEATS_DEFAULT)

    breakdown_parser = subparsers.add_parser("breakdown", help="Growth of the Frobenius counts at d = 8")
    breakdown_parser.add_argument("--m-max", type=breakdown_bound, default=max(constants.BREAKDOWN_M_DEFAULT))

    conjecture_parser = subparsers.add_parser("conjecture", help="Index parity over odd-part partitions")
    conjecture_parser.add_argument("--n-max", type=bounded_int, required=True)

    stat_parser = subparsers.add_parser("stat", help="Reverse and conjugate pairing statistics")
    stat_parser.add_argument("kind", choices=("rev", "conjugate"))
    stat_parser.add_argument("--n-max", type=bounded_int, required=True)

    series_parser = subparsers.add_parser("series", help="Generating function coefficients")
    series_parser.add_argument("which", choices=sorted(SERIES))
    series_parser.add_argument("--order", type=bounded_int, required=True)

    return parser.parse_args(argv)


def _configure_logging(args: argparse.Namespace):
    app_logger = AppLogger.get_instance()
    app_logger.set_stream_level(logging.DEBUG if args.verbose else logging.WARN)
    if args.log_file is not None:
        app_logger.add_file_handler(args.log_file)
    elif args.log:
        path = app_logger.add_file_handler()
        LOGGER.debug(f"Logging to {path}")


def main(argv: Optional[List[str]] = None) -> int:
    # Parse command line arguments
    args = parse_args(argv)

    # Set up logging
    _configure_logging(args)

    init_settings()
    settings = SettingsManager.get_instance()
    settings.output_format.value = args.output_format
    settings.jobs.value = args.jobs
    if args.command == "period":
        settings.min_repeats.value = args.min_repeats

    config = CommandConfig(
        command=args.command,
        output_format=settings.output_format.value,
        output=args.output,
        jobs=settings.jobs.value,
    )

    try:
        text, ok = COMMANDS[args.command](args, config)
        write_output(text, config, sys.stdout)
    except (ParseError, EmptyMeanderError) as e:
        LOGGER.error(f"Invalid input: {e}")
        return EXIT_USAGE
    except VerificationMismatch as e:
        LOGGER.error(f"Verification failed: {e}")
        return EXIT_MISMATCH
    except (WindingError, CountOverflowError) as e:
        LOGGER.critical(f"Internal invariant breached: {e}")
        LOGGER.debug(traceback.format_exc())  # Log the full traceback
        return EXIT_INVARIANT
    except Exception as e:
        LOGGER.critical(f"Fatal exception: {e}")
        LOGGER.debug(traceback.format_exc())  # Log the full traceback
        return EXIT_FAILURE

    if not ok:
        LOGGER.error(f"{args.command}: verification found a mismatch")
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
