# coding=utf-8
# Copyright (c) dppf contributors
"""dppf command-line interface. This is the file which builds the main parser."""
from __future__ import annotations

import argparse
import pathlib
import sys
from typing import Any, Iterable

from dppf._exceptions import DppfError
from dppf.config import SUITES, RunConfig
from dppf.logging import build_cli_logger
from dppf.records import render_record


def dir_path(path: str) -> pathlib.Path:
    """Check if the path is a valid directory.
    Parameters
    ----------
    path : str
    Returns
    -------
    pathlib.Path
        The path as a pathlib.Path object.
    """
    _path = pathlib.Path(path)
    if _path.is_dir():
        return _path
    raise argparse.ArgumentTypeError(f"{path} is not a valid directory.")


def file_path(path: str, need_exists: bool = True) -> pathlib.Path:
    """Check if the path is a valid file.
    Parameters
    ----------
    path : str
    need_exists : bool

    Returns
    -------
    pathlib.Path
        The path as a pathlib.Path object.
    """
    _path = pathlib.Path(path)
    if need_exists:
        if _path.is_file():
            return _path
        raise argparse.ArgumentTypeError(f"{path} is not a valid file.")
    return _path


def group_source(source: str) -> str:
    """Accept ``catalog:NAME`` as is, anything else must be an existing ingestion file."""
    if source.startswith("catalog:"):
        return source
    return str(file_path(source))


def add_run_arguments(parser: argparse.ArgumentParser, suite: bool = False, selectors: bool = False) -> None:
    """The flags shared by the analysis commands."""
    parser.add_argument(
        "--group",
        dest="groups",
        type=group_source,
        action="append",
        default=[],
        help="Group source, either catalog:NAME or a path to a JSON ingestion file. Can be repeated.",
    )
    parser.add_argument("--prime", type=int, default=2, help="The prime p.")
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=["pretty", "records"],
        default="pretty",
        help="Human readable tables, or one JSON record per line.",
    )
    parser.add_argument(
        "--max-order",
        type=int,
        default=24,
        help="Largest catalog group to use when no group is given.",
    )
    if suite:
        parser.add_argument("--suite", choices=[*SUITES, "all"], default="all", help="Verification suite to run.")
        parser.add_argument(
            "--num-workers",
            type=int,
            default=0,
            help="Number of parallel processes to run. When 0 multiprocessing is disabled.",
        )
        parser.add_argument(
            "--silent",
            action="store_true",
            help="If set, will not show progress bar.",
        )
    if selectors:
        parser.add_argument("--pair", type=int, help="Index of a pair class, as printed by analyze.")
        parser.add_argument("--dpair", type=int, help="Index of a diagonal pair class of the product.")


def build_config(args: argparse.Namespace, command: str) -> RunConfig:
    """Validate the parsed arguments, raising :class:`argparse.ArgumentTypeError` on invalid values."""
    values = {
        key: getattr(args, key)
        for key in ("groups", "prime", "output_format", "max_order", "suite", "pair", "dpair", "num_workers")
        if hasattr(args, key) and getattr(args, key) is not None
    }
    try:
        return RunConfig(command=command, **values)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def emit(config: RunConfig, records: Iterable[dict[str, Any]], lines: Iterable[str]) -> None:
    """Print either the records or the pretty lines of a command."""
    if config.output_format == "records":
        for record in records:
            print(render_record(record))
        return
    for line in lines:
        print(line)


def main() -> None:
    """
    Console script for dppf.
    """
    root_parser = argparse.ArgumentParser(formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    root_parser.add_argument("-v", "--verbose", action="count", default=0, help="Verbosity, can be repeated.")
    root_parser.add_argument("--log-to-file", action="store_true", help="Also write the log to a file.")
    root_parser.add_argument("--log-dir", type=dir_path, default=".", help="Directory for the log file.")

    root_subparsers = root_parser.add_subparsers(help="Possible dppf commands to run.")
    root_subparsers.required = True
    root_subparsers.dest = "subcommand"

    # Prevent circular import
    from dppf.cli.analysis import register_parser as register_analysis_subcommands

    # Group analysis, idempotents, decomposition and essential algebras.
    register_analysis_subcommands(root_subparsers)

    # Prevent circular import
    from dppf.cli.compose import register_parser as register_compose_subcommand

    register_compose_subcommand(root_subparsers)

    # Prevent circular import
    from dppf.cli.verify import register_parser as register_verify_subcommand

    register_verify_subcommand(root_subparsers)

    args = root_parser.parse_args()
    build_cli_logger("dppf", args.log_to_file, args.verbose, args.log_dir)
    try:
        args.subcommand(args)
    except argparse.ArgumentTypeError as e:
        root_parser.error(str(e))
    except DppfError as e:
        print(f"dppf: error: {e}", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
