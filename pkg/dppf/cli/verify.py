# coding=utf-8
# Copyright (c) dppf contributors
"""CLI command for the verification harness. The exit status is 0 if and only if no check failed."""
from __future__ import annotations

import argparse
import sys

from dppf.cli import add_run_arguments, build_config, emit
from dppf.verification import run_verification


def verify(args: argparse.Namespace) -> None:
    config = build_config(args, "verify")
    report = run_verification(config, show_progress=not args.silent)

    lines = [
        f"{f['suite']} {f['group']} p={f['p']}: {f['subject']} (expected {f['expected']}, computed {f['computed']})"
        for f in report.failures
    ]
    lines.append(f"{report.tasks} tasks, {report.checks} checks, {len(report.failures)} failures")
    records = [{"kind": "failure", **f} for f in report.failures]
    records.append(
        {"kind": "summary", "tasks": report.tasks, "checks": report.checks, "failures": len(report.failures)}
    )
    emit(config, records, lines)
    if not report.passed:
        sys.exit(1)


def register_parser(parser: argparse._SubParsersAction) -> None:  # type: ignore
    """Register the verify command to a root parser."""
    verify_parser = parser.add_parser("verify", help="Run the verification suites over the catalog.")
    add_run_arguments(verify_parser, suite=True)
    verify_parser.set_defaults(subcommand=verify)
