#!/usr/bin/env python3
"""
CVSS Aggregator CLI Entry Point

Subcommands:
- score: base score of one vector
- validate: check a graph specification
- aggregate: aggregate a system's vulnerabilities into one score
- simulate: seeded synthetic experiments

Exit codes: 0 success, 1 domain or validation error, 2 usage error.
Payload goes to stdout, diagnostics and logs to stderr.
"""

import argparse
import sys
from typing import Sequence

from cvss_aggregator import __package_name__, __version__
from cvss_aggregator.commands import EXIT_OK, EXIT_USAGE, CommandRegistry, create_registry
from cvss_aggregator.config import ConfigManager
from cvss_aggregator.models import ConfigError
from cvss_aggregator.utils import Logger

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def print_version():
    """Print version info."""
    print(f"{__package_name__} v{__version__}")


def build_parser(registry: CommandRegistry) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvss-aggregator",
        description="Aggregate the CVSS scores of a composite system into one severity value",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""\
Examples:
  cvss-aggregator score AV:N/AC:L/PR:N/UI:N/S:U/C:H/I:H/A:H
  cvss-aggregator validate --graph openplc_v3.json
  cvss-aggregator aggregate --graph openplc_v3.json --context insider.json
  cvss-aggregator aggregate --graph openplc_v3.json --context insider.json --format json --explain
  cvss-aggregator simulate --size 64 --shape uniform --seed 7
"""
    )
    parser.add_argument(
        "--version", "-v",
        action="store_true",
        help="Show version and exit"
    )
    parser.add_argument(
        "--config",
        help="YAML configuration file"
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        help="Log level for stderr diagnostics (default: WARNING)"
    )
    registry.add_subparsers(parser)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Main CLI entry point. Returns the process exit code."""
    logger = Logger()
    registry = create_registry(logger)
    parser = build_parser(registry)

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 after --help
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.version:
        print_version()
        return EXIT_OK

    if args.command is None:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: a command is required", file=sys.stderr)
        return EXIT_USAGE

    try:
        config = ConfigManager.get_instance().load(args.config, log_level=args.log_level)
    except ConfigError as e:
        print(f"ConfigError: {e.message}", file=sys.stderr)
        return EXIT_USAGE
    logger.setLevel(config.log_level)

    result = registry.execute(args.command, args, config)
    if result.stdout:
        sys.stdout.write(result.stdout.decode("utf-8"))
        sys.stdout.flush()
    for line in result.diagnostics:
        print(line, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
