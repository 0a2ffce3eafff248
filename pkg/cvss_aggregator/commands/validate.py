"""
Validate Command

Check a graph specification (and optionally a context file) without
aggregating. Every violation is listed.
"""

import argparse

from cvss_aggregator.commands.base import EXIT_ERROR, BaseCommand, CommandResult
from cvss_aggregator.config import Config
from cvss_aggregator.ingest import load_context, load_graph
from cvss_aggregator.models import (
    AggregatorError,
    ValidationErrors,
    ValidationIssue,
    ValidationResult,
)


class ValidateCommand(BaseCommand):

    @property
    def name(self) -> str:
        return "validate"

    @property
    def description(self) -> str:
        return "Validate a graph specification file; prints 'ok' or every violation"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--graph", required=True, help="Graph specification (JSON or YAML)")
        parser.add_argument("--context", help="Deployment context file to check as well")

    def validate(self, graph_path: str, context_path: str | None = None) -> ValidationResult:
        """Collect every problem with the given files."""
        errors: list[ValidationIssue] = []
        for path, loader in ((graph_path, load_graph), (context_path, load_context)):
            if path is None:
                continue
            try:
                loader(path)
            except ValidationErrors as e:
                errors.extend(e.issues)
            except AggregatorError as e:
                errors.append(ValidationIssue(code=e.code, subject=path, message=e.message))
        return ValidationResult(valid=not errors, errors=errors)

    def run(self, args: argparse.Namespace, config: Config) -> CommandResult:
        result = self.validate(args.graph, args.context)
        if result.valid:
            return self.create_success_result("ok\n")

        self.logger.info(f"{args.graph}: {len(result.errors)} violation(s)")
        payload = "".join(f"{issue}\n" for issue in result.errors)
        return CommandResult(exit_code=EXIT_ERROR, stdout=payload.encode("utf-8"))
