"""
Base Command Classes
Abstract base class for CLI subcommands.
"""

import argparse
from abc import ABC, abstractmethod
from dataclasses import dataclass, field

from cvss_aggregator.config import Config
from cvss_aggregator.models import AggregatorError, ValidationErrors
from cvss_aggregator.utils import Logger

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2


@dataclass
class CommandResult:
    """Payload for stdout plus diagnostic lines for stderr."""
    exit_code: int = EXIT_OK
    stdout: bytes = b""
    diagnostics: list[str] = field(default_factory=list)

    @property
    def success(self) -> bool:
        return self.exit_code == EXIT_OK


class BaseCommand(ABC):
    """Abstract base class for all subcommands."""

    def __init__(self, logger: Logger):
        self.logger = logger

    @property
    @abstractmethod
    def name(self) -> str:
        """Subcommand name."""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        """One-line help text."""
        pass

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Declare the subcommand's flags."""
        pass

    @abstractmethod
    def run(self, args: argparse.Namespace, config: Config) -> CommandResult:
        """Run the subcommand. Domain errors propagate as AggregatorError."""
        pass

    def execute(self, args: argparse.Namespace, config: Config) -> CommandResult:
        """Run the subcommand, turning domain errors into exit code 1."""
        try:
            result = self.run(args, config)
        except AggregatorError as error:
            return self.handle_error(error)
        self.logger.debug(f"Command executed: {self.name}", extra={
            'command': self.name,
            'exit_code': result.exit_code,
        })
        return result

    def handle_error(self, error: AggregatorError) -> CommandResult:
        """Handle errors during command execution."""
        self.logger.info(f"{self.name} failed with {error.code.value}")
        return CommandResult(exit_code=EXIT_ERROR, diagnostics=error_lines(error))

    def create_success_result(self, payload: bytes | str) -> CommandResult:
        if isinstance(payload, str):
            payload = payload.encode("utf-8")
        return CommandResult(exit_code=EXIT_OK, stdout=payload)


def error_lines(error: AggregatorError) -> list[str]:
    """
    Diagnostic lines for an error: "<ErrorName>: <message>", followed by
    one line per issue for validation errors.
    """
    name = type(error).__name__
    if isinstance(error, ValidationErrors):
        return [f"{name}: {len(error.issues)} violation(s)"] + [
            f"  {issue}" for issue in error.issues
        ]
    return [f"{name}: {error.message}"]


def positive_int(text: str) -> int:
    """argparse type for integers >= 1."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def non_negative_int(text: str) -> int:
    """argparse type for integers >= 0."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value
