"""
Commands Module
CLI subcommands and their registry.
"""

from .base import (
    EXIT_OK,
    EXIT_ERROR,
    EXIT_USAGE,
    BaseCommand,
    CommandResult,
    error_lines,
    positive_int,
    non_negative_int,
)
from .registry import CommandRegistry
from .score import ScoreCommand
from .validate import ValidateCommand
from .aggregate import AggregateCommand
from .simulate import SimulateCommand

__all__ = [
    # Base
    "EXIT_OK",
    "EXIT_ERROR",
    "EXIT_USAGE",
    "BaseCommand",
    "CommandResult",
    "error_lines",
    "positive_int",
    "non_negative_int",
    # Registry
    "CommandRegistry",
    # Commands
    "ScoreCommand",
    "ValidateCommand",
    "AggregateCommand",
    "SimulateCommand",
    "create_registry",
]


def create_registry(logger) -> CommandRegistry:
    """Registry with every built-in command, in help order."""
    registry = CommandRegistry(logger)
    for command_class in (ScoreCommand, ValidateCommand, AggregateCommand, SimulateCommand):
        registry.register(command_class(logger))
    return registry
