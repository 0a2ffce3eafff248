"""
Command Registry
Manages subcommand registration, parser wiring and dispatch.
"""

import argparse
from typing import Dict, List, Optional

from cvss_aggregator.commands.base import BaseCommand, CommandResult
from cvss_aggregator.config import Config


class CommandRegistry:
    """Command Registry Implementation."""

    def __init__(self, logger):
        self.logger = logger
        self.commands: Dict[str, BaseCommand] = {}

    def register(self, command: BaseCommand) -> None:
        """Register a command with the registry."""
        if command.name in self.commands:
            raise ValueError(f"Command {command.name} is already registered")

        self.commands[command.name] = command
        self.logger.debug(f"Command registered: {command.name}")

    def get(self, name: str) -> Optional[BaseCommand]:
        """Get a command by name."""
        return self.commands.get(name)

    def list_commands(self) -> List[BaseCommand]:
        return list(self.commands.values())

    def add_subparsers(self, parser: argparse.ArgumentParser) -> None:
        """Add one subparser per registered command, in registration order."""
        subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
        for command in self.list_commands():
            sub = subparsers.add_parser(
                command.name, help=command.description, description=command.description
            )
            command.add_arguments(sub)

    def execute(self, name: str, args: argparse.Namespace, config: Config) -> CommandResult:
        """Execute a command by name."""
        command = self.get(name)
        if not command:
            raise ValueError(f"Command {name} not found")
        return command.execute(args, config)
