"""
Score Command

Score a single CVSS v3.1 base vector.
"""

import argparse

from cvss_aggregator.commands.base import BaseCommand, CommandResult
from cvss_aggregator.config import Config
from cvss_aggregator.cvss import base_score, parse_vector, render_vector, severity_rating
from cvss_aggregator.utils import format_display


class ScoreCommand(BaseCommand):
    """
    Print the base score and canonical form of a vector.

    Output: "<score> <canonical vector> <rating>", e.g.
    "9.8 CVSS:3.1/AV:N/AC:L/PR:N/UI:N/S:U/C:H/I:H/A:H Critical"
    """

    @property
    def name(self) -> str:
        return "score"

    @property
    def description(self) -> str:
        return "Compute the CVSS v3.1 base score of a vector"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.epilog = (
            "Output: '<score> <canonical vector> <rating>'. The score is always the "
            "first whitespace-separated field, so `cut -d' ' -f1` extracts it."
        )
        parser.add_argument(
            "vector",
            help='Base vector, e.g. "AV:N/AC:L/PR:N/UI:N/S:U/C:H/I:H/A:H" (prefix optional)',
        )

    def run(self, args: argparse.Namespace, config: Config) -> CommandResult:
        vector = parse_vector(args.vector)
        score = base_score(vector)
        line = f"{format_display(score)} {render_vector(vector)} {severity_rating(score)}\n"
        return self.create_success_result(line)
