"""
Aggregate Command

Full pipeline over a graph specification and a deployment context:
factors, lambda, corrected scores, sigma, Gamma.
"""

import argparse

from cvss_aggregator.aggregation import assess
from cvss_aggregator.commands.base import BaseCommand, CommandResult
from cvss_aggregator.config import Config
from cvss_aggregator.factors import INTERPOLATIONS, AverageKind, get_interpolation
from cvss_aggregator.ingest import ReportFormat, build_report, load_context, load_graph, render_report


class AggregateCommand(BaseCommand):

    @property
    def name(self) -> str:
        return "aggregate"

    @property
    def description(self) -> str:
        return "Aggregate every vulnerability of a system into one score"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--graph", required=True, help="Graph specification (JSON or YAML)")
        parser.add_argument("--context", required=True, help="Deployment context file")
        parser.add_argument(
            "--sigma",
            choices=[kind.value for kind in AverageKind],
            help="Average used for sigma (default: arithmetic)",
        )
        parser.add_argument(
            "--format",
            choices=[fmt.value for fmt in ReportFormat],
            help="Report format (default: text)",
        )
        parser.add_argument(
            "--interpolation",
            choices=sorted(INTERPOLATIONS),
            help="Deepness interpolation (default: linear)",
        )
        parser.add_argument(
            "--explain",
            action="store_true",
            help="Add the Bayesian sum steps, contribution ranking and branch scores",
        )

    def run(self, args: argparse.Namespace, config: Config) -> CommandResult:
        sigma_kind = AverageKind(args.sigma or config.sigma_kind)
        fmt = ReportFormat(args.format or config.report_format)
        interpolation = get_interpolation(args.interpolation or config.interpolation)

        graph = load_graph(args.graph)
        context = load_context(args.context)
        assessment = assess(graph, context, sigma_kind, interpolation)

        report = build_report(assessment, explain=args.explain)
        return self.create_success_result(render_report(report, fmt))
