"""Tests for the subcommands and their registry."""

import argparse
import json

import pytest

from cvss_aggregator.commands import (
    EXIT_ERROR,
    EXIT_OK,
    AggregateCommand,
    CommandRegistry,
    ScoreCommand,
    SimulateCommand,
    ValidateCommand,
    create_registry,
    error_lines,
    non_negative_int,
    positive_int,
)
from cvss_aggregator.models import ErrorCode, ParseError, ValidationErrors, ValidationIssue
from tests.conftest import FIXTURES

pytestmark = [pytest.mark.unit, pytest.mark.cli]

MALFORMED = FIXTURES / "malformed"


def aggregate_args(graph=FIXTURES / "openplc_v3.json", context=FIXTURES / "insider_context.json",
                   **overrides):
    values = {
        "graph": str(graph),
        "context": str(context),
        "sigma": None,
        "format": None,
        "interpolation": None,
        "explain": False,
    }
    values.update(overrides)
    return argparse.Namespace(**values)


class TestScoreCommand:
    """Test ScoreCommand."""

    def test_score(self, logger, default_config):
        """Should print score, canonical vector and rating."""
        result = ScoreCommand(logger).execute(
            argparse.Namespace(vector="AV:N/AC:L/PR:N/UI:N/S:U/C:H/I:H/A:H"), default_config
        )
        assert result.success
        assert result.stdout == b"9.8 CVSS:3.1/AV:N/AC:L/PR:N/UI:N/S:U/C:H/I:H/A:H Critical\n"

    def test_malformed(self, logger, default_config):
        """Should return exit code 1 with the error name."""
        result = ScoreCommand(logger).execute(
            argparse.Namespace(vector="AV:X/AC:L/PR:N/UI:N/S:U/C:H/I:H/A:H"), default_config
        )
        assert result.exit_code == EXIT_ERROR
        assert result.stdout == b""
        assert result.diagnostics[0].startswith("MalformedVector:")


class TestValidateCommand:
    """Test ValidateCommand."""

    def test_valid(self, logger):
        result = ValidateCommand(logger).validate(
            str(FIXTURES / "openplc_v3.json"), str(FIXTURES / "insider_context.json")
        )
        assert result.valid
        assert result.errors == []

    def test_collects_graph_and_context_errors(self, logger):
        result = ValidateCommand(logger).validate(
            str(MALFORMED / "dangling_edge.json"), str(MALFORMED / "context_unknown_vector.json")
        )
        assert not result.valid
        codes = [issue.code for issue in result.errors]
        assert codes == [ErrorCode.UNKNOWN_ASSET, ErrorCode.UNKNOWN_VECTOR]

    def test_parse_error(self, logger):
        result = ValidateCommand(logger).validate(str(MALFORMED / "truncated.json"))
        assert [issue.code for issue in result.errors] == [ErrorCode.PARSE_ERROR]

    def test_violations_on_stdout(self, logger, default_config):
        args = argparse.Namespace(graph=str(MALFORMED / "score_mismatch.json"), context=None)
        result = ValidateCommand(logger).execute(args, default_config)
        assert result.exit_code == EXIT_ERROR
        assert result.stdout.decode().startswith("SCORE_MISMATCH: CVE-2021-0002")


class TestAggregateCommand:
    """Test AggregateCommand."""

    def test_text_default(self, logger, default_config):
        result = AggregateCommand(logger).execute(aggregate_args(), default_config)
        assert result.exit_code == EXIT_OK
        assert result.stdout.decode().rstrip().endswith("aggregated = 9.1")

    def test_flags_beat_config(self, logger, default_config):
        config = default_config.with_overrides(report_format="text", sigma_kind="arithmetic")
        result = AggregateCommand(logger).execute(
            aggregate_args(format="json", sigma="harmonic"), config
        )
        payload = json.loads(result.stdout)
        assert payload["sigma_kind"] == "harmonic"

    def test_config_used_without_flags(self, logger, default_config):
        config = default_config.with_overrides(report_format="json")
        result = AggregateCommand(logger).execute(aggregate_args(), config)
        assert json.loads(result.stdout)["gamma_display"] == "9.1"

    def test_missing_graph(self, logger, default_config, tmp_path):
        result = AggregateCommand(logger).execute(
            aggregate_args(graph=tmp_path / "none.json"), default_config
        )
        assert result.exit_code == EXIT_ERROR
        assert result.diagnostics[0].startswith("ParseError:")


class TestSimulateCommand:
    """Test SimulateCommand."""

    def test_single_shape(self, logger, default_config):
        args = argparse.Namespace(size=8, shape="uniform", seed=1, sigma=None, format="csv")
        result = SimulateCommand(logger).execute(args, default_config)
        lines = result.stdout.decode().splitlines()
        assert len(lines) == 2
        assert lines[1].startswith("uniform,")

    def test_all_shapes_from_config(self, logger, default_config):
        args = argparse.Namespace(size=None, shape=None, seed=None, sigma=None, format="csv")
        config = default_config.with_overrides(sim_size=4)
        result = SimulateCommand(logger).execute(args, config)
        assert len(result.stdout.decode().splitlines()) == 6


class TestErrorLines:
    """Test error_lines."""

    def test_plain_error(self):
        assert error_lines(ParseError("g.json", "bad", 2, 5)) == ["ParseError: g.json:2:5: bad"]

    def test_validation_errors(self):
        issues = [
            ValidationIssue(ErrorCode.SELF_LOOP, "lib", "self-loop on lib"),
            ValidationIssue(ErrorCode.UNREACHABLE, "orphan", "orphan is unreachable"),
        ]
        assert error_lines(ValidationErrors(issues)) == [
            "ValidationErrors: 2 violation(s)",
            "  SELF_LOOP: self-loop on lib",
            "  UNREACHABLE: orphan is unreachable",
        ]


class TestArgumentTypes:
    """Test the integer argument types."""

    def test_positive_int(self):
        assert positive_int("3") == 3
        for text in ("0", "-1", "x"):
            with pytest.raises(argparse.ArgumentTypeError):
                positive_int(text)

    def test_non_negative_int(self):
        assert non_negative_int("0") == 0
        with pytest.raises(argparse.ArgumentTypeError):
            non_negative_int("-2")


class TestCommandRegistry:
    """Test CommandRegistry."""

    def test_builtin_commands(self, logger):
        registry = create_registry(logger)
        assert [c.name for c in registry.list_commands()] == [
            "score", "validate", "aggregate", "simulate",
        ]
        assert registry.get("aggregate").name == "aggregate"
        assert registry.get("explain") is None

    def test_duplicate_registration(self, logger):
        registry = CommandRegistry(logger)
        registry.register(ScoreCommand(logger))
        with pytest.raises(ValueError):
            registry.register(ScoreCommand(logger))

    def test_unknown_command(self, logger, default_config):
        with pytest.raises(ValueError):
            CommandRegistry(logger).execute("score", argparse.Namespace(), default_config)

    def test_subparsers(self, logger):
        parser = argparse.ArgumentParser()
        create_registry(logger).add_subparsers(parser)
        args = parser.parse_args(["simulate", "--size", "8"])
        assert args.command == "simulate"
        assert args.size == 8
