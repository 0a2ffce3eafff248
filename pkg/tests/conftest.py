"""
Shared pytest fixtures for CVSS Aggregator tests

Fixture file paths, loaded OpenPLC graph and contexts, and small graph
builders used across the test modules.
"""

import logging
import sys
from pathlib import Path
from unittest.mock import Mock

import pytest

# Add project root to Python path
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

FIXTURES = Path(__file__).parent / "fixtures"

# Column values of the OpenPLC use case, in file order
OPENPLC_CVES = [
    "CVE-2017-18269",
    "CVE-2018-11236",
    "CVE-2018-11237",
    "CVE-2018-12886",
    "CVE-2019-15847",
]


# ============================================================================
# Helpers
# ============================================================================

def make_vuln(cve: str, asset: str, vector: str = "AV:N/AC:L/PR:N/UI:N/S:U/C:H/I:H/A:H",
              maturity: str = "poc", functional: bool = True):
    """Vulnerability with its base score computed from the vector."""
    from cvss_aggregator.cvss import base_score, parse_vector
    from cvss_aggregator.graph import ExploitMaturity, Vulnerability

    parsed = parse_vector(vector)
    return Vulnerability(
        cve=cve,
        vector=parsed,
        base_score=base_score(parsed),
        exploit_maturity=ExploitMaturity(maturity),
        affects_functionality=functional,
        asset=asset,
    )


# ============================================================================
# Base Fixtures
# ============================================================================

@pytest.fixture(autouse=True)
def reset_logging_and_config():
    """Drop handlers and the config singleton between tests."""
    yield
    from cvss_aggregator.config import ConfigManager

    ConfigManager.reset()
    package_logger = logging.getLogger("cvss_aggregator")
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)
    package_logger.setLevel(logging.NOTSET)


@pytest.fixture
def logger():
    """
    Standard mock logger for all tests.
    """
    from cvss_aggregator.utils.logger import Logger
    return Mock(spec=Logger)


@pytest.fixture
def default_config():
    from cvss_aggregator.config import Config
    return Config()


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def openplc_path() -> Path:
    return FIXTURES / "openplc_v3.json"


@pytest.fixture
def insider_path() -> Path:
    return FIXTURES / "insider_context.json"


@pytest.fixture
def openplc_graph(openplc_path):
    from cvss_aggregator.ingest import load_graph
    return load_graph(openplc_path)


@pytest.fixture
def insider_context(insider_path):
    from cvss_aggregator.ingest import load_context
    return load_context(insider_path)


@pytest.fixture
def open_context():
    from cvss_aggregator.ingest import load_context
    return load_context(FIXTURES / "open_context.json")


@pytest.fixture
def openplc_assessment(openplc_graph, insider_context):
    from cvss_aggregator.aggregation import assess
    return assess(openplc_graph, insider_context)


@pytest.fixture
def malformed_files() -> list[Path]:
    files = sorted((FIXTURES / "malformed").iterdir())
    assert len(files) >= 10
    return files
