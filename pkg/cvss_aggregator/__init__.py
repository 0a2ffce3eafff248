"""CVSS Aggregator - context-corrected severity for composite systems."""

__version__ = "0.1.0"
__package_name__ = "cvss-aggregator"
