"""Tests for CVSS Aggregator."""
