"""Shared constants for JSON report emission."""

SCHEMA_VERSION = "rankmetric-report.v1"
