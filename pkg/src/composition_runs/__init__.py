"""Longest runs of equal parts in random integer compositions."""

__version__ = "0.1.0"

TOOL_NAME = "composition-runs"
SCHEMA_ID = "composition-runs/v1"
