"""Cluster categories of Dynkin type A and D, cluster-tilted algebras and hammocks."""

import json

from ._core import Category, EngineError, InvalidTilting

__all__ = ["Category", "EngineError", "InvalidTilting", "verify"]


def verify(category, tilting):
    """Main-theorem report for one tilting object, as a dict."""
    return json.loads(category.report_json(list(tilting)))
