"""Exact pushable/oriented chromatic numbers of small oriented graphs and
mechanical verification of the reducibility certificates behind the
degree-constrained upper bounds."""

from .graphs import OrientedGraph, GraphError, GraphParseError

__all__ = ["OrientedGraph", "GraphError", "GraphParseError"]
__version__ = "0.1.0"
