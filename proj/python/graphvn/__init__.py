"""Weighted-graph operator algebra toolkit.

Thin convenience layer over the compiled core: graphs go in as dicts, JSON
text, or file paths; results come back as dicts with the same document
schemas the ``graphvn`` CLI prints.
"""

import json as _json
from pathlib import Path as _Path

try:  # installed layout: extension lives inside the package
    from . import _graphvn as _core
except ImportError:  # build-tree layout: extension sits on PYTHONPATH
    import _graphvn as _core

GraphParseError = _core.GraphParseError
UnknownEdgeError = _core.UnknownEdgeError

__all__ = [
    "GraphParseError",
    "UnknownEdgeError",
    "validate",
    "classify",
    "cycle_group",
    "state",
    "moment",
    "eigen_check",
    "tl_check",
    "selftest",
]


def _graph_text(graph):
    """Accept a dict, JSON text, or a path to a JSON file."""
    if isinstance(graph, dict):
        return _json.dumps(graph)
    if isinstance(graph, _Path):
        return graph.read_text()
    if isinstance(graph, str):
        if graph.lstrip().startswith("{"):
            return graph
        return _Path(graph).read_text()
    raise TypeError("graph must be a dict, JSON text, or a file path")


def _word_list(word):
    if isinstance(word, str):
        return [part for part in word.split(",") if part]
    return list(word)


def validate(graph):
    return _json.loads(_core.validate(_graph_text(graph)))


def classify(graph, normalize=False, base=""):
    return _json.loads(_core.classify(_graph_text(graph), normalize, base))


def cycle_group(graph):
    return _json.loads(_core.cycle_group(_graph_text(graph)))


def state(graph, base=""):
    return _json.loads(_core.state(_graph_text(graph), base))


def moment(graph, word, depth=6, tol=1e-9, base="", max_entries=None):
    kwargs = {} if max_entries is None else {"max_entries": max_entries}
    return _json.loads(
        _core.moment(_graph_text(graph), _word_list(word), depth, tol, base,
                     **kwargs))


def eigen_check(graph, edge, word, base=""):
    return _json.loads(
        _core.eigen_check(_graph_text(graph), edge, _word_list(word), base))


def tl_check(graph_a, graph_b, max_n=3):
    return _json.loads(
        _core.tl_check(_graph_text(graph_a), _graph_text(graph_b), max_n))


def selftest():
    return _json.loads(_core.selftest())
