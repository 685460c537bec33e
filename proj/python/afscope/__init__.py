"""Grounded layering, solutions and critical attack sets for abstract
argumentation frameworks.

Results come back as plain dicts decoded from the same JSON documents the
CLI and HTTP service emit.
"""

import json as _json
from pathlib import Path as _Path

from . import _core
from ._core import (
    Cancelled,
    Error,
    Framework,
    InvalidInput,
    LimitError,
    OutOfRange,
    ParseError,
    dot,
    parse,
    serialize,
)

__all__ = [
    "Cancelled",
    "Error",
    "Framework",
    "InvalidInput",
    "LimitError",
    "OutOfRange",
    "ParseError",
    "classify",
    "dot",
    "explain",
    "grounded",
    "layout",
    "load",
    "parse",
    "serialize",
    "solutions",
    "what_if",
]

_EXTENSIONS = {".apx": "apx", ".tgf": "tgf", ".json": "json"}


def load(path, format=None):
    """Parse a framework file; the format defaults to the file extension."""
    path = _Path(path)
    if format is None:
        format = _EXTENSIONS.get(path.suffix.lower())
        if format is None:
            raise InvalidInput(f"cannot infer the format of {path}; pass format=")
    return parse(path.read_text(encoding="utf-8"), format)


def grounded(framework):
    """{"labels": {id: label}, "lengths": {id: int | "inf"}}"""
    return _json.loads(_core.grounded_json(framework))


def solutions(framework, semantics="stable", max_solutions=10_000):
    return _json.loads(_core.solutions_json(framework, semantics, max_solutions))


def classify(framework):
    """Edge classes of the grounded labelling."""
    return _json.loads(_core.classification_json(framework))


def explain(framework, index, semantics="stable", candidates="failing", **bounds):
    """Critical attack sets of solution `index`. Bounds: max_delta,
    max_tests, max_results."""
    return _json.loads(
        _core.explanation_json(framework, index, semantics, candidates, **bounds)
    )


def what_if(framework, suspend):
    """Layout document after suspending the given (attacker, target) pairs."""
    return _json.loads(_core.what_if_json(framework, [tuple(p) for p in suspend]))


def layout(framework, solution=None, delta=None, semantics="stable"):
    return _json.loads(_core.layout_json(framework, solution, delta, semantics))
