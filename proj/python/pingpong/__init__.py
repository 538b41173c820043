"""Ping-pong configurations of free groups acting on the circle."""

import json

from . import _core
from ._core import BoundTooLarge, ExtractionError, FormatError, InternalError, InvalidConfiguration

__all__ = [
    "BoundTooLarge",
    "ExtractionError",
    "FormatError",
    "InternalError",
    "InvalidConfiguration",
    "canonical_form",
    "circular_order",
    "classify",
    "configuration",
    "extract",
    "linear_compare",
    "realize",
    "run_cli",
    "survey",
    "validate",
]


def configuration(rank, word, offsets):
    """Build a configuration dict from a word string such as "abAB"."""
    if isinstance(offsets, (list, tuple)):
        offsets = {chr(ord("a") + i): o for i, o in enumerate(offsets)}
    return {"rank": rank, "word": list(word), "offsets": dict(offsets)}


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def validate(config):
    return _core.validate(_text(config))


def classify(config):
    return json.loads(_core.classify(_text(config)))


def canonical_form(config):
    return json.loads(_core.canonical_form(_text(config)))


def realize(config, layout="standard"):
    return json.loads(_core.realize(_text(config), layout))


def extract(action):
    return json.loads(_core.extract(_text(action)))


def circular_order(config, g1, g2, g3, layout="standard"):
    return _core.circular_order(_text(config), g1, g2, g3, layout)


def linear_compare(config, u, v, layout="standard"):
    return _core.linear_compare(_text(config), u, v, layout)


def survey(rank, max_k=None, bound=None, ceiling=10_000_000):
    return json.loads(_core.survey(rank, max_k, bound, ceiling))


def run_cli(*args):
    return _core.run_cli([str(a) for a in args])
