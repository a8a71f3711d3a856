"""Bundled ``.pasp`` programs used by the tests and demos."""
from __future__ import annotations

from importlib import resources

from ..parser import parse

NAMES = (
    "choice",
    "guarded",
    "medical",
    "kidney",
    "kidney_constrained",
    "p_inc",
    "disjunctive_uniform",
    "shifted_normal",
)


def path(name: str):
    return resources.files(__name__) / f"{name}.pasp"


def text(name: str) -> str:
    return path(name).read_text(encoding="utf-8")


def load(name: str):
    return parse(text(name))
