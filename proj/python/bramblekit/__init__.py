"""Brambles, webs, grid-like minors and perfect brambles.

Operations return witness documents as dicts; ``verify`` re-checks one
against a graph and returns None or the first violation.
"""

import json

from . import _core
from ._core import (
    CapacityError,
    Graph,
    brute_force_longest_path,
    brute_force_vertex_cover,
    complete,
    grid,
    path_graph,
    random_graph,
)

__all__ = [
    "CapacityError",
    "Graph",
    "brute_force_longest_path",
    "brute_force_vertex_cover",
    "complete",
    "default_constants",
    "find_bramble",
    "fpt_solve",
    "gridlike",
    "grid",
    "path_graph",
    "perfect",
    "random_graph",
    "treewidth",
    "verify",
    "web",
]


def _config(config):
    return "" if config is None else json.dumps(config)


def _load(text):
    return None if text is None else json.loads(text)


def default_constants():
    return json.loads(_core.default_constants())


def treewidth(g, exact=True, config=None):
    return _load(_core.treewidth(g, exact, _config(config)))


def find_bramble(g, seed=0, config=None):
    return _load(_core.find_bramble(g, seed, _config(config)))


def web(g, k, h, config=None):
    return _load(_core.web(g, k, h, _config(config)))


def gridlike(g, p, seed=0, config=None):
    return _load(_core.gridlike(g, p, seed, _config(config)))


def perfect(g, order, seed=0, config=None):
    return _load(_core.perfect(g, order, seed, _config(config)))


def fpt_solve(g, parameter, k, seed=0, config=None):
    return _load(_core.fpt_solve(g, parameter, k, seed, _config(config)))


def verify(g, doc):
    return _core.verify(g, json.dumps(doc))
