"""Witness-producing subdivision finders for chromatic digraphs."""

try:
    from ._subdiv import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _subdiv import *  # noqa: F401,F403  (build-tree layout)
