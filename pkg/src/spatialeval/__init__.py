"""Spatial task verification engine.

Seeded instance generators, artefact parsers, and deterministic
checkers/simulators that grade structured answers to geometric,
topological and planning puzzles on a [0, 1] scale.
"""

__version__ = "0.1.0"
