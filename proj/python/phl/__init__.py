"""Python bindings for the phl C++ core.

Model specs and cubes are passed as dicts (or JSON strings) in the same
schema the ``phl`` command line tool reads and writes.
"""

import json
from fractions import Fraction

from . import _phl
from ._phl import LefschetzError, ModelError, NotNilpotent, ParseError

__all__ = [
    "LefschetzError",
    "ModelError",
    "NotNilpotent",
    "ParseError",
    "check",
    "cube",
    "diamond_and_betti",
    "jordan_partition",
    "model_summary",
    "render",
    "weight_filtration",
]


def _doc(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def _matrix(rows):
    return [[str(Fraction(x)) for x in row] for row in rows]


def model_summary(spec):
    return json.loads(_phl.model_summary(_doc(spec)))


def cube(doc):
    """Cube of a model spec, as {"n", "entries"}."""
    return json.loads(_phl.cube(_doc(doc)))


def render(doc, format="ascii"):
    return _phl.render(_doc(doc), format)


def check(doc):
    """Check report for a model spec or a cube."""
    return json.loads(_phl.check(_doc(doc)))


def diamond_and_betti(doc):
    hodge, betti = _phl.diamond_and_betti(_doc(doc))
    return {(p, q): h for p, q, h in hodge}, list(betti)


def weight_filtration(matrix):
    """(center, graded dims, axioms hold) for a nilpotent rational matrix."""
    center, dims, ok = _phl.weight_filtration(_matrix(matrix))
    return center, list(dims), ok


def jordan_partition(matrix):
    return list(_phl.jordan_partition(_matrix(matrix)))
