"""Exact zero-torsion computations on low-dimensional Lie algebras.

Matrix entries may be ints, strings like "3/4", or fractions.Fraction values.
"""

import json
from fractions import Fraction

from . import _core
from ._core import TorsionlabError

__all__ = [
    "TorsionlabError",
    "classify",
    "cr_verdict",
    "equations",
    "equivalent",
    "orbit",
    "reproduce_paper",
    "run_cli",
    "verify",
]


def _entry(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (int, str)):
        return str(x)
    raise TypeError(f"matrix entries must be int, str or Fraction, got {type(x).__name__}")


def _rows(matrix):
    return [[_entry(x) for x in row] for row in matrix]


def equations(algebra="heisenberg3", check_jacobi=True):
    """Nonzero torsion equations as (label, polynomial) pairs."""
    return _core.equations(algebra, check_jacobi)


def verify(algebra, matrix, check_jacobi=True):
    return json.loads(_core.verify(algebra, _rows(matrix), check_jacobi))


def classify(algebra, matrix):
    return json.loads(_core.classify(algebra, _rows(matrix)))


def equivalent(algebra, matrix1, matrix2):
    return json.loads(_core.equivalent(algebra, _rows(matrix1), _rows(matrix2)))


def orbit(vector):
    return json.loads(_core.orbit([_entry(x) for x in vector]))


def cr_verdict(algebra, matrix):
    return json.loads(_core.cr_verdict(algebra, _rows(matrix)))


def reproduce_paper(seed=20240611):
    return json.loads(_core.reproduce_paper(seed))


def run_cli(*args):
    """Runs the command-line front end in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
