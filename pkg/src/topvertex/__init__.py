"""Exact engines for the box-counting and stable-pairs topological vertices.

The package computes both vertices as truncated q-Laurent series through
independent pipelines (direct enumeration, honeycomb dimers, double dimers)
and machine-checks the identities tying them together: the wall-crossing
factorisation, the two condensation recurrences, graph-level dimer
condensation, and the closed-form weight bookkeeping.
"""

from .errors import (
    BadNodeChoice,
    BoxOutOfWindow,
    EmptyPartition,
    InvalidIdeal,
    LabelOutOfRange,
    NotPolynomial,
    OddSector,
    Unmatchable,
    WindowUnknown,
)

__all__ = [
    "BadNodeChoice",
    "BoxOutOfWindow",
    "EmptyPartition",
    "InvalidIdeal",
    "LabelOutOfRange",
    "NotPolynomial",
    "OddSector",
    "Unmatchable",
    "WindowUnknown",
]

__version__ = "0.1.0"
