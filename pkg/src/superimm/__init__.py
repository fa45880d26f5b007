"""Exact super-immanant calculus over supercommutative algebras."""

from superimm.superring import (
    Algebra,
    GrassmannPoint,
    Parity,
    SuperPoly,
    TruncatedSeries,
    grassmann_algebra,
)
from superimm.immanants import SuperMatrix, generator_matrix, super_immanant, supertrace
from superimm.verify import CheckReport, sweep

__all__ = [
    "Algebra",
    "CheckReport",
    "GrassmannPoint",
    "Parity",
    "SuperMatrix",
    "SuperPoly",
    "TruncatedSeries",
    "generator_matrix",
    "grassmann_algebra",
    "super_immanant",
    "supertrace",
    "sweep",
]
