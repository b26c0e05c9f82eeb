# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0


class UnsupportedFormatError(Exception):
    """Raised when a loaded file is not in a supported format."""

    __module__ = "pertalex"


class SchemaError(Exception):
    """Raised when the data does not validate against a given schema."""

    __module__ = "pertalex"


class AmbiguousSchemaNameError(Exception):
    """Raised when a schema key applies to more than one schema file in /schemas."""

    __module__ = "pertalex"


class InvalidBraidError(ValueError):
    """Raised when a braid word references a generator outside its strand count."""

    __module__ = "pertalex"


class InvalidDiagramError(ValueError):
    """Raised when crossing data does not trace a single long component."""

    __module__ = "pertalex"


class NotAKnotError(ValueError):
    """Raised when a braid closure is a link with more than one component."""

    __module__ = "pertalex"


class RegionError(ValueError):
    """Raised when a contraction region leaks transitions to the outside."""

    __module__ = "pertalex"


class RegionCycleError(RegionError):
    """Raised when a region required to be acyclic admits a cycle."""

    __module__ = "pertalex"


class ZeroDenominatorError(ZeroDivisionError):
    """Raised when a rational function is built with a zero denominator."""

    __module__ = "pertalex"


class ShapeError(ValueError):
    """Raised when matrix dimensions do not fit the requested operation."""

    __module__ = "pertalex"


class SingularMatrixError(ArithmeticError):
    """Raised when inverting a matrix whose determinant is zero."""

    __module__ = "pertalex"


class GrainError(ArithmeticError):
    """Raised when half-integer exponents appear where integer exponents are required."""

    __module__ = "pertalex"


class SeriesExpansionError(ArithmeticError):
    """Raised when a rational function has no expansion in Z((T)) around T = 0."""

    __module__ = "pertalex"


class BookkeepingError(ArithmeticError):
    """Raised when a knot invariant ends up with half exponents or fractional coefficients."""

    __module__ = "pertalex"


class EnumerationGuardError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed its size guard."""

    __module__ = "pertalex"


class NoConwaySolutionError(ValueError):
    """Raised when a polynomial is not the image of a polynomial in z = x - 1/x."""

    __module__ = "pertalex"


class ConjectureCounterexampleError(ArithmeticError):
    """Raised when a conjectured symmetry or divisibility property fails.

    Parameters
    ----------
    message: str
        Description of the failed property.
    value: object, optional
        The offending value, kept so reports can show it. Default is None.
    """

    __module__ = "pertalex"

    def __init__(self, message: str, value: object = None):
        super().__init__(message)
        self.value = value
