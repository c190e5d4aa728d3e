"""Exception hierarchy shared by the whole package.

Checkers never raise on mathematical failure (failures are Report data);
these exceptions cover malformed input and violated construction
preconditions only.
"""


class BihomError(Exception):
    """Base class for all package errors."""


class BadScalar(BihomError):
    """A scalar literal is malformed or has a zero denominator."""


class DimensionMismatch(BihomError):
    """Operands live on spaces of different dimension."""


class SingularMap(BihomError):
    """A map that must be invertible has zero determinant."""


class MissingUnit(BihomError):
    """An operation requires a unit element that is absent."""


class MissingCounit(BihomError):
    """An operation requires a counit that is absent."""


class NotMorphism(BihomError):
    """A twist map fails to be an algebra/coalgebra morphism."""


class NonCommutingMaps(BihomError):
    """Two structure maps that must commute do not."""


class NonMultiplicativeMap(BihomError):
    """A map that must be multiplicative is not."""


class NotInvariant(BihomError):
    """An element of A(x)A or a bilinear form is not map-invariant."""


class NotYBESolution(BihomError):
    """A tensor fails the Yang-Baxter residual required here."""


class NotQuasitriangular(BihomError):
    """The given r does not induce the requested quasitriangular structure."""


class NotCoquasitriangular(BihomError):
    """The given form does not induce the requested coquasitriangular structure."""


class NotBialgebra(BihomError):
    """The input record fails the bialgebra axioms required here."""


class WeightMismatch(BihomError):
    """Tensor factors carry different weights."""


class PreconditionFailed(BihomError):
    """A named construction precondition does not hold."""


class SearchSpaceTooLarge(BihomError):
    """The requested exhaustive search exceeds the candidate guard."""


class ParseError(BihomError):
    """A model file is not valid JSON or violates the schema."""


class IndexOutOfRange(BihomError):
    """A sparse tensor entry addresses a basis index outside the space."""
