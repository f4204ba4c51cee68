"""Exception taxonomy.

Every error raised on purpose by this package derives from GermkitError, so
callers (and the CLI) can distinguish computation failures from bugs.
"""


class GermkitError(Exception):
    """Base class for all errors raised by germkit."""


class DivisionByZero(GermkitError):
    """Division or inversion of a zero field scalar."""


class MixedCharacteristic(GermkitError):
    """Scalars from fields of different characteristic were combined."""


class InvalidCharacteristic(GermkitError):
    """Characteristic is not zero or a prime."""


class DimensionMismatch(GermkitError):
    """Exponent or weight vector length does not match the variable count."""


class RingMismatch(GermkitError):
    """Operands belong to different ring contexts."""


class ExponentOverflow(GermkitError):
    """An exponent left the supported range (< 2**16)."""


class ZeroPolynomial(GermkitError):
    """Operation is undefined for the zero polynomial."""


class ZeroElement(GermkitError):
    """Operation is undefined for the zero module element."""


class ComponentMismatch(GermkitError):
    """Module components disagree where equality is required."""


class ModuleRankMismatch(GermkitError):
    """Module elements of different rank were combined."""


class IndexOutOfRange(GermkitError):
    """A variable or component index is out of range."""


class UnknownVariable(GermkitError):
    """A name does not denote a ring variable."""


class WrongVariableCount(GermkitError):
    """The operation needs a specific number of ring variables."""


class DuplicateVariable(GermkitError):
    """The same variable name was declared twice."""


class UnknownOrderingToken(GermkitError):
    """An ordering token is not recognized."""


class BadOrdering(GermkitError):
    """Ordering blocks do not partition the variables, or weights are bad."""


class ParseError(GermkitError):
    """Syntax error with source position."""

    def __init__(self, message, line=1, column=1):
        super().__init__("%s (line %d, column %d)" % (message, line, column))
        self.bare_message = message
        self.line = line
        self.column = column


class ModeOrderingMismatch(GermkitError):
    """Reduction mode is incompatible with the ring ordering."""


class ResourceExhausted(GermkitError):
    """The reduction ceiling was hit before the computation finished."""


class InfiniteDimensional(GermkitError):
    """A finite staircase was required but the quotient is not finite."""


class NonIsolated(GermkitError):
    """The germ does not have an isolated singularity where one is required."""


class ParameterOutOfRange(GermkitError):
    """A family parameter violates its documented constraints."""


class DegreeOverflow(GermkitError):
    """A differential form degree left the range supported in three variables."""
