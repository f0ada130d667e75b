"""Exception hierarchy for the library.

Every error raised on purpose derives from :class:`HyperinvError`, so callers
(the CLI in particular) can map error classes to exit codes without catching
bare exceptions.
"""


class HyperinvError(Exception):
    """Base class for all library errors."""


class DomainMismatchError(HyperinvError):
    """Arithmetic attempted between values of different coefficient domains."""


class InvalidBoundError(HyperinvError):
    """Reversal window smaller than the polynomial degree."""


class UndefinedResultantError(HyperinvError):
    """Resultant of the zero polynomial is undefined."""


class InvalidDegreeError(HyperinvError):
    """Operation requires a different degree (e.g. discriminant needs deg >= 2)."""


class DegenerateCurveError(HyperinvError):
    """Defining polynomial is not squarefree or inconsistent with the genus."""


class NotNormalizableError(HyperinvError):
    """No monic even model with nonzero constant term exists over the rationals."""


class NotInLocusError(HyperinvError):
    """No extra involution was detected over the rationals."""


class DegenerateLocusError(HyperinvError):
    """Both outer coefficients vanish; the dihedral invariants all degenerate to 0."""


class InvalidRootError(HyperinvError):
    """Scaling element does not have exact multiplicative order 2g+2."""


class InvalidComparisonError(HyperinvError):
    """Invariant tuples of different genus cannot be compared."""


class NotApplicableError(HyperinvError):
    """Predicate only defined for odd genus."""


class PreconditionError(HyperinvError):
    """Model family precondition violated."""


class DegenerateModelError(HyperinvError):
    """Constructed model polynomial is not squarefree."""


class VerificationError(HyperinvError):
    """Model verification pipeline failed; details in the message."""


class NumericFailureError(HyperinvError):
    """Floating-point root finding failed on an ill-conditioned input."""
