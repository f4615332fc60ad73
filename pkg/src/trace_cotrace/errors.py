"""Exception hierarchy shared across the package."""


class TraceCotraceError(Exception):
    """Base class for all errors raised by this package."""


class ZeroInverseError(TraceCotraceError, ZeroDivisionError):
    """Inversion of the zero element was requested."""


class ZeroArgumentError(TraceCotraceError):
    """A Kloosterman sum was requested for u = 0."""


class NonMonicError(TraceCotraceError):
    """A polynomial that must be monic is not."""


class ConductorMismatchError(TraceCotraceError):
    """Cyclotomic operands live over different conductors."""


class NotRationalError(TraceCotraceError):
    """A cyclotomic number expected to be rational has nonzero zeta-coefficients."""


class BadAutomorphismError(TraceCotraceError):
    """zeta -> zeta^k is only an automorphism when gcd(k, p) = 1."""


class NotRealError(TraceCotraceError):
    """A value expected to be real is not fixed by complex conjugation."""


class TooLargeError(TraceCotraceError):
    """Field enumeration was requested beyond the configured guard."""


class SingularMatrixError(TraceCotraceError):
    """The matrix has determinant zero."""


class NotPrimitiveError(TraceCotraceError):
    """The supplied element does not generate the multiplicative group."""


class NonIntegerSolutionError(TraceCotraceError):
    """A count came out non-integral; indicates a bug, never a valid outcome."""


class NegativeCountError(TraceCotraceError):
    """A count came out negative; indicates a bug, never a valid outcome."""


class BoundViolationError(TraceCotraceError):
    """A quantity exceeded a bound it provably satisfies; indicates a bug."""


class BadPartitionError(TraceCotraceError):
    """Tally jobs do not form a disjoint cover of the element index range."""
