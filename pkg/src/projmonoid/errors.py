"""Exception hierarchy shared by all modules."""


class ProjMonoidError(Exception):
    """Base class for domain errors raised by the library."""

    #: stable name reported by the CLI
    name = "error"


class DimensionMismatchError(ProjMonoidError, ValueError):
    name = "dimension-mismatch"


class ContainmentError(ProjMonoidError, ValueError):
    name = "containment-violation"


class CommonKernelError(ProjMonoidError, ValueError):
    """Sequence terms share a nonzero common kernel (not in M-tilde-prime)."""

    name = "common-kernel-nonzero"


class InvalidSequenceError(ProjMonoidError, ValueError):
    name = "invalid-sequence"


class NotInMHError(ProjMonoidError, ValueError):
    name = "not-in-M_H"


class NotConvergentError(ProjMonoidError, ValueError):
    name = "not-convergent"


class InvalidHingeError(ProjMonoidError, ValueError):
    name = "invalid-hinge"


class DegreeError(ProjMonoidError, ValueError):
    name = "degree-out-of-range"
