"""Exception hierarchy.

``RepringError`` covers everything the caller can provoke (bad input,
wrong group, non-invariant element).  ``InternalError`` is reserved for
conditions that are mathematically impossible when the library is
correct (a nonzero remainder in an exact division, a reduction that
fails to terminate); seeing one is a bug, not a usage error.
"""


class RepringError(Exception):
    """Base class for user-facing errors."""


class DimensionError(RepringError):
    """Coordinate length does not match the group's rank."""


class LatticeError(RepringError):
    """Coordinates violate a lattice constraint (parity, spin context)."""


class GroupMismatchError(RepringError):
    """Operands belong to different groups."""


class ExprSyntaxError(RepringError):
    """Expression text failed to parse; carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownVariableError(ExprSyntaxError):
    """Variable name not defined for the group in question."""


class SubstitutionError(RepringError):
    """Monomial substitution map is not a lattice map / not invertible."""


class NotInvariantError(RepringError):
    """Element is not Weyl-invariant; carries a violating group element."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BasisSizeError(RepringError):
    """Candidate basis has the wrong number of elements."""


class ExactDivisionError(RepringError):
    """Exact division has a nonzero remainder."""


class InternalError(Exception):
    """An internal invariant failed; indicates a library bug."""
