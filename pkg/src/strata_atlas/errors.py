"""Exception hierarchy shared by all modules."""


class StrataError(Exception):
    """Base class for errors raised by strata_atlas."""


class ContextMismatchError(StrataError):
    """Elements from two different group contexts were combined."""


class CapExceededError(StrataError):
    """An element lies outside the materialized length ball."""


class LatticeError(StrataError, ValueError):
    """A coweight violates the lattice constraints of the model."""


class MembershipError(StrataError, ValueError):
    """An element is not in the set an operation requires."""


class InvalidRepresentativeError(MembershipError):
    """An element is not the required kind of coset representative."""


class DomainError(StrataError, ValueError):
    """An operation was applied outside its domain of definition."""


class ConsistencyError(StrataError):
    """An internal cross-check failed; indicates a bug, not bad input."""
