"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class KroneckerError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameter(KroneckerError, ValueError):
    """An argument is outside the documented domain (n < 3, even r, zero vector, ...)."""


class ContractViolation(KroneckerError):
    """A post-condition of a functor or solver did not hold.

    Raised for instance when a reflection functor meets a module with a
    projective or injective summand, so the dimension vector of the result
    is not the Coxeter image.
    """


class ConstructionError(KroneckerError):
    """A brick construction produced a representation that fails its certificate."""

    def __init__(self, message, case_trace=None):
        super().__init__(message)
        self.case_trace = list(case_trace or [])


class TheoremViolation(KroneckerError):
    """A computation contradicts a proven bound, e.g. more than two modules of one length."""
