"""
Typed errors raised by the grassmann toolkit.

Every error derives from ValueError so that code written against plain
ValueError keeps working. Errors that point at a concrete offending object
carry it in the `witness` attribute.
"""


class GrassmannError(ValueError):
    """Base class of every domain error in this package."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InfeasibleParameters(GrassmannError):
    """Classical parameters that produce a non-positive b_i or c_i."""


class InconsistentArray(GrassmannError):
    """An intersection array whose p^h_ij come out negative or fractional."""


class NonIntegralCount(GrassmannError):
    """A triple-intersection formula that does not evaluate to a count."""


class NotPrimePower(GrassmannError):
    pass


class UnsupportedOrder(GrassmannError):
    pass


class TooLarge(GrassmannError):
    """The requested construction exceeds the desk-scale bounds."""


class Disconnected(GrassmannError):
    pass


class NotDistanceRegular(GrassmannError):
    """The witness is the first pair (x, y) whose counts deviate."""


class NotAtDistanceTwo(GrassmannError):
    pass


class NonConstantCount(GrassmannError):
    """A per-vertex count that differs from the spectral prediction."""


class CliqueExplosion(GrassmannError):
    pass


class EmptyWindow(GrassmannError):
    """No kappa satisfies the line threshold window for the given (q, r)."""


class SingularSystem(GrassmannError):
    pass
