"""Exception types raised across the package.

Every rejected input maps to a distinct class so callers (and the CLI)
can report the violated condition by name.
"""


class PrecfieldError(ValueError):
    """Base class for all validation errors raised by this package."""


# -- coefficient validation ------------------------------------------------

class NonPositiveTheta0(PrecfieldError):
    pass


class NonPositiveTheta2(PrecfieldError):
    pass


class ZeroTheta1(PrecfieldError):
    pass


class DiscriminantViolation(PrecfieldError):
    pass


class NonPositiveXi(PrecfieldError):
    pass


# -- radial calculus -------------------------------------------------------

class UnsupportedOrder(PrecfieldError):
    pass


class NonPositiveRadius(PrecfieldError):
    pass


# -- point sets and matrices -----------------------------------------------

class DimensionMismatch(PrecfieldError):
    pass


class NegativeEpsilon(PrecfieldError):
    pass


class LengthMismatch(PrecfieldError):
    pass


class IndexOutOfRange(PrecfieldError, IndexError):
    pass


class TooLargeForDenseCheck(PrecfieldError):
    pass


# -- lattice simulation and variograms --------------------------------------

class OddLatticeSize(PrecfieldError):
    pass


class LagOutOfRange(PrecfieldError):
    pass


class NonPositiveArgument(PrecfieldError):
    pass


# -- prediction --------------------------------------------------------------

class MissingValues(PrecfieldError):
    pass
